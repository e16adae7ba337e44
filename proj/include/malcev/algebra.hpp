#ifndef MALCEV_ALGEBRA_HPP
#define MALCEV_ALGEBRA_HPP

#include <string>
#include <vector>

#include "malcev/report.hpp"

namespace malcev {

/// Finite-dimensional anticommutative algebra given by structure constants.
/// Only products of basis pairs i < j are stored; [e_j, e_i] is the negation
/// and [e_i, e_i] = 0, so anticommutativity holds by construction.
class MalcevAlgebra {
 public:
  MalcevAlgebra(Field f, std::vector<std::string> basis_names);
  static MalcevAlgebra abelian(const Field& f, int dim);
  static std::vector<std::string> default_names(int dim, const std::string& stem = "e");

  const Field& field() const { return f_; }
  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int name_index(const std::string& name) const;  // -1 when absent

  /// Structure-constant column for i < j.
  const Vec& pair_product(int i, int j) const { return table_[pair_index(i, j)]; }
  void set_pair_product(int i, int j, const Vec& value);

  /// [e_i, e_j] for arbitrary i, j.
  Vec basis_bracket(int i, int j) const;
  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;
  /// J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y].
  Vec jacobiator(const Vec& x, const Vec& y, const Vec& z) const;

  bool operator==(const MalcevAlgebra& o) const;

  int pair_index(int i, int j) const { return (j * (j - 1)) / 2 + i; }

 private:
  Field f_;
  std::vector<std::string> names_;
  std::vector<Vec> table_;  // indexed by pair_index(i,j), i < j
};

/// Evaluates J(x,y,[x,z]) = [J(x,y,z), x] on all basis triples.
VerificationReport check_malcev_eq2(const MalcevAlgebra& A,
                                    int witness_cap = kDefaultWitnessCap);

/// Evaluates the four-variable identity
/// [[x,z],[y,w]] = [[[x,y],z],w] + [[[y,z],w],x] + [[[z,w],x],y] + [[[w,x],y],z]
/// on all basis quadruples.
VerificationReport check_malcev_eq3(const MalcevAlgebra& A,
                                    int witness_cap = kDefaultWitnessCap);

/// Early-exit variant of check_malcev_eq3 for enumeration sweeps.
bool malcev_eq3_holds(const MalcevAlgebra& A);

/// True iff the Jacobiator vanishes on all basis triples.
bool is_lie(const MalcevAlgebra& A);

/// The four-dimensional non-Lie Malcev algebra
/// [e1,e2]=e2, [e1,e3]=e3, [e1,e4]=-e4, [e2,e3]=e4.
MalcevAlgebra non_lie_dim4(const Field& f);

}  // namespace malcev

#endif
