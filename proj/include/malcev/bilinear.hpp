#ifndef MALCEV_BILINEAR_HPP
#define MALCEV_BILINEAR_HPP

#include <vector>

#include "malcev/linalg.hpp"

namespace malcev {

/// Dense coefficient tensor for a bilinear map A x B -> C between coordinate
/// spaces, stored as the image of every basis pair.
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(const Field& f, int dim_a, int dim_b, int dim_c)
      : f_(f), da_(dim_a), db_(dim_b), dc_(dim_c), vals_(dim_a * dim_b, Vec(f, dim_c)) {}

  const Field& field() const { return f_; }
  int dim_a() const { return da_; }
  int dim_b() const { return db_; }
  int dim_c() const { return dc_; }

  const Vec& at(int a, int b) const { return vals_[a * db_ + b]; }
  void set(int a, int b, const Vec& v);

  Vec apply(const Vec& a, const Vec& b) const;
  bool is_zero() const;
  bool operator==(const BilinearMap& o) const;

 private:
  Field f_ = Field::rationals();
  int da_ = 0, db_ = 0, dc_ = 0;
  std::vector<Vec> vals_;
};

/// Skew-symmetric bilinear map A x A -> C; pairs a < b are stored, the swap is
/// the negation and the diagonal is zero by construction.
class SkewBilinearMap {
 public:
  SkewBilinearMap() = default;
  SkewBilinearMap(const Field& f, int dim_a, int dim_c)
      : f_(f), da_(dim_a), dc_(dim_c), vals_(dim_a * (dim_a - 1) / 2, Vec(f, dim_c)) {}

  const Field& field() const { return f_; }
  int dim_a() const { return da_; }
  int dim_c() const { return dc_; }

  const Vec& pair(int a, int b) const { return vals_[pair_index(a, b)]; }
  void set_pair(int a, int b, const Vec& v);

  Vec at(int a, int b) const;  // any a, b
  Vec apply(const Vec& a, const Vec& b) const;
  bool is_zero() const;
  bool operator==(const SkewBilinearMap& o) const;

  int pair_index(int a, int b) const { return (b * (b - 1)) / 2 + a; }

 private:
  Field f_ = Field::rationals();
  int da_ = 0, dc_ = 0;
  std::vector<Vec> vals_;
};

}  // namespace malcev

#endif
