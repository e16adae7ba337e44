#ifndef MALCEV_UNIFIED_HPP
#define MALCEV_UNIFIED_HPP

#include "malcev/algebra.hpp"
#include "malcev/bilinear.hpp"

namespace malcev {

/// The quadruple of bilinear maps defining a product structure on M + V:
/// tl: M x V -> M, tr: M x V -> V, omega: V x V -> M (skew),
/// bracket_v: V x V -> V (skew).
struct ExtendingDatum {
  MalcevAlgebra M;
  std::vector<std::string> basis_v;
  BilinearMap tl;
  BilinearMap tr;
  SkewBilinearMap omega;
  SkewBilinearMap bracket_v;

  int dim_v() const { return static_cast<int>(basis_v.size()); }
  static ExtendingDatum zero(const MalcevAlgebra& M, std::vector<std::string> basis_v);

  /// The complement space as an algebra (V with bracket_v).
  MalcevAlgebra v_algebra() const;

  bool operator==(const ExtendingDatum& o) const;
};

/// The product on M + V:
/// [(x,u),(y,v)] = ([x,y] + x<|v - y<|u + omega(u,v), x|>v - y|>u + [u,v]).
MalcevAlgebra build_unified(const ExtendingDatum& d);

/// Canonical validity verdict: the four-variable Malcev identity evaluated on
/// the built algebra. Check id is "direct".
VerificationReport verify_unified_direct(const ExtendingDatum& d,
                                         int witness_cap = kDefaultWitnessCap);

/// Per-condition diagnostics U1..U11 plus the direct verdict and a
/// conjunction-vs-direct cross-check; disagreements land in `triage`.
VerificationReport diagnose_U(const ExtendingDatum& d,
                              int witness_cap = kDefaultWitnessCap);

/// Idempotent projection of an ambient algebra onto the span of chosen basis
/// vectors, along the span of the others.
struct Projection {
  MalcevAlgebra E;
  std::vector<int> sub;   // indices spanning the subalgebra
  std::vector<int> comp;  // complement indices
  Matrix p;               // dim E x dim E

  static Projection coordinate(const MalcevAlgebra& E, const std::vector<int>& sub);
  static Projection coordinate_names(const MalcevAlgebra& E,
                                     const std::vector<std::string>& sub_names);
};

/// Reads the datum off the projection:
///   x |> u = [x,u] - p([x,u]),  x <| u = p([x,u]),
///   omega(u,v) = p([u,v]),      [u,v]_V = [u,v] - p([u,v]).
/// Throws NotIdempotent / NotASubalgebra / NotMalcev when the projection
/// invariants fail.
ExtendingDatum extract_datum(const Projection& pr);

struct PhiIsoResult {
  bool ok = true;
  std::string detail;  // first failing pair, when any
};

/// Verifies that phi(x,u) = x + u intertwines build_unified(d) with E, is
/// invertible, and stabilizes the subalgebra / co-stabilizes the complement.
PhiIsoResult phi_iso_check(const MalcevAlgebra& E, const Projection& pr,
                           const ExtendingDatum& d);

}  // namespace malcev

#endif
