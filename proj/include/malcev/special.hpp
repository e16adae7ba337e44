#ifndef MALCEV_SPECIAL_HPP
#define MALCEV_SPECIAL_HPP

#include "malcev/unified.hpp"

namespace malcev {

/// Crossed-product data: both factors are algebras, M acts on nothing,
/// tl: M x V -> M and a skew omega: V x V -> M twist the first component.
struct CrossedSystem {
  MalcevAlgebra M;
  MalcevAlgebra V;
  BilinearMap tl;
  SkewBilinearMap omega;

  ExtendingDatum to_datum() const;
};

/// Skew-crossed-product data: tr: M x V -> V and omega: V x V -> M.
struct SkewCrossedSystem {
  MalcevAlgebra M;
  MalcevAlgebra V;
  BilinearMap tr;
  SkewBilinearMap omega;

  ExtendingDatum to_datum() const;
};

/// Matched-pair data: both actions, no twist.
struct MatchedPairData {
  MalcevAlgebra M;
  MalcevAlgebra V;
  BilinearMap tr;  // M x V -> V
  BilinearMap tl;  // M x V -> M

  ExtendingDatum to_datum() const;
};

/// Builds the crossed product and reports the CP1..CP6 diagnostics together
/// with the direct verdict. Throws FactorNotMalcev unless both factors pass
/// the four-variable identity.
std::pair<MalcevAlgebra, VerificationReport> crossed_product(
    const CrossedSystem& cs, int witness_cap = kDefaultWitnessCap);

/// Skew-crossed product with SP1..SP9 diagnostics plus direct verdict.
std::pair<MalcevAlgebra, VerificationReport> skew_crossed_product(
    const SkewCrossedSystem& ss, int witness_cap = kDefaultWitnessCap);

/// MP1..MP6 diagnostics plus the direct verdict of the bicrossed product.
VerificationReport matched_pair_check(const MatchedPairData& mp,
                                      int witness_cap = kDefaultWitnessCap);

/// The double cross product bracket on M + V (total construction).
MalcevAlgebra bicrossed_product(const MatchedPairData& mp);

}  // namespace malcev

#endif
