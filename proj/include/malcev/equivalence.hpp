#ifndef MALCEV_EQUIVALENCE_HPP
#define MALCEV_EQUIVALENCE_HPP

#include "malcev/flag.hpp"
#include "malcev/unified.hpp"

namespace malcev {

/// A morphism candidate between two unified products sharing the base
/// algebra: r: V -> M (n x m) and s: V -> V (m x m), acting as
/// psi(x,u) = (x + r(u), s(u)).
struct MorphPair {
  Matrix r;
  Matrix s;
};

/// Evaluates the four compatibility conditions M1..M4 on basis tuples and
/// cross-checks against the bracket-homomorphism property of psi between the
/// two built products.
VerificationReport check_morphism_pair(const ExtendingDatum& d,
                                       const ExtendingDatum& d2, const MorphPair& mp,
                                       int witness_cap = kDefaultWitnessCap);

/// Block matrix [[I, r],[0, s]] on M + V; invertible iff s is.
Matrix psi_map(const MorphPair& mp, int dim_m, int dim_v);

enum class FlagRelation { equiv, cohom };

/// One orbit of one-dimensional extension data under the acting pairs (r,s):
/// representative is the lexicographically least (lam, D) tensor.
struct OrbitClass {
  std::uint64_t rep_code = 0;
  std::uint64_t size = 0;
};

struct ClassificationResult {
  Field field = Field::rationals();
  int dim_m = 0;
  int dim_v = 1;
  std::uint64_t candidates = 0;  // all (lam, D) pairs enumerated
  std::uint64_t total_data = 0;  // those whose flag product is Malcev
  std::vector<OrbitClass> classes_equiv;
  std::vector<OrbitClass> classes_cohom;
  /// Independent recount on structure-constant tables conjugated by the
  /// stabilizing isomorphisms.
  struct CrossCheck {
    std::uint64_t total_data = 0;
    std::uint64_t count_equiv = 0;
    std::uint64_t count_cohom = 0;
  } cross_check;
  bool cohom_refines_equiv = false;

  /// Decodes an orbit representative back into data.
  TwistedDerivation decode(std::uint64_t code, const MalcevAlgebra& M) const;
};

/// Exhaustive classification of one-dimensional extension data of M over
/// GF(p): enumerate all (lam, D), keep the Malcev ones, group them under the
/// acting pairs with invertible scalar s (equiv) and s = 1 (cohom), and
/// recount independently on conjugated extension tables. Both relations are
/// always computed; `relation` selects the emphasized one for callers.
ClassificationResult classify_flag(const MalcevAlgebra& M,
                                   FlagRelation relation = FlagRelation::equiv,
                                   std::uint64_t guard = 100000000ull,
                                   bool parallel = false);

}  // namespace malcev

#endif
