#ifndef MALCEV_DETAIL_CONDITION_HPP
#define MALCEV_DETAIL_CONDITION_HPP

#include <functional>
#include <utility>

#include "malcev/report.hpp"
#include "malcev/unified.hpp"

namespace malcev::detail {

/// Shorthand evaluators over a datum; arguments and results are coordinate
/// vectors (dim n in the base algebra, dim m in the complement).
struct Ops {
  const ExtendingDatum& d;
  Vec bm(const Vec& x, const Vec& y) const { return d.M.bracket(x, y); }
  Vec bv(const Vec& u, const Vec& v) const { return d.bracket_v.apply(u, v); }
  Vec tl(const Vec& x, const Vec& u) const { return d.tl.apply(x, u); }
  Vec tr(const Vec& x, const Vec& u) const { return d.tr.apply(x, u); }
  Vec om(const Vec& u, const Vec& v) const { return d.omega.apply(u, v); }
  Vec zm() const { return Vec(d.M.field(), d.M.dim()); }
  Vec zv() const { return Vec(d.M.field(), d.dim_v()); }
};

/// A tabulated compatibility condition: slot pattern over {M, V} and an
/// evaluator returning both sides on a basis tuple.
struct Condition {
  const char* id;
  const char* pattern;  // e.g. "MMMV"; length gives the arity
  const char* repair;   // nullptr when evaluated verbatim
  std::function<std::pair<Vec, Vec>(const Ops&, const std::vector<Vec>&)> eval;
};

/// Evaluates one condition over every basis tuple of its pattern,
/// lexicographic order, recording failures.
CheckResult run_condition(const Ops& ops, const Condition& cond, int witness_cap);

/// Appends the direct verdict, the conjunction cross-check and triage records
/// to a report holding per-condition checks.
void finish_with_direct(VerificationReport& rep, const ExtendingDatum& d,
                        const char* list_name, int witness_cap);

}  // namespace malcev::detail

#endif
