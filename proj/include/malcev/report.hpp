#ifndef MALCEV_REPORT_HPP
#define MALCEV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malcev/linalg.hpp"

namespace malcev {

/// A failing instance: the basis-index tuple plus both evaluated sides.
struct Witness {
  std::vector<int> idx;
  Vec lhs;
  Vec rhs;
};

/// Verdict for one named condition, with capped witnesses for failures.
struct CheckResult {
  std::string id;
  bool passed = true;
  /// False when the implemented condition deviates from the source text
  /// (typed repair, dropped undefined map, reassociation); `note` says how.
  bool as_printed = true;
  std::string note;
  /// Verdict of the verbatim variant, when one is tracked separately.
  std::optional<bool> as_printed_verdict;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
};

/// Disagreement between a condition list and the direct verdict.
struct TriageRecord {
  std::string condition_id;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<TriageRecord> triage;

  bool overall() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// Default cap on recorded witnesses per condition.
inline constexpr int kDefaultWitnessCap = 16;

/// Collects failures for one condition while iterating basis tuples in
/// lexicographic order, so recorded witnesses are deterministic.
class CheckBuilder {
 public:
  CheckBuilder(std::string id, int cap = kDefaultWitnessCap) : cap_(cap) {
    res_.id = std::move(id);
  }
  void repair(const std::string& note) {
    res_.as_printed = false;
    res_.note = res_.note.empty() ? note : res_.note + "; " + note;
  }
  void fail(std::vector<int> idx, Vec lhs, Vec rhs) {
    res_.passed = false;
    ++res_.failures;
    if (static_cast<int>(res_.witnesses.size()) < cap_)
      res_.witnesses.push_back({std::move(idx), std::move(lhs), std::move(rhs)});
  }
  void check(std::vector<int> idx, const Vec& lhs, const Vec& rhs) {
    if (lhs != rhs) fail(std::move(idx), lhs, rhs);
  }
  CheckResult take() { return std::move(res_); }

 private:
  int cap_;
  CheckResult res_;
};

}  // namespace malcev

#endif
