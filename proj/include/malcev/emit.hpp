#ifndef MALCEV_EMIT_HPP
#define MALCEV_EMIT_HPP

#include <string>
#include <vector>

#include "malcev/report.hpp"

#include "json.hpp"

namespace malcev {

enum class ReportFormat { text, json };

/// Basis names used to render witness tuples and evaluated sides.
struct NamingContext {
  std::vector<std::string> m_names;
  std::vector<std::string> v_names;
  std::vector<std::string> ambient_names;  // base then complement, when built
};

/// One emitted report: command echo, named checks, machine extras.
struct ReportDocument {
  std::string command;
  std::uint64_t seed = 0;
  VerificationReport report;
  NamingContext names;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();

  bool overall() const { return report.overall(); }
};

/// Slot pattern ('M'/'V'/'E' per tuple position) for a condition id, used to
/// resolve witness indices to names; empty when unknown.
std::string pattern_of(const std::string& condition_id);

/// Codomain tag for a condition id: 'M', 'V', 'E' or 's' (scalar).
char codomain_of(const std::string& condition_id);

std::string emit_report(const ReportDocument& doc, ReportFormat format,
                        bool color = false);

}  // namespace malcev

#endif
