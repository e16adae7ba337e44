#include "malcev/emit.hpp"

#include <map>
#include <sstream>

namespace malcev {

namespace {

struct CondMeta {
  const char* pattern;
  char codomain;
};

const std::map<std::string, CondMeta>& meta() {
  static const std::map<std::string, CondMeta> m = {
      {"EQ2", {"EEE", 'E'}},      {"EQ3", {"EEEE", 'E'}},
      {"direct", {"EEEE", 'E'}},  {"MOD", {"MMMV", 'V'}},
      {"COC", {"MMMM", 'V'}},     {"U1", {"MMMV", 'M'}},
      {"U2", {"MMVV", 'M'}},      {"U3", {"MMVV", 'M'}},
      {"U4", {"MVVV", 'M'}},      {"U5", {"MVVV", 'M'}},
      {"U6", {"VVVV", 'M'}},      {"U7", {"MMVV", 'V'}},
      {"U8", {"MMMV", 'V'}},      {"U9", {"MVVV", 'V'}},
      {"U10", {"MMVV", 'V'}},     {"U11", {"VVVV", 'V'}},
      {"CP1", {"MMMV", 'M'}},     {"CP2", {"MMVV", 'M'}},
      {"CP3", {"MMVV", 'M'}},     {"CP4", {"MVVV", 'M'}},
      {"CP5", {"MVVV", 'M'}},     {"CP6", {"VVVV", 'M'}},
      {"SP1", {"MMVV", 'M'}},     {"SP2", {"MMVV", 'M'}},
      {"SP3", {"MVVV", 'M'}},     {"SP4", {"VVVV", 'M'}},
      {"SP5", {"MMVV", 'V'}},     {"SP6", {"MMMV", 'V'}},
      {"SP7", {"MVVV", 'V'}},     {"SP8", {"MMVV", 'V'}},
      {"SP9", {"VVVV", 'V'}},     {"MP1", {"MMMV", 'M'}},
      {"MP2", {"MVVV", 'V'}},     {"MP3", {"MMVV", 'M'}},
      {"MP4", {"MMVV", 'V'}},     {"MP5", {"MMVV", 'M'}},
      {"MP6", {"MMVV", 'V'}},     {"T1", {"MMM", 'M'}},
      {"T2", {"MM", 'M'}},        {"T3", {"MM", 's'}},
      {"T4", {"MM", 'M'}},        {"T5", {"MM", 's'}},
      {"T6", {"MMM", 's'}},       {"M1", {"MV", 'V'}},
      {"M2", {"MV", 'M'}},        {"M3", {"VV", 'V'}},
      {"M4", {"VV", 'M'}},        {"psi-homomorphism", {"EE", 'E'}},
  };
  return m;
}

}  // namespace

std::string pattern_of(const std::string& condition_id) {
  auto it = meta().find(condition_id);
  return it == meta().end() ? "" : it->second.pattern;
}

char codomain_of(const std::string& condition_id) {
  auto it = meta().find(condition_id);
  return it == meta().end() ? 'E' : it->second.codomain;
}

namespace {

const std::vector<std::string>& names_for(const NamingContext& nc, char tag) {
  static const std::vector<std::string> empty;
  switch (tag) {
    case 'M': return nc.m_names;
    case 'V': return nc.v_names;
    case 'E': return nc.ambient_names.empty() ? nc.m_names : nc.ambient_names;
    default: return empty;
  }
}

std::vector<std::string> witness_tuple_names(const NamingContext& nc,
                                             const std::string& id,
                                             const std::vector<int>& idx) {
  std::string pat = pattern_of(id);
  std::vector<std::string> out;
  for (size_t s = 0; s < idx.size(); ++s) {
    char tag = s < pat.size() ? pat[s] : 'E';
    const auto& names = names_for(nc, tag);
    if (idx[s] >= 0 && idx[s] < static_cast<int>(names.size()))
      out.push_back(names[idx[s]]);
    else
      out.push_back("#" + std::to_string(idx[s]));
  }
  return out;
}

std::string side_str(const NamingContext& nc, const std::string& id, const Vec& v) {
  char cod = codomain_of(id);
  if (cod == 's') return v.dim() == 1 ? v[0].literal() : v.str({});
  const auto& names = names_for(nc, cod);
  if (static_cast<int>(names.size()) == v.dim()) return v.str(names);
  std::vector<std::string> fallback;
  for (int i = 0; i < v.dim(); ++i) fallback.push_back("b" + std::to_string(i + 1));
  return v.str(fallback);
}

}  // namespace

std::string emit_report(const ReportDocument& doc, ReportFormat format, bool color) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["command"] = doc.command;
    j["seed"] = doc.seed;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : doc.report.checks) {
      nlohmann::ordered_json jc;
      jc["condition_id"] = c.id;
      jc["passed"] = c.passed;
      jc["as_printed"] = c.as_printed;
      if (!c.note.empty()) jc["note"] = c.note;
      if (c.as_printed_verdict) jc["as_printed_verdict"] = *c.as_printed_verdict;
      jc["failures"] = c.failures;
      nlohmann::ordered_json jw = nlohmann::ordered_json::array();
      for (const auto& w : c.witnesses) {
        nlohmann::ordered_json je;
        je["tuple"] = witness_tuple_names(doc.names, c.id, w.idx);
        je["lhs"] = side_str(doc.names, c.id, w.lhs);
        je["rhs"] = side_str(doc.names, c.id, w.rhs);
        jw.push_back(je);
      }
      jc["witnesses"] = jw;
      checks.push_back(jc);
    }
    j["checks"] = checks;
    nlohmann::ordered_json jt = nlohmann::ordered_json::array();
    for (const auto& t : doc.report.triage)
      jt.push_back({{"condition_id", t.condition_id}, {"detail", t.detail}});
    j["triage"] = jt;
    j["overall"] = doc.overall();
    j["extras"] = doc.extras;
    return j.dump(2) + "\n";
  }

  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream out;
  out << "command: " << doc.command << "\n";
  for (const auto& c : doc.report.checks) {
    out << "  " << c.id;
    for (size_t pad = c.id.size(); pad < 18; ++pad) out << ' ';
    out << (c.passed ? green : red) << (c.passed ? "pass" : "FAIL") << reset;
    if (!c.as_printed) out << "  [as_printed: false]";
    if (c.as_printed_verdict)
      out << "  [verbatim: " << (*c.as_printed_verdict ? "pass" : "FAIL") << "]";
    if (c.failures) out << "  failures=" << c.failures;
    out << "\n";
    if (!c.note.empty()) out << "      note: " << c.note << "\n";
    for (const auto& w : c.witnesses) {
      auto tup = witness_tuple_names(doc.names, c.id, w.idx);
      out << "      witness (";
      for (size_t t = 0; t < tup.size(); ++t) out << (t ? "," : "") << tup[t];
      out << "): lhs = " << side_str(doc.names, c.id, w.lhs)
          << " ; rhs = " << side_str(doc.names, c.id, w.rhs) << "\n";
    }
  }
  for (const auto& t : doc.report.triage)
    out << "  triage " << t.condition_id << ": " << t.detail << "\n";
  for (auto it = doc.extras.begin(); it != doc.extras.end(); ++it) {
    out << "  " << it.key() << ": ";
    if (it.value().is_string())
      out << it.value().get<std::string>() << "\n";
    else
      out << it.value().dump() << "\n";
  }
  out << "overall: " << (doc.overall() ? green : red)
      << (doc.overall() ? "PASS" : "FAIL") << reset << "\n";
  return out.str();
}

}  // namespace malcev
