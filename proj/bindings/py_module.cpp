// Python bindings: the main operations operate on the same document strings
// as the CLI; reports come back as plain dicts with exact scalars rendered as
// strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "malcev/emit.hpp"
#include "malcev/equivalence.hpp"
#include "malcev/parse.hpp"
#include "malcev/special.hpp"

namespace py = pybind11;
using namespace malcev;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

nlohmann::ordered_json report_json(const VerificationReport& rep,
                                   const NamingContext& names) {
  ReportDocument doc;
  doc.report = rep;
  doc.names = names;
  return nlohmann::ordered_json::parse(emit_report(doc, ReportFormat::json));
}

NamingContext naming_of(const MalcevAlgebra& A) { return {A.names(), {}, A.names()}; }

NamingContext naming_of(const ExtendingDatum& d) {
  std::vector<std::string> ambient = d.M.names();
  ambient.insert(ambient.end(), d.basis_v.begin(), d.basis_v.end());
  return {d.M.names(), d.basis_v, ambient};
}

Vec lambda_from_dict(const MalcevAlgebra& M, const py::dict& lam) {
  Vec out(M.field(), M.dim());
  for (auto item : lam) {
    std::string nm = py::cast<std::string>(item.first);
    int idx = M.name_index(nm);
    if (idx < 0) throw Error("unknown basis name '" + nm + "'");
    out[idx] = Scalar::parse(M.field(), py::cast<std::string>(py::str(item.second)));
  }
  return out;
}

MalcevAlgebra algebra_in_field(const std::string& text, std::uint64_t p) {
  MalcevAlgebra A = parse_algebra(text);
  return p ? algebra_mod_p(A, p) : A;
}

}  // namespace

PYBIND11_MODULE(_malcev, m) {
  m.doc() =
      "exact constructions and checks for extension structures on "
      "finite-dimensional Malcev algebras";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ResourceLimit& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("check_algebra", [](const std::string& text) {
    MalcevAlgebra A = parse_algebra(text);
    VerificationReport rep;
    rep.checks.push_back(check_malcev_eq2(A).checks[0]);
    rep.checks.push_back(check_malcev_eq3(A).checks[0]);
    nlohmann::ordered_json j = report_json(rep, naming_of(A));
    j["extras"]["field"] = A.field().str();
    j["extras"]["dim"] = A.dim();
    j["extras"]["malcev"] = rep.checks[1].passed;
    j["extras"]["lie"] = is_lie(A);
    return json_to_py(j);
  }, py::arg("text"), "Both Malcev identities plus the Lie flag for an algebra document.");

  m.def("jacobiator", [](const std::string& text, const std::string& x,
                         const std::string& y, const std::string& z) {
    MalcevAlgebra A = parse_algebra(text);
    int ix = A.name_index(x), iy = A.name_index(y), iz = A.name_index(z);
    if (ix < 0 || iy < 0 || iz < 0) throw Error("arguments must be basis names");
    Vec J = A.jacobiator(Vec::basis(A.field(), A.dim(), ix),
                         Vec::basis(A.field(), A.dim(), iy),
                         Vec::basis(A.field(), A.dim(), iz));
    return J.str(A.names());
  }, py::arg("text"), py::arg("x"), py::arg("y"), py::arg("z"));

  m.def("canonical_algebra", [](const std::string& text) {
    return serialize_algebra(parse_algebra(text));
  }, py::arg("text"), "Parse and re-emit an algebra document in canonical form.");

  m.def("canonical_datum", [](const std::string& text) {
    return serialize_datum(parse_datum(text));
  }, py::arg("text"));

  m.def("unified", [](const std::string& datum_text, bool diagnose) {
    ExtendingDatum d = parse_datum(datum_text);
    VerificationReport rep = diagnose ? diagnose_U(d) : verify_unified_direct(d);
    nlohmann::ordered_json j = report_json(rep, naming_of(d));
    j["extras"]["algebra"] = serialize_algebra(build_unified(d));
    return json_to_py(j);
  }, py::arg("datum"), py::arg("diagnose") = false);

  m.def("extract", [](const std::string& algebra_text,
                      const std::vector<std::string>& sub_names) {
    MalcevAlgebra E = parse_algebra(algebra_text);
    Projection pr = Projection::coordinate_names(E, sub_names);
    ExtendingDatum d = extract_datum(pr);
    PhiIsoResult iso = phi_iso_check(E, pr, d);
    py::dict out;
    out["datum"] = serialize_datum(d);
    out["phi_iso"] = iso.ok;
    return out;
  }, py::arg("algebra"), py::arg("sub"));

  m.def("semidirect", [](const std::string& algebra_text, const std::string& action_text) {
    MalcevAlgebra A = parse_algebra(algebra_text);
    ModuleAction act = parse_action(A, action_text);
    MalcevAlgebra E = semidirect(A, act);
    py::dict out;
    out["module_ok"] = check_module(A, act).overall();
    out["malcev"] = check_malcev_eq3(E).overall();
    out["algebra"] = serialize_algebra(E);
    return out;
  }, py::arg("algebra"), py::arg("action"));

  m.def("cocycle_extension", [](const std::string& algebra_text,
                                const std::string& action_text,
                                const std::string& omega_text) {
    MalcevAlgebra A = parse_algebra(algebra_text);
    ModuleAction act = parse_action(A, action_text);
    Cocycle w = parse_cocycle(A, act.basis_v, omega_text);
    MalcevAlgebra E = cocycle_extension(A, act, w);
    py::dict out;
    out["cocycle_ok"] = check_cocycle(A, act, w).overall();
    out["malcev"] = check_malcev_eq3(E).overall();
    out["algebra"] = serialize_algebra(E);
    return out;
  }, py::arg("algebra"), py::arg("action"), py::arg("omega"));

  m.def("crossed", [](const std::string& datum_text) {
    ExtendingDatum d = parse_datum(datum_text);
    if (!d.tr.is_zero()) throw Error("a crossed-product datum must not set tr");
    CrossedSystem cs{d.M, d.v_algebra(), d.tl, d.omega};
    auto [E, rep] = crossed_product(cs);
    nlohmann::ordered_json j = report_json(rep, naming_of(d));
    j["extras"]["algebra"] = serialize_algebra(E);
    return json_to_py(j);
  }, py::arg("datum"));

  m.def("skew", [](const std::string& datum_text) {
    ExtendingDatum d = parse_datum(datum_text);
    if (!d.tl.is_zero()) throw Error("a skew-crossed-product datum must not set tl");
    SkewCrossedSystem ss{d.M, d.v_algebra(), d.tr, d.omega};
    auto [E, rep] = skew_crossed_product(ss);
    nlohmann::ordered_json j = report_json(rep, naming_of(d));
    j["extras"]["algebra"] = serialize_algebra(E);
    return json_to_py(j);
  }, py::arg("datum"));

  m.def("matched", [](const std::string& datum_text) {
    ExtendingDatum d = parse_datum(datum_text);
    if (!d.omega.is_zero()) throw Error("a matched-pair datum must not set omega");
    MatchedPairData mp{d.M, d.v_algebra(), d.tr, d.tl};
    nlohmann::ordered_json j = report_json(matched_pair_check(mp), naming_of(d));
    j["extras"]["algebra"] = serialize_algebra(bicrossed_product(mp));
    return json_to_py(j);
  }, py::arg("datum"));

  m.def("check_flag", [](const std::string& algebra_text, const py::dict& lam,
                         const std::string& d_text) {
    MalcevAlgebra A = parse_algebra(algebra_text);
    TwistedDerivation td{lambda_from_dict(A, lam),
                         d_text.empty() ? Matrix(A.field(), A.dim(), A.dim())
                                        : parse_dmatrix(A, d_text)};
    VerificationReport rep = check_twisted_derivation(A, td);
    NamingContext nc{A.names(), {"u"}, {}};
    nc.ambient_names = A.names();
    nc.ambient_names.push_back("u");
    nlohmann::ordered_json j = report_json(rep, nc);
    j["extras"]["algebra"] = serialize_algebra(flag_product(A, td));
    return json_to_py(j);
  }, py::arg("algebra"), py::arg("lam"), py::arg("D") = std::string());

  m.def("solve_flag", [](const std::string& algebra_text, const py::dict& lam,
                         std::uint64_t field_p, int samples, std::uint64_t seed) {
    MalcevAlgebra A = algebra_in_field(algebra_text, field_p);
    FlagSolveResult res = solve_twisted(A, lambda_from_dict(A, lam), samples, seed);
    py::dict out;
    out["lambda_t6_ok"] = res.lambda_t6_ok;
    out["kernel_dim"] = res.linear_space.kernel_basis.size();
    out["stage2_candidates"] = res.stage2_candidates;
    out["solutions"] = res.solutions.size();
    py::list fams;
    for (const auto& s : res.family_checks) {
      py::dict e;
      e["family"] = s.family;
      py::dict params;
      for (const auto& [k, v] : s.params) params[py::str(k)] = v.literal();
      e["params"] = params;
      e["conditions_pass"] = s.conditions_pass;
      e["t1_as_printed_pass"] = s.t1_as_printed_pass;
      e["direct_pass"] = s.direct_pass;
      fams.append(e);
    }
    out["families"] = fams;
    return out;
  }, py::arg("algebra"), py::arg("lam"), py::arg("field") = 0,
     py::arg("samples") = 20, py::arg("seed") = 0);

  m.def("flag_equivalent", [](const std::string& algebra_text, const py::dict& lam,
                              const std::string& d1_text, const std::string& d2_text) {
    MalcevAlgebra A = parse_algebra(algebra_text);
    Vec l = lambda_from_dict(A, lam);
    TwistedDerivation td1{l, parse_dmatrix(A, d1_text)};
    TwistedDerivation td2{l, parse_dmatrix(A, d2_text)};
    FlagEquivResult res = flag_equiv(A, td1, td2);
    py::dict out;
    out["equivalent"] = res.equivalent;
    out["r"] = res.r ? py::object(py::str(res.r->str(A.names()))) : py::object(py::none());
    return out;
  }, py::arg("algebra"), py::arg("lam"), py::arg("D1"), py::arg("D2"));

  m.def("classify", [](const std::string& algebra_text, std::uint64_t field_p,
                       const std::string& relation, bool parallel) {
    MalcevAlgebra A = algebra_in_field(algebra_text, field_p);
    ClassificationResult res = classify_flag(
        A, relation == "cohom" ? FlagRelation::cohom : FlagRelation::equiv,
        100000000ull, parallel);
    py::dict out;
    out["candidates"] = res.candidates;
    out["total_data"] = res.total_data;
    out["classes_equiv"] = res.classes_equiv.size();
    out["classes_cohom"] = res.classes_cohom.size();
    py::dict cc;
    cc["total_data"] = res.cross_check.total_data;
    cc["classes_equiv"] = res.cross_check.count_equiv;
    cc["classes_cohom"] = res.cross_check.count_cohom;
    out["cross_check"] = cc;
    out["cohom_refines_equiv"] = res.cohom_refines_equiv;
    py::list reps;
    const auto& classes =
        relation == "cohom" ? res.classes_cohom : res.classes_equiv;
    for (const auto& cls : classes) {
      TwistedDerivation td = res.decode(cls.rep_code, A);
      py::dict e;
      e["orbit_size"] = cls.size;
      e["lambda"] = td.lam.str(A.names());
      py::list rows;
      for (int i = 0; i < A.dim(); ++i) rows.append(td.D.col(i).str(A.names()));
      e["D_images"] = rows;
      reps.append(e);
    }
    out["classes"] = reps;
    return out;
  }, py::arg("algebra"), py::arg("field") = 0, py::arg("relation") = "equiv",
     py::arg("parallel") = false);
}
