#include "malcev/unified.hpp"

#include <functional>

#include "malcev/detail/condition.hpp"

namespace malcev {

namespace detail {

CheckResult run_condition(const Ops& ops, const Condition& cond, int witness_cap) {
  const int n = ops.d.M.dim(), m = ops.d.dim_v();
  const Field& f = ops.d.M.field();
  const int arity = static_cast<int>(std::string(cond.pattern).size());

  std::vector<Vec> embasis, evbasis;
  for (int i = 0; i < n; ++i) embasis.push_back(Vec::basis(f, n, i));
  for (int a = 0; a < m; ++a) evbasis.push_back(Vec::basis(f, m, a));

  CheckBuilder cb(cond.id, witness_cap);
  if (cond.repair) cb.repair(cond.repair);

  std::vector<int> idx(arity, 0), range(arity);
  for (int s = 0; s < arity; ++s) range[s] = cond.pattern[s] == 'M' ? n : m;
  while (true) {
    std::vector<Vec> args;
    for (int s = 0; s < arity; ++s)
      args.push_back(cond.pattern[s] == 'M' ? embasis[idx[s]] : evbasis[idx[s]]);
    auto [lhs, rhs] = cond.eval(ops, args);
    cb.check(idx, lhs, rhs);
    int s = arity - 1;
    while (s >= 0 && ++idx[s] == range[s]) idx[s--] = 0;
    if (s < 0) break;
  }
  return cb.take();
}

void finish_with_direct(VerificationReport& rep, const ExtendingDatum& d,
                        const char* list_name, int witness_cap) {
  bool conjunction = true;
  for (const auto& c : rep.checks) conjunction = conjunction && c.passed;

  VerificationReport direct = verify_unified_direct(d, witness_cap);
  const bool direct_ok = direct.checks[0].passed;
  rep.checks.push_back(direct.checks[0]);

  CheckResult cross;
  cross.id = std::string(list_name) + "-crosscheck";
  cross.passed = (conjunction == direct_ok);
  cross.note = "conjunction of the condition list against the direct verdict";
  rep.checks.push_back(cross);

  auto first_witness = [](const CheckResult& c) {
    std::string where = "no witness";
    if (!c.witnesses.empty()) {
      where = "tuple (";
      for (size_t t = 0; t < c.witnesses[0].idx.size(); ++t)
        where += (t ? "," : "") + std::to_string(c.witnesses[0].idx[t]);
      where += ")";
    }
    return where;
  };
  if (conjunction && !direct_ok) {
    rep.triage.push_back({list_name,
                          "all conditions pass but the direct verdict fails at " +
                              first_witness(rep.checks[rep.checks.size() - 2])});
  } else if (!conjunction && direct_ok) {
    for (const auto& c : rep.checks) {
      if (c.id == "direct" || c.id == cross.id || c.passed) continue;
      rep.triage.push_back(
          {c.id, "fails although the direct verdict passes, at " + first_witness(c)});
    }
  }
}

}  // namespace detail

ExtendingDatum ExtendingDatum::zero(const MalcevAlgebra& M,
                                    std::vector<std::string> basis_v) {
  ExtendingDatum d{M, std::move(basis_v), {}, {}, {}, {}};
  const Field& f = M.field();
  const int n = M.dim(), m = d.dim_v();
  d.tl = BilinearMap(f, n, m, n);
  d.tr = BilinearMap(f, n, m, m);
  d.omega = SkewBilinearMap(f, m, n);
  d.bracket_v = SkewBilinearMap(f, m, m);
  return d;
}

MalcevAlgebra ExtendingDatum::v_algebra() const {
  MalcevAlgebra V(M.field(), basis_v);
  for (int a = 0; a < dim_v(); ++a)
    for (int b = a + 1; b < dim_v(); ++b) V.set_pair_product(a, b, bracket_v.pair(a, b));
  return V;
}

bool ExtendingDatum::operator==(const ExtendingDatum& o) const {
  return M == o.M && basis_v == o.basis_v && tl == o.tl && tr == o.tr &&
         omega == o.omega && bracket_v == o.bracket_v;
}

MalcevAlgebra build_unified(const ExtendingDatum& d) {
  const int n = d.M.dim(), m = d.dim_v();
  const Field& f = d.M.field();
  if (d.tl.dim_a() != n || d.tl.dim_b() != m || d.tl.dim_c() != n ||
      d.tr.dim_a() != n || d.tr.dim_b() != m || d.tr.dim_c() != m ||
      d.omega.dim_a() != m || d.omega.dim_c() != n || d.bracket_v.dim_a() != m ||
      d.bracket_v.dim_c() != m)
    throw DimensionMismatch("extending datum tensor shapes");

  std::vector<std::string> names = d.M.names();
  names.insert(names.end(), d.basis_v.begin(), d.basis_v.end());
  MalcevAlgebra E(f, names);

  auto embed = [&](const Vec& xm, const Vec& xv) {
    Vec out(f, n + m);
    for (int i = 0; i < n; ++i) out[i] = xm[i];
    for (int i = 0; i < m; ++i) out[n + i] = xv[i];
    return out;
  };
  const Vec zv(f, m);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      E.set_pair_product(i, j, embed(d.M.pair_product(i, j), zv));
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      E.set_pair_product(i, n + b, embed(d.tl.at(i, b), d.tr.at(i, b)));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      E.set_pair_product(n + a, n + b, embed(d.omega.pair(a, b), d.bracket_v.pair(a, b)));
  return E;
}

VerificationReport verify_unified_direct(const ExtendingDatum& d, int witness_cap) {
  VerificationReport rep = check_malcev_eq3(build_unified(d), witness_cap);
  rep.checks[0].id = "direct";
  return rep;
}

namespace {

using detail::Condition;
using detail::Ops;

std::vector<Condition> u_conditions() {
  using Vs = std::vector<Vec>;
  std::vector<Condition> cs;

  cs.push_back({"U1", "MMMV",
                "term 6 read as a bracket with y; last term's inner operator "
                "changed to |> so the argument lies in V",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &z = a[2], &q = a[3];
                  Vec lhs = o.bm(o.bm(x, z), o.tl(y, q)) + o.tl(o.bm(x, z), o.tr(y, q));
                  Vec rhs = o.tl(o.bm(o.bm(x, y), z), q);
                  rhs = rhs + o.bm(o.tl(o.bm(y, z), q), x);
                  rhs = rhs - o.tl(x, o.tr(o.bm(y, z), q));
                  rhs = rhs + o.bm(o.bm(o.tl(z, q), x), y);
                  rhs = rhs - o.bm(o.tl(x, o.tr(z, q)), y);
                  rhs = rhs + o.bm(y, o.tl(x, o.tr(z, q)));
                  rhs = rhs - o.bm(o.bm(o.tl(x, q), y), z);
                  rhs = rhs + o.bm(o.tl(y, o.tr(x, q)), z);
                  rhs = rhs - o.tl(z, o.tr(y, o.tr(x, q)));
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U2", "MMVV",
                "three inner operators changed to |> so omega/<| arguments lie in V",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &z = a[1], &v = a[2], &q = a[3];
                  Vec lhs = o.bm(o.bm(x, z), o.om(v, q)) + o.tl(o.bm(x, z), o.bv(v, q));
                  Vec rhs = o.tl(o.bm(o.tl(x, v), z), q);
                  rhs = rhs - o.tl(o.tl(z, o.tr(x, v)), q);
                  rhs = rhs - o.om(o.tr(z, o.tr(x, v)), q);
                  rhs = rhs - o.bm(o.tl(o.tl(z, v), q), x);
                  rhs = rhs - o.bm(o.om(o.tr(z, v), q), x);
                  rhs = rhs + o.tl(x, o.bv(o.tr(z, v), q));
                  rhs = rhs + o.tl(x, o.tr(o.tl(z, v), q));
                  rhs = rhs + o.tl(o.bm(o.tl(z, q), x), v);
                  rhs = rhs - o.tl(o.tl(x, o.tr(z, q)), v);
                  rhs = rhs - o.om(o.tr(x, o.tr(z, q)), v);
                  rhs = rhs - o.bm(o.tl(o.tl(x, q), v), z);
                  rhs = rhs - o.bm(o.om(o.tr(x, q), v), z);
                  rhs = rhs + o.tl(z, o.bv(o.tr(x, q), v));
                  rhs = rhs + o.tl(z, o.tr(o.tl(x, q), v));
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U3", "MMVV",
                "two inner operators changed to |> so the <|/omega arguments lie in V",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.tl(x, p), o.tl(y, q)) + o.tl(o.tl(x, p), o.tr(y, q));
                  lhs = lhs - o.tl(o.tl(y, q), o.tr(x, p)) + o.om(o.tr(x, p), o.tr(y, q));
                  Vec rhs = o.tl(o.tl(o.bm(x, y), p), q);
                  rhs = rhs + o.om(o.tr(o.bm(x, y), p), q);
                  rhs = rhs + o.bm(o.tl(o.tl(y, p), q), x);
                  rhs = rhs + o.bm(o.om(o.tr(y, p), q), x);
                  rhs = rhs - o.tl(x, o.bv(o.tr(y, p), q));
                  rhs = rhs - o.tl(x, o.tr(o.tl(y, p), q));
                  rhs = rhs + o.bm(o.bm(o.om(p, q), x), y);
                  rhs = rhs - o.bm(o.tl(x, o.bv(p, q)), y);
                  rhs = rhs + o.tl(y, o.tr(x, o.bv(p, q)));
                  rhs = rhs - o.tl(o.bm(o.tl(x, q), y), p);
                  rhs = rhs + o.tl(o.tl(y, o.tr(x, q)), p);
                  rhs = rhs + o.om(o.tr(y, o.tr(x, q)), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U4", "MVVV",
                "one inner operator changed to |> so the <| argument lies in V",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.tl(x, p), o.om(v, q)) + o.tl(o.tl(x, p), o.bv(v, q));
                  lhs = lhs - o.tl(o.om(v, q), o.tr(x, p)) + o.om(o.tr(x, p), o.bv(v, q));
                  Vec rhs = o.tl(o.tl(o.tl(x, v), p), q);
                  rhs = rhs + o.tl(o.om(o.tr(x, v), p), q);
                  rhs = rhs + o.om(o.bv(o.tr(x, v), p), q);
                  rhs = rhs + o.om(o.tr(o.tl(x, v), p), q);
                  rhs = rhs + o.bm(o.tl(o.om(v, p), q), x);
                  rhs = rhs + o.bm(o.om(o.bv(v, p), q), x);
                  rhs = rhs - o.tl(x, o.bv(o.bv(v, p), q));
                  rhs = rhs - o.tl(x, o.tr(o.om(v, p), q));
                  rhs = rhs + o.tl(o.bm(o.om(p, q), x), v);
                  rhs = rhs - o.tl(o.tl(x, o.bv(p, q)), v);
                  rhs = rhs - o.om(o.tr(x, o.bv(p, q)), v);
                  rhs = rhs - o.tl(o.tl(o.tl(x, q), v), p);
                  rhs = rhs - o.tl(o.om(o.tr(x, q), v), p);
                  rhs = rhs - o.om(o.bv(o.tr(x, q), v), p);
                  rhs = rhs - o.om(o.tr(o.tl(x, q), v), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U5", "MVVV",
                "two inner operators changed to |> so the omega/<| arguments lie in V",
                [](const Ops& o, const Vs& a) {
                  const Vec &y = a[0], &u = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.om(u, p), o.tl(y, q)) + o.tl(o.om(u, p), o.tr(y, q));
                  lhs = lhs - o.tl(o.tl(y, q), o.bv(u, p)) + o.om(o.bv(u, p), o.tr(y, q));
                  Vec rhs = -o.tl(o.tl(o.tl(y, u), p), q);
                  rhs = rhs - o.tl(o.om(o.tr(y, u), p), q);
                  rhs = rhs - o.om(o.bv(o.tr(y, u), p), q);
                  rhs = rhs - o.om(o.tr(o.tl(y, u), p), q);
                  rhs = rhs + o.tl(o.tl(o.tl(y, p), q), u);
                  rhs = rhs + o.tl(o.om(o.tr(y, p), q), u);
                  rhs = rhs + o.om(o.bv(o.tr(y, p), q), u);
                  rhs = rhs + o.om(o.tr(o.tl(y, p), q), u);
                  rhs = rhs + o.bm(o.tl(o.om(p, q), u), y);
                  rhs = rhs + o.bm(o.om(o.bv(p, q), u), y);
                  rhs = rhs - o.tl(y, o.bv(o.bv(p, q), u));
                  rhs = rhs - o.tl(y, o.tr(o.om(p, q), u));
                  rhs = rhs + o.tl(o.bm(o.om(q, u), y), p);
                  rhs = rhs - o.tl(o.tl(y, o.bv(q, u)), p);
                  rhs = rhs - o.om(o.tr(y, o.bv(q, u)), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U6", "VVVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &u = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.om(u, p), o.om(v, q)) + o.tl(o.om(u, p), o.bv(v, q));
                  lhs = lhs - o.tl(o.om(v, q), o.bv(u, p)) + o.om(o.bv(u, p), o.bv(v, q));
                  Vec rhs(o.d.M.field(), o.d.M.dim());
                  const Vec* cyc[4][2] = {{&u, &v}, {&v, &p}, {&p, &q}, {&q, &u}};
                  const Vec* tail[4][2] = {{&p, &q}, {&q, &u}, {&u, &v}, {&v, &p}};
                  for (int k = 0; k < 4; ++k) {
                    const Vec &s = *cyc[k][0], &t = *cyc[k][1];
                    const Vec &c1 = *tail[k][0], &c2 = *tail[k][1];
                    rhs = rhs + o.tl(o.tl(o.om(s, t), c1), c2);
                    rhs = rhs + o.tl(o.om(o.bv(s, t), c1), c2);
                    rhs = rhs + o.om(o.bv(o.bv(s, t), c1), c2);
                    rhs = rhs + o.om(o.tr(o.om(s, t), c1), c2);
                  }
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U7", "MMVV",
                "three inner operators changed to |> so bracket/|> arguments lie in V",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &z = a[1], &v = a[2], &q = a[3];
                  Vec lhs = o.tr(o.bm(x, z), o.bv(v, q));
                  Vec rhs = -o.bv(o.tr(z, o.tr(x, v)), q);
                  rhs = rhs + o.tr(o.bm(o.tl(x, v), z), q);
                  rhs = rhs - o.tr(o.tl(z, o.tr(x, v)), q);
                  rhs = rhs + o.tr(x, o.bv(o.tr(z, v), q));
                  rhs = rhs + o.tr(x, o.tr(o.tl(z, v), q));
                  rhs = rhs - o.bv(o.tr(x, o.tr(z, q)), v);
                  rhs = rhs + o.tr(o.bm(o.tl(z, q), x), v);
                  rhs = rhs - o.tr(o.tl(x, o.tr(z, q)), v);
                  rhs = rhs + o.tr(z, o.bv(o.tr(x, q), v));
                  rhs = rhs + o.tr(z, o.tr(o.tl(x, q), v));
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U8", "MMMV",
                "two inner operators changed to |> so the |> arguments lie in V",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &t = a[2], &p = a[3];
                  Vec lhs = o.tr(o.bm(y, t), o.tr(x, p));
                  Vec rhs = o.tr(t, o.tr(o.bm(x, y), p));
                  rhs = rhs - o.tr(x, o.tr(t, o.tr(y, p)));
                  rhs = rhs + o.tr(y, o.tr(x, o.tr(t, p)));
                  rhs = rhs - o.tr(o.bm(o.bm(t, x), y), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U9", "MVVV",
                "one inner operator changed to <| so the |> argument lies in M",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bv(o.tr(x, p), o.bv(v, q)) + o.tr(o.tl(x, p), o.bv(v, q));
                  lhs = lhs - o.tr(o.om(v, q), o.tr(x, p));
                  Vec rhs = o.bv(o.bv(o.tr(x, v), p), q);
                  rhs = rhs + o.bv(o.tr(o.tl(x, v), p), q);
                  rhs = rhs + o.tr(o.tl(o.tl(x, v), p), q);
                  rhs = rhs + o.tr(o.om(o.tr(x, v), p), q);
                  rhs = rhs - o.tr(x, o.bv(o.bv(v, p), q));
                  rhs = rhs - o.tr(x, o.tr(o.om(v, p), q));
                  rhs = rhs - o.bv(o.tr(x, o.bv(p, q)), v);
                  rhs = rhs + o.tr(o.bm(o.om(p, q), x), v);
                  rhs = rhs - o.tr(o.tl(x, o.bv(p, q)), v);
                  rhs = rhs - o.bv(o.bv(o.tr(x, q), v), p);
                  rhs = rhs - o.bv(o.tr(o.tl(x, q), v), p);
                  rhs = rhs - o.tr(o.tl(o.tl(x, q), v), p);
                  rhs = rhs - o.tr(o.om(o.tr(x, q), v), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U10", "MMVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bv(o.tr(x, p), o.tr(y, q)) + o.tr(o.tl(x, p), o.tr(y, q));
                  lhs = lhs - o.tr(o.tl(y, q), o.tr(x, p));
                  Vec rhs = o.bv(o.tr(o.bm(x, y), p), q);
                  rhs = rhs + o.tr(o.tl(o.bm(x, y), p), q);
                  rhs = rhs - o.tr(x, o.bv(o.tr(y, p), q));
                  rhs = rhs - o.tr(x, o.tr(o.tl(y, p), q));
                  rhs = rhs + o.tr(y, o.tr(x, o.bv(p, q)));
                  rhs = rhs + o.bv(o.tr(y, o.tr(x, q)), p);
                  rhs = rhs - o.tr(o.bm(o.tl(x, q), y), p);
                  rhs = rhs + o.tr(o.tl(y, o.tr(x, q)), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"U11", "VVVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &u = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bv(o.bv(u, p), o.bv(v, q)) + o.tr(o.om(u, p), o.bv(v, q));
                  lhs = lhs - o.tr(o.om(v, q), o.bv(u, p));
                  Vec rhs(o.d.M.field(), o.d.dim_v());
                  const Vec* cyc[4][2] = {{&u, &v}, {&v, &p}, {&p, &q}, {&q, &u}};
                  const Vec* tail[4][2] = {{&p, &q}, {&q, &u}, {&u, &v}, {&v, &p}};
                  for (int k = 0; k < 4; ++k) {
                    const Vec &s = *cyc[k][0], &t = *cyc[k][1];
                    const Vec &c1 = *tail[k][0], &c2 = *tail[k][1];
                    rhs = rhs + o.bv(o.bv(o.bv(s, t), c1), c2);
                    rhs = rhs + o.bv(o.tr(o.om(s, t), c1), c2);
                    rhs = rhs + o.tr(o.tl(o.om(s, t), c1), c2);
                    rhs = rhs + o.tr(o.om(o.bv(s, t), c1), c2);
                  }
                  return std::make_pair(lhs, rhs);
                }});

  return cs;
}

}  // namespace

VerificationReport diagnose_U(const ExtendingDatum& d, int witness_cap) {
  const Ops ops{d};
  VerificationReport rep;
  for (const auto& cond : u_conditions())
    rep.checks.push_back(detail::run_condition(ops, cond, witness_cap));
  detail::finish_with_direct(rep, d, "U1..U11", witness_cap);
  return rep;
}

Projection Projection::coordinate(const MalcevAlgebra& E, const std::vector<int>& sub) {
  Projection pr{E, sub, {}, Matrix(E.field(), E.dim(), E.dim())};
  std::vector<bool> in_sub(E.dim(), false);
  for (int s : sub) {
    if (s < 0 || s >= E.dim()) throw DimensionMismatch("subalgebra index out of range");
    in_sub[s] = true;
  }
  for (int i = 0; i < E.dim(); ++i)
    if (!in_sub[i]) pr.comp.push_back(i);
  for (int s : sub) pr.p.at(s, s) = Scalar::one(E.field());
  return pr;
}

Projection Projection::coordinate_names(const MalcevAlgebra& E,
                                        const std::vector<std::string>& sub_names) {
  std::vector<int> sub;
  for (const auto& nm : sub_names) {
    int i = E.name_index(nm);
    if (i < 0) throw Error("unknown basis name '" + nm + "'");
    sub.push_back(i);
  }
  return coordinate(E, sub);
}

namespace {

void validate_projection(const Projection& pr) {
  const MalcevAlgebra& E = pr.E;
  const int N = E.dim();
  if (pr.p.rows() != N || pr.p.cols() != N) throw DimensionMismatch("projection shape");
  if (static_cast<int>(pr.sub.size() + pr.comp.size()) != N)
    throw DimensionMismatch("index partition size");
  if (pr.p * pr.p != pr.p) throw NotIdempotent();
  for (int s : pr.sub)
    if (pr.p.col(s) != Vec::basis(E.field(), N, s)) throw NotIdempotent();
  for (int c : pr.comp)
    if (!pr.p.col(c).is_zero()) throw NotIdempotent();
  // the chosen vectors must close under the ambient bracket
  for (size_t a = 0; a < pr.sub.size(); ++a)
    for (size_t b = a + 1; b < pr.sub.size(); ++b) {
      Vec w = E.basis_bracket(pr.sub[a], pr.sub[b]);
      for (int c : pr.comp)
        if (!w[c].is_zero()) throw NotASubalgebra();
    }
  if (!check_malcev_eq3(E).overall()) throw NotMalcev();
}

}  // namespace

ExtendingDatum extract_datum(const Projection& pr) {
  validate_projection(pr);
  const MalcevAlgebra& E = pr.E;
  const Field& f = E.field();
  const int n = static_cast<int>(pr.sub.size());
  const int m = static_cast<int>(pr.comp.size());

  std::vector<std::string> m_names, v_names;
  for (int s : pr.sub) m_names.push_back(E.names()[s]);
  for (int c : pr.comp) v_names.push_back(E.names()[c]);

  auto to_m = [&](const Vec& w) {
    Vec out(f, n);
    for (int a = 0; a < n; ++a) out[a] = w[pr.sub[a]];
    return out;
  };
  auto to_v = [&](const Vec& w) {
    Vec out(f, m);
    for (int b = 0; b < m; ++b) out[b] = w[pr.comp[b]];
    return out;
  };

  MalcevAlgebra M(f, m_names);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      M.set_pair_product(a, b, to_m(E.basis_bracket(pr.sub[a], pr.sub[b])));

  ExtendingDatum d = ExtendingDatum::zero(M, v_names);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      Vec w = E.basis_bracket(pr.sub[a], pr.comp[b]);
      Vec pw = pr.p * w;
      d.tl.set(a, b, to_m(pw));
      d.tr.set(a, b, to_v(w - pw));
    }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Vec w = E.basis_bracket(pr.comp[a], pr.comp[b]);
      Vec pw = pr.p * w;
      d.omega.set_pair(a, b, to_m(pw));
      d.bracket_v.set_pair(a, b, to_v(w - pw));
    }
  return d;
}

PhiIsoResult phi_iso_check(const MalcevAlgebra& E, const Projection& pr,
                           const ExtendingDatum& d) {
  const Field& f = E.field();
  const int N = E.dim();
  const int n = static_cast<int>(pr.sub.size());
  MalcevAlgebra U = build_unified(d);
  if (U.dim() != N) return {false, "dimension mismatch"};

  // phi maps the unified basis (sub part, then comp part) into E.
  Matrix phi(f, N, N);
  for (int a = 0; a < n; ++a) phi.set_col(a, Vec::basis(f, N, pr.sub[a]));
  for (int b = 0; b + n < N; ++b) phi.set_col(n + b, Vec::basis(f, N, pr.comp[b]));
  if (!invert(phi)) return {false, "phi not invertible"};

  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Vec lhs = phi * U.basis_bracket(i, j);
      Vec rhs = E.bracket(phi.col(i), phi.col(j));
      if (lhs != rhs)
        return {false, "bracket mismatch at pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
    }

  // stabilizes the subalgebra: phi is the identity on its span
  for (int a = 0; a < n; ++a)
    if (phi.col(a) != Vec::basis(f, N, pr.sub[a])) return {false, "does not stabilize"};
  // co-stabilizes the complement: p annihilates phi of complement vectors
  for (int b = 0; b + n < N; ++b) {
    Vec w = phi.col(n + b);
    if (!(pr.p * w).is_zero()) return {false, "does not co-stabilize"};
  }
  return {true, ""};
}

}  // namespace malcev
