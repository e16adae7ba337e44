#include "malcev/special.hpp"

#include "malcev/detail/condition.hpp"

namespace malcev {

namespace {

using detail::Condition;
using detail::Ops;

void require_factors_malcev(const MalcevAlgebra& M, const MalcevAlgebra& V) {
  if (M.field() != V.field()) throw FieldMismatch();
  if (!check_malcev_eq3(M).overall()) throw FactorNotMalcev("M");
  if (!check_malcev_eq3(V).overall()) throw FactorNotMalcev("V");
}

SkewBilinearMap table_of(const MalcevAlgebra& V) {
  SkewBilinearMap b(V.field(), V.dim(), V.dim());
  for (int a = 0; a < V.dim(); ++a)
    for (int c = a + 1; c < V.dim(); ++c) b.set_pair(a, c, V.pair_product(a, c));
  return b;
}

// The crossed-product list. Terms whose inner operator would have to be the
// absent action |> are dropped and the check flagged accordingly.
std::vector<Condition> cp_conditions() {
  using Vs = std::vector<Vec>;
  std::vector<Condition> cs;

  cs.push_back({"CP1", "MMMV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &z = a[2], &q = a[3];
                  Vec lhs = o.bm(o.bm(x, z), o.tl(y, q));
                  Vec rhs = o.tl(o.bm(o.bm(x, y), z), q);
                  rhs = rhs + o.bm(o.tl(o.bm(y, z), q), x);
                  rhs = rhs + o.bm(o.bm(o.tl(z, q), x), y);
                  rhs = rhs - o.bm(o.bm(o.tl(x, q), y), z);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"CP2", "MMVV",
                "terms x<|((z<|v)<|q) and z<|((x<|q)<|v) dropped: their inner "
                "operator must be the absent action |>",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &z = a[1], &v = a[2], &q = a[3];
                  Vec lhs = o.bm(o.bm(x, z), o.om(v, q)) + o.tl(o.bm(x, z), o.bv(v, q));
                  Vec rhs = o.tl(o.bm(o.tl(x, v), z), q);
                  rhs = rhs - o.bm(o.tl(o.tl(z, v), q), x);
                  rhs = rhs + o.tl(o.bm(o.tl(z, q), x), v);
                  rhs = rhs - o.bm(o.tl(o.tl(x, q), v), z);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"CP3", "MMVV",
                "term y<|(x<|[p,q]) dropped: its inner operator must be the "
                "absent action |>",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.tl(x, p), o.tl(y, q));
                  Vec rhs = o.tl(o.tl(o.bm(x, y), p), q);
                  rhs = rhs + o.bm(o.tl(o.tl(y, p), q), x);
                  rhs = rhs + o.bm(o.bm(o.om(p, q), x), y);
                  rhs = rhs - o.bm(o.tl(x, o.bv(p, q)), y);
                  rhs = rhs - o.tl(o.bm(o.tl(x, q), y), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"CP4", "MVVV",
                "|> terms evaluated with |> = 0 (absent in this product)",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.tl(x, p), o.om(v, q)) + o.tl(o.tl(x, p), o.bv(v, q));
                  Vec rhs = o.tl(o.tl(o.tl(x, v), p), q);
                  rhs = rhs - o.tl(x, o.bv(o.bv(v, p), q));
                  rhs = rhs + o.bm(o.tl(o.om(v, p), q), x);
                  rhs = rhs + o.bm(o.om(o.bv(v, p), q), x);
                  rhs = rhs + o.tl(o.bm(o.om(p, q), x), v);
                  rhs = rhs - o.tl(o.tl(x, o.bv(p, q)), v);
                  rhs = rhs - o.tl(o.tl(o.tl(x, q), v), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"CP5", "MVVV",
                "|> terms evaluated with |> = 0 (absent in this product)",
                [](const Ops& o, const Vs& a) {
                  const Vec &y = a[0], &u = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.om(u, p), o.tl(y, q)) - o.tl(o.tl(y, q), o.bv(u, p));
                  Vec rhs = -o.tl(o.tl(o.tl(y, u), p), q);
                  rhs = rhs + o.tl(o.tl(o.tl(y, p), q), u);
                  rhs = rhs + o.bm(o.tl(o.om(p, q), u), y);
                  rhs = rhs + o.bm(o.om(o.bv(p, q), u), y);
                  rhs = rhs - o.tl(y, o.bv(o.bv(p, q), u));
                  rhs = rhs + o.tl(o.bm(o.om(q, u), y), p);
                  rhs = rhs - o.tl(o.tl(y, o.bv(q, u)), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"CP6", "VVVV",
                "|> term evaluated with |> = 0 (absent in this product)",
                [](const Ops& o, const Vs& a) {
                  const Vec &u = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.om(u, p), o.om(v, q)) + o.tl(o.om(u, p), o.bv(v, q));
                  lhs = lhs - o.tl(o.om(v, q), o.bv(u, p)) + o.om(o.bv(u, p), o.bv(v, q));
                  Vec rhs = o.zm();
                  const Vec* cyc[4][2] = {{&u, &v}, {&v, &p}, {&p, &q}, {&q, &u}};
                  const Vec* tail[4][2] = {{&p, &q}, {&q, &u}, {&u, &v}, {&v, &p}};
                  for (int k = 0; k < 4; ++k) {
                    const Vec &s = *cyc[k][0], &t = *cyc[k][1];
                    const Vec &c1 = *tail[k][0], &c2 = *tail[k][1];
                    rhs = rhs + o.tl(o.tl(o.om(s, t), c1), c2);
                    rhs = rhs + o.tl(o.om(o.bv(s, t), c1), c2);
                    rhs = rhs + o.om(o.bv(o.bv(s, t), c1), c2);
                  }
                  return std::make_pair(lhs, rhs);
                }});

  return cs;
}

// The skew-crossed list, keyed by label (the source lists SP4 out of order).
std::vector<Condition> sp_conditions() {
  using Vs = std::vector<Vec>;
  std::vector<Condition> cs;

  cs.push_back({"SP1", "MMVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &z = a[1], &v = a[2], &q = a[3];
                  Vec lhs = o.bm(o.bm(x, z), o.om(v, q));
                  Vec rhs = -o.bm(o.om(o.tr(z, v), q), x);
                  rhs = rhs - o.om(o.tr(x, o.tr(z, q)), v);
                  rhs = rhs - o.bm(o.om(o.tr(x, q), v), z);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP2", "MMVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.om(o.tr(x, p), o.tr(y, q));
                  Vec rhs = o.om(o.tr(o.bm(x, y), p), q);
                  rhs = rhs + o.bm(o.om(o.tr(y, p), q), x);
                  rhs = rhs + o.bm(o.bm(o.om(p, q), x), y);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP3", "MVVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.om(o.tr(x, p), o.bv(v, q));
                  Vec rhs = o.om(o.bv(o.tr(x, v), p), q);
                  rhs = rhs + o.bm(o.om(o.bv(v, p), q), x);
                  rhs = rhs - o.om(o.tr(x, o.bv(p, q)), v);
                  rhs = rhs - o.om(o.bv(o.tr(x, q), v), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP4", "VVVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &u = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bm(o.om(u, p), o.om(v, q)) + o.om(o.bv(u, p), o.bv(v, q));
                  Vec rhs = o.zm();
                  const Vec* cyc[4][2] = {{&u, &v}, {&v, &p}, {&p, &q}, {&q, &u}};
                  const Vec* tail[4][2] = {{&p, &q}, {&q, &u}, {&u, &v}, {&v, &p}};
                  for (int k = 0; k < 4; ++k) {
                    const Vec &s = *cyc[k][0], &t = *cyc[k][1];
                    const Vec &c1 = *tail[k][0], &c2 = *tail[k][1];
                    rhs = rhs + o.om(o.bv(o.bv(s, t), c1), c2);
                    rhs = rhs + o.om(o.tr(o.om(s, t), c1), c2);
                  }
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP5", "MMVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &z = a[1], &v = a[2], &q = a[3];
                  Vec lhs = o.tr(o.bm(x, z), o.bv(v, q));
                  Vec rhs = o.tr(z, o.bv(o.tr(x, q), v));
                  rhs = rhs - o.bv(o.tr(x, o.tr(z, q)), v);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP6", "MMMV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &t = a[2], &p = a[3];
                  Vec lhs = o.tr(o.bm(y, t), o.tr(x, p));
                  Vec rhs = o.tr(t, o.tr(o.bm(x, y), p));
                  rhs = rhs - o.tr(o.bm(o.bm(t, x), y), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP7", "MVVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bv(o.tr(x, p), o.bv(v, q)) - o.tr(o.om(v, q), o.tr(x, p));
                  Vec rhs = o.bv(o.bv(o.tr(x, v), p), q);
                  rhs = rhs - o.tr(x, o.bv(o.bv(v, p), q));
                  rhs = rhs + o.tr(o.om(o.tr(x, v), p), q);
                  rhs = rhs - o.tr(x, o.tr(o.om(v, p), q));
                  rhs = rhs - o.bv(o.tr(x, o.bv(p, q)), v);
                  rhs = rhs - o.bv(o.bv(o.tr(x, q), v), p);
                  rhs = rhs + o.tr(o.bm(o.om(p, q), x), v);
                  rhs = rhs - o.tr(o.om(o.tr(x, q), v), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP8", "MMVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.bv(o.tr(x, p), o.tr(y, q));
                  Vec rhs = o.bv(o.tr(o.bm(x, y), p), q);
                  rhs = rhs - o.tr(x, o.bv(o.tr(y, p), q));
                  rhs = rhs + o.tr(y, o.tr(x, o.bv(p, q)));
                  rhs = rhs + o.bv(o.tr(y, o.tr(x, q)), p);
                  return std::make_pair(lhs, rhs);
                }});

  cs.push_back({"SP9", "VVVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &u = a[0], &v = a[1], &p = a[2], &q = a[3];
                  Vec lhs = o.tr(o.om(u, p), o.bv(v, q)) - o.tr(o.om(v, q), o.bv(u, p));
                  Vec rhs = o.zv();
                  const Vec* cyc[4][2] = {{&u, &v}, {&v, &p}, {&p, &q}, {&q, &u}};
                  const Vec* tail[4][2] = {{&p, &q}, {&q, &u}, {&u, &v}, {&v, &p}};
                  for (int k = 0; k < 4; ++k) {
                    const Vec &s = *cyc[k][0], &t = *cyc[k][1];
                    const Vec &c1 = *tail[k][0], &c2 = *tail[k][1];
                    rhs = rhs + o.bv(o.tr(o.om(s, t), c1), c2);
                    rhs = rhs + o.tr(o.om(o.bv(s, t), c1), c2);
                  }
                  return std::make_pair(lhs, rhs);
                }});

  return cs;
}

// The matched-pair list; each condition is an expression that must vanish.
std::vector<Condition> mp_conditions() {
  using Vs = std::vector<Vec>;
  std::vector<Condition> cs;

  cs.push_back({"MP1", "MMMV",
                "second term reassociated: [[y,z],x]<|u read as [[y,z]<|u, x]",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &z = a[2], &u = a[3];
                  Vec s = o.bm(o.bm(o.tl(x, u), y), z);
                  s = s - o.bm(o.tl(o.bm(y, z), u), x);
                  s = s - o.bm(o.tl(y, o.tr(x, u)), z);
                  s = s - o.bm(o.bm(o.tl(z, u), x), y);
                  s = s + o.tl(z, o.tr(y, o.tr(x, u)));
                  s = s + o.bm(o.bm(x, z), o.tl(y, u));
                  s = s - o.tl(o.bm(o.bm(x, y), z), u);
                  s = s + o.tl(o.bm(x, z), o.tr(y, u));
                  s = s + o.bm(o.tl(x, o.tr(z, u)), y);
                  s = s + o.tl(x, o.tr(o.bm(y, z), u));
                  s = s - o.tl(y, o.tr(x, o.tr(z, u)));
                  return std::make_pair(s, o.zm());
                }});

  cs.push_back({"MP2", "MVVV",
                "unbalanced parenthesis read as ((x<|u)<|v)|>w",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &u = a[1], &v = a[2], &w = a[3];
                  Vec s = o.bv(o.bv(o.tr(x, u), v), w);
                  s = s - o.bv(o.tr(x, o.bv(v, w)), u);
                  s = s - o.bv(o.tr(o.tl(x, u), v), w);
                  s = s - o.bv(o.bv(o.tr(x, w), u), v);
                  s = s + o.tr(o.tl(o.tl(x, u), v), w);
                  s = s + o.bv(o.bv(u, w), o.tr(x, v));
                  s = s - o.tr(x, o.bv(o.bv(u, v), w));
                  s = s + o.bv(o.tr(o.tl(x, w), u), v);
                  s = s + o.tr(o.tl(x, v), o.bv(u, w));
                  s = s + o.tr(o.tl(x, o.bv(v, w)), u);
                  s = s - o.tr(o.tl(o.tl(x, w), u), v);
                  return std::make_pair(s, o.zv());
                }});

  cs.push_back({"MP3", "MMVV",
                "term [v<|x, y]<|u read with normalized argument order [x<|v, y]<|u",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &u = a[2], &v = a[3];
                  Vec s = o.tl(y, o.tr(x, o.bv(u, v)));
                  s = s - o.tl(o.tl(y, v), o.tr(x, u));
                  s = s + o.tl(o.bm(o.tl(x, v), y), u);
                  s = s - o.bm(o.tl(o.tl(y, u), v), x);
                  s = s - o.bm(o.tl(x, o.bv(u, v)), y);
                  s = s + o.tl(o.tl(x, u), o.tr(y, v));
                  s = s - o.tl(x, o.bv(o.tr(y, u), v));
                  s = s - o.tl(o.tl(o.bm(x, y), u), v);
                  s = s + o.bm(o.tl(x, u), o.tl(y, v));
                  s = s - o.tl(o.tl(y, o.tr(x, v)), u);
                  s = s + o.tl(x, o.tr(o.tl(y, u), v));
                  return std::make_pair(s, o.zm());
                }});

  cs.push_back({"MP4", "MMVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &u = a[2], &v = a[3];
                  Vec s = o.tr(o.tl(o.bm(x, y), u), v);
                  s = s - o.tr(o.tl(x, u), o.tr(y, v));
                  s = s + o.tr(x, o.bv(o.tr(y, u), v));
                  s = s - o.bv(o.tr(y, o.tr(x, v)), u);
                  s = s - o.bv(o.tr(o.bm(x, y), u), v);
                  s = s + o.tr(o.tl(y, v), o.tr(x, u));
                  s = s - o.tr(o.bm(o.tl(x, v), y), u);
                  s = s - o.tr(y, o.tr(x, o.bv(u, v)));
                  s = s + o.bv(o.tr(x, u), o.tr(y, v));
                  s = s - o.tr(x, o.tr(o.tl(y, u), v));
                  s = s + o.tr(o.tl(y, o.tr(x, v)), u);
                  return std::make_pair(s, o.zv());
                }});

  cs.push_back({"MP5", "MMVV",
                "unbalanced parenthesis read as (y<|(x|>u))<|v",
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &u = a[2], &v = a[3];
                  Vec s = o.tl(o.bm(o.tl(y, v), x), u);
                  s = s - o.tl(y, o.bv(o.tr(x, v), u));
                  s = s - o.bm(o.tl(o.tl(x, v), u), y);
                  s = s + o.tl(o.bm(o.tl(x, u), y), v);
                  s = s - o.bm(o.tl(o.tl(y, u), v), x);
                  s = s - o.tl(x, o.bv(o.tr(y, u), v));
                  s = s - o.tl(o.tl(y, o.tr(x, u)), v);
                  s = s - o.tl(o.tl(x, o.tr(y, v)), u);
                  s = s + o.tl(o.bm(x, y), o.bv(u, v));
                  s = s + o.tl(x, o.tr(o.tl(y, u), v));
                  s = s + o.tl(y, o.tr(o.tl(x, v), u));
                  return std::make_pair(s, o.zm());
                }});

  cs.push_back({"MP6", "MMVV", nullptr,
                [](const Ops& o, const Vs& a) {
                  const Vec &x = a[0], &y = a[1], &u = a[2], &v = a[3];
                  Vec s = o.tr(x, o.bv(o.tr(y, v), u));
                  s = s - o.tr(o.bm(o.tl(y, u), x), v);
                  s = s - o.bv(o.tr(x, o.tr(y, u)), v);
                  s = s + o.tr(y, o.bv(o.tr(x, u), v));
                  s = s - o.bv(o.tr(y, o.tr(x, v)), u);
                  s = s - o.tr(o.bm(o.tl(x, v), y), u);
                  s = s - o.tr(y, o.tr(o.tl(x, u), v));
                  s = s - o.tr(x, o.tr(o.tl(y, v), u));
                  s = s + o.tr(o.bm(x, y), o.bv(u, v));
                  s = s + o.tr(o.tl(y, o.tr(x, v)), u);
                  s = s + o.tr(o.tl(x, o.tr(y, u)), v);
                  return std::make_pair(s, o.zv());
                }});

  return cs;
}

VerificationReport run_list(const ExtendingDatum& d, const std::vector<Condition>& list,
                            const char* name, int witness_cap) {
  const Ops ops{d};
  VerificationReport rep;
  for (const auto& cond : list)
    rep.checks.push_back(detail::run_condition(ops, cond, witness_cap));
  detail::finish_with_direct(rep, d, name, witness_cap);
  return rep;
}

}  // namespace

ExtendingDatum CrossedSystem::to_datum() const {
  ExtendingDatum d = ExtendingDatum::zero(M, V.names());
  d.tl = tl;
  d.omega = omega;
  d.bracket_v = table_of(V);
  return d;
}

ExtendingDatum SkewCrossedSystem::to_datum() const {
  ExtendingDatum d = ExtendingDatum::zero(M, V.names());
  d.tr = tr;
  d.omega = omega;
  d.bracket_v = table_of(V);
  return d;
}

ExtendingDatum MatchedPairData::to_datum() const {
  ExtendingDatum d = ExtendingDatum::zero(M, V.names());
  d.tl = tl;
  d.tr = tr;
  d.bracket_v = table_of(V);
  return d;
}

std::pair<MalcevAlgebra, VerificationReport> crossed_product(const CrossedSystem& cs,
                                                             int witness_cap) {
  require_factors_malcev(cs.M, cs.V);
  ExtendingDatum d = cs.to_datum();
  return {build_unified(d), run_list(d, cp_conditions(), "CP1..CP6", witness_cap)};
}

std::pair<MalcevAlgebra, VerificationReport> skew_crossed_product(
    const SkewCrossedSystem& ss, int witness_cap) {
  require_factors_malcev(ss.M, ss.V);
  ExtendingDatum d = ss.to_datum();
  return {build_unified(d), run_list(d, sp_conditions(), "SP1..SP9", witness_cap)};
}

VerificationReport matched_pair_check(const MatchedPairData& mp, int witness_cap) {
  require_factors_malcev(mp.M, mp.V);
  return run_list(mp.to_datum(), mp_conditions(), "MP1..MP6", witness_cap);
}

MalcevAlgebra bicrossed_product(const MatchedPairData& mp) {
  if (mp.M.field() != mp.V.field()) throw FieldMismatch();
  return build_unified(mp.to_datum());
}

}  // namespace malcev
