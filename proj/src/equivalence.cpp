#include "malcev/equivalence.hpp"

#include <map>
#include <set>
#include <unordered_set>

#include "malcev/parallel.hpp"

namespace malcev {

Matrix psi_map(const MorphPair& mp, int dim_m, int dim_v) {
  if (mp.r.rows() != dim_m || mp.r.cols() != dim_v || mp.s.rows() != dim_v ||
      mp.s.cols() != dim_v)
    throw DimensionMismatch("morphism pair shape");
  const Field& f = mp.r.field();
  Matrix psi(f, dim_m + dim_v, dim_m + dim_v);
  for (int i = 0; i < dim_m; ++i) psi.at(i, i) = Scalar::one(f);
  for (int i = 0; i < dim_m; ++i)
    for (int a = 0; a < dim_v; ++a) psi.at(i, dim_m + a) = mp.r.at(i, a);
  for (int a = 0; a < dim_v; ++a)
    for (int b = 0; b < dim_v; ++b) psi.at(dim_m + a, dim_m + b) = mp.s.at(a, b);
  return psi;
}

VerificationReport check_morphism_pair(const ExtendingDatum& d,
                                       const ExtendingDatum& d2, const MorphPair& mp,
                                       int witness_cap) {
  const int n = d.M.dim(), m = d.dim_v();
  if (d2.M.dim() != n || d2.dim_v() != m)
    throw DimensionMismatch("data must share the base algebra and complement dim");
  if (!(d.M == d2.M)) throw DimensionMismatch("base algebras differ");
  const Field& f = d.M.field();

  auto rmap = [&](const Vec& u) { return mp.r * u; };
  auto smap = [&](const Vec& u) { return mp.s * u; };

  const char* convention_note =
      "actions written with the complement argument first in the source; "
      "implemented with normalized argument order";

  VerificationReport rep;
  {
    CheckBuilder cb("M1", witness_cap);
    cb.repair(convention_note);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < m; ++a) {
        Vec x = Vec::basis(f, n, i), u = Vec::basis(f, m, a);
        Vec lhs = smap(d.tr.apply(x, u));
        Vec rhs = d2.tr.apply(x, smap(u));
        cb.check({i, a}, lhs, rhs);
      }
    rep.checks.push_back(cb.take());
  }
  {
    CheckBuilder cb("M2", witness_cap);
    cb.repair(convention_note);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < m; ++a) {
        Vec x = Vec::basis(f, n, i), u = Vec::basis(f, m, a);
        Vec lhs = rmap(d.tr.apply(x, u));
        Vec rhs = d.M.bracket(x, rmap(u)) - d.tl.apply(x, u) + d2.tl.apply(x, smap(u));
        cb.check({i, a}, lhs, rhs);
      }
    rep.checks.push_back(cb.take());
  }
  {
    CheckBuilder cb("M3", witness_cap);
    cb.repair(convention_note);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
        Vec lhs = smap(d.bracket_v.apply(u, v));
        Vec rhs = d2.bracket_v.apply(smap(u), smap(v));
        rhs = rhs + d2.tr.apply(rmap(u), smap(v)) - d2.tr.apply(rmap(v), smap(u));
        cb.check({a, b}, lhs, rhs);
      }
    rep.checks.push_back(cb.take());
  }
  {
    CheckBuilder cb("M4", witness_cap);
    cb.repair(convention_note);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
        Vec lhs = rmap(d.bracket_v.apply(u, v));
        Vec rhs = d.M.bracket(rmap(u), rmap(v));
        rhs = rhs + d2.tl.apply(rmap(u), smap(v)) - d2.tl.apply(rmap(v), smap(u));
        rhs = rhs + d2.omega.apply(smap(u), smap(v)) - d.omega.apply(u, v);
        cb.check({a, b}, lhs, rhs);
      }
    rep.checks.push_back(cb.take());
  }

  bool conjunction = true;
  for (const auto& c : rep.checks) conjunction = conjunction && c.passed;

  // Direct route: psi must intertwine the two built brackets.
  MalcevAlgebra U1 = build_unified(d), U2 = build_unified(d2);
  Matrix psi = psi_map(mp, n, m);
  CheckBuilder hom("psi-homomorphism", witness_cap);
  for (int i = 0; i < n + m; ++i)
    for (int j = i + 1; j < n + m; ++j) {
      Vec lhs = psi * U1.basis_bracket(i, j);
      Vec rhs = U2.bracket(psi.col(i), psi.col(j));
      hom.check({i, j}, lhs, rhs);
    }
  CheckResult hom_res = hom.take();
  const bool hom_ok = hom_res.passed;
  rep.checks.push_back(std::move(hom_res));

  CheckResult cross;
  cross.id = "M-crosscheck";
  cross.passed = (conjunction == hom_ok);
  cross.note = "conjunction of M1..M4 against the homomorphism property of psi";
  rep.checks.push_back(cross);
  if (!cross.passed)
    rep.triage.push_back({"M1..M4", conjunction
                                        ? "conditions pass but psi is not a homomorphism"
                                        : "conditions fail for a homomorphism psi"});
  return rep;
}

namespace {

struct FlagCode {
  // Digits big-endian over GF(p): lam[0..n-1] then D entries a_ij row-major,
  // a_ij = coefficient of e_j in D(e_i). Numeric order == lexicographic
  // order of the (lam, D) tensor.
  static std::uint64_t encode(const TwistedDerivation& td, std::uint64_t p) {
    const int n = td.lam.dim();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) code = code * p + td.lam[i].residue();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) code = code * p + td.D.at(j, i).residue();
    return code;
  }
  static TwistedDerivation decode(std::uint64_t code, const MalcevAlgebra& M) {
    const Field& f = M.field();
    const std::uint64_t p = f.prime();
    const int n = M.dim();
    const int digits = n + n * n;
    std::vector<std::uint64_t> d(digits);
    for (int t = digits - 1; t >= 0; --t) {
      d[t] = code % p;
      code /= p;
    }
    TwistedDerivation td{Vec(f, n), Matrix(f, n, n)};
    for (int i = 0; i < n; ++i) td.lam[i] = Scalar::modp(d[i], p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) td.D.at(j, i) = Scalar::modp(d[n + i * n + j], p);
    return td;
  }
};

// Datum-route action: lam fixed, D'(x) = (D(x) + [r,x] + lam(x) r) / s.
TwistedDerivation act_on_datum(const MalcevAlgebra& M, const TwistedDerivation& td,
                               const Vec& r, const Scalar& s) {
  const int n = M.dim();
  TwistedDerivation out{td.lam, Matrix(M.field(), n, n)};
  const Scalar sinv = s.inv();
  for (int i = 0; i < n; ++i) {
    Vec img = td.D.col(i) + M.bracket(r, Vec::basis(M.field(), n, i)) +
              r.scaled(td.lam[i]);
    out.D.set_col(i, img.scaled(sinv));
  }
  return out;
}

// Extension-route tables: the bracket on the (n+1)-space with the base
// algebra in coordinates and [e_i, v] = D(e_i) + lam_i v.
MalcevAlgebra table_of_code(const MalcevAlgebra& M, std::uint64_t code) {
  TwistedDerivation td = FlagCode::decode(code, M);
  const int n = M.dim();
  const Field& f = M.field();
  std::vector<std::string> names = M.names();
  names.push_back("v");
  MalcevAlgebra E(f, names);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec w(f, n + 1);
      Vec base = M.pair_product(i, j);
      for (int k = 0; k < n; ++k) w[k] = base[k];
      E.set_pair_product(i, j, w);
    }
  for (int i = 0; i < n; ++i) {
    Vec w(f, n + 1);
    Vec img = td.D.col(i);
    for (int k = 0; k < n; ++k) w[k] = img[k];
    w[n] = td.lam[i];
    E.set_pair_product(i, n, w);
  }
  return E;
}

// Conjugates the table by the stabilizing map phi: e_i -> e_i, v -> r + s v,
// and reads the resulting (lam', D') back off the table.
std::uint64_t conjugate_table(const MalcevAlgebra& M, const MalcevAlgebra& E,
                              const Vec& r, const Scalar& s) {
  const int n = M.dim();
  const Field& f = M.field();
  const std::uint64_t p = f.prime();
  Matrix phi(f, n + 1, n + 1);
  for (int i = 0; i < n; ++i) phi.at(i, i) = Scalar::one(f);
  for (int k = 0; k < n; ++k) phi.at(k, n) = r[k];
  phi.at(n, n) = s;
  auto inv = invert(phi);
  if (!inv) throw Singular();

  TwistedDerivation td{Vec(f, n), Matrix(f, n, n)};
  for (int i = 0; i < n; ++i) {
    Vec b2 = phi * E.bracket(inv->col(i), inv->col(n));
    for (int k = 0; k < n; ++k) td.D.at(k, i) = b2[k];
    td.lam[i] = b2[n];
  }
  return FlagCode::encode(td, p);
}

}  // namespace

TwistedDerivation ClassificationResult::decode(std::uint64_t code,
                                               const MalcevAlgebra& M) const {
  return FlagCode::decode(code, M);
}

ClassificationResult classify_flag(const MalcevAlgebra& M, FlagRelation,
                                   std::uint64_t guard, bool parallel) {
  const Field& f = M.field();
  if (f.is_rational())
    throw FieldNotAllowed("classification enumerates over a prime field");
  const std::uint64_t p = f.prime();
  if (p == 2 || p == 3) throw BadFieldChar(p);
  const int n = M.dim();
  if (n > 3) throw ResourceLimit("classification is guarded to dim <= 3");

  const int digits = n + n * n;
  double space = 1;
  for (int t = 0; t < digits; ++t) space *= static_cast<double>(p);
  if (space > static_cast<double>(guard))
    throw ResourceLimit("candidate space exceeds the enumeration guard");
  const std::uint64_t total = static_cast<std::uint64_t>(space);

  ClassificationResult out;
  out.field = f;
  out.dim_m = n;
  out.candidates = total;

  // Validity sweep (datum route): the flag product must satisfy the
  // four-variable identity.
  std::vector<char> valid(total, 0);
  parallel_for(total, parallel, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t code = lo; code < hi; ++code) {
      TwistedDerivation td = FlagCode::decode(code, M);
      valid[code] = malcev_eq3_holds(flag_product(M, td)) ? 1 : 0;
    }
  });
  for (std::uint64_t code = 0; code < total; ++code)
    if (valid[code]) ++out.total_data;

  // Group elements (r, s): r over GF(p)^n, s nonzero (equiv) or 1 (cohom).
  auto orbits_datum = [&](bool full_s) {
    std::vector<OrbitClass> classes;
    std::vector<char> assigned(total, 0);
    std::uint64_t rn = 1;
    for (int i = 0; i < n; ++i) rn *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      if (!valid[code] || assigned[code]) continue;
      TwistedDerivation td = FlagCode::decode(code, M);
      std::set<std::uint64_t> orbit;
      for (std::uint64_t rc = 0; rc < rn; ++rc) {
        Vec r(f, n);
        std::uint64_t t = rc;
        for (int i = 0; i < n; ++i) {
          r[i] = Scalar::modp(t % p, p);
          t /= p;
        }
        for (std::uint64_t sv = 1; sv < (full_s ? p : 2ull); ++sv)
          orbit.insert(FlagCode::encode(act_on_datum(M, td, r, Scalar::modp(sv, p)), p));
      }
      OrbitClass cls;
      cls.rep_code = *orbit.begin();
      cls.size = orbit.size();
      for (std::uint64_t member : orbit) {
        if (!valid[member])
          throw Error("orbit left the valid set; action must preserve validity");
        assigned[member] = 1;
      }
      classes.push_back(cls);
    }
    return classes;
  };
  out.classes_equiv = orbits_datum(true);
  out.classes_cohom = orbits_datum(false);

  // Cross-check route: independent validity and orbit computation on
  // structure-constant tables conjugated by the stabilizing isomorphisms.
  std::vector<char> valid2(total, 0);
  parallel_for(total, parallel, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t code = lo; code < hi; ++code)
      valid2[code] = malcev_eq3_holds(table_of_code(M, code)) ? 1 : 0;
  });
  for (std::uint64_t code = 0; code < total; ++code)
    if (valid2[code]) ++out.cross_check.total_data;

  auto orbits_table = [&](bool full_s) {
    std::uint64_t count = 0;
    std::vector<char> assigned(total, 0);
    std::uint64_t rn = 1;
    for (int i = 0; i < n; ++i) rn *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      if (!valid2[code] || assigned[code]) continue;
      MalcevAlgebra E = table_of_code(M, code);
      std::set<std::uint64_t> orbit;
      for (std::uint64_t rc = 0; rc < rn; ++rc) {
        Vec r(f, n);
        std::uint64_t t = rc;
        for (int i = 0; i < n; ++i) {
          r[i] = Scalar::modp(t % p, p);
          t /= p;
        }
        for (std::uint64_t sv = 1; sv < (full_s ? p : 2ull); ++sv)
          orbit.insert(conjugate_table(M, E, r, Scalar::modp(sv, p)));
      }
      for (std::uint64_t member : orbit) assigned[member] = 1;
      ++count;
    }
    return count;
  };
  out.cross_check.count_equiv = orbits_table(true);
  out.cross_check.count_cohom = orbits_table(false);

  // Refinement: every cohom class sits inside one equiv class.
  std::map<std::uint64_t, std::uint64_t> equiv_rep_of;
  for (const auto& cls : out.classes_equiv) {
    TwistedDerivation td = FlagCode::decode(cls.rep_code, M);
    std::uint64_t rn = 1;
    for (int i = 0; i < n; ++i) rn *= p;
    for (std::uint64_t rc = 0; rc < rn; ++rc) {
      Vec r(f, n);
      std::uint64_t t = rc;
      for (int i = 0; i < n; ++i) {
        r[i] = Scalar::modp(t % p, p);
        t /= p;
      }
      for (std::uint64_t sv = 1; sv < p; ++sv)
        equiv_rep_of[FlagCode::encode(act_on_datum(M, td, r, Scalar::modp(sv, p)), p)] =
            cls.rep_code;
    }
  }
  out.cohom_refines_equiv = true;
  for (const auto& cls : out.classes_cohom) {
    TwistedDerivation td = FlagCode::decode(cls.rep_code, M);
    std::uint64_t rn = 1;
    for (int i = 0; i < n; ++i) rn *= p;
    std::set<std::uint64_t> parents;
    for (std::uint64_t rc = 0; rc < rn; ++rc) {
      Vec r(f, n);
      std::uint64_t t = rc;
      for (int i = 0; i < n; ++i) {
        r[i] = Scalar::modp(t % p, p);
        t /= p;
      }
      parents.insert(
          equiv_rep_of.at(FlagCode::encode(act_on_datum(M, td, r, Scalar::one(f)), p)));
    }
    if (parents.size() != 1) out.cohom_refines_equiv = false;
  }
  return out;
}

}  // namespace malcev
