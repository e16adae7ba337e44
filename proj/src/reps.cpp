#include "malcev/reps.hpp"

namespace malcev {

ModuleAction ModuleAction::zero(const MalcevAlgebra& A, int dim_v) {
  ModuleAction m;
  m.basis_v = MalcevAlgebra::default_names(dim_v, "v");
  m.act = BilinearMap(A.field(), A.dim(), dim_v, dim_v);
  return m;
}

ModuleAction ModuleAction::adjoint(const MalcevAlgebra& A) {
  ModuleAction m;
  m.basis_v = MalcevAlgebra::default_names(A.dim(), "v");
  m.act = BilinearMap(A.field(), A.dim(), A.dim(), A.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) m.act.set(i, j, A.basis_bracket(i, j));
  return m;
}

Cocycle Cocycle::zero(const MalcevAlgebra& A, int dim_v) {
  return Cocycle{SkewBilinearMap(A.field(), A.dim(), dim_v)};
}

VerificationReport check_module(const MalcevAlgebra& A, const ModuleAction& act,
                                int witness_cap) {
  if (act.act.dim_a() != A.dim() || act.act.dim_b() != act.carrier_dim() ||
      act.act.dim_c() != act.carrier_dim())
    throw DimensionMismatch("action tensor shape");
  if (act.act.field() != A.field()) throw FieldMismatch();

  const int n = A.dim(), m = act.carrier_dim();
  const Field& f = A.field();
  auto tr = [&](const Vec& x, const Vec& q) { return act.act.apply(x, q); };

  CheckBuilder c("MOD", witness_cap);
  for (int xi = 0; xi < n; ++xi)
    for (int yi = 0; yi < n; ++yi)
      for (int zi = 0; zi < n; ++zi)
        for (int qi = 0; qi < m; ++qi) {
          Vec x = Vec::basis(f, n, xi), y = Vec::basis(f, n, yi),
              z = Vec::basis(f, n, zi), q = Vec::basis(f, m, qi);
          Vec lhs = tr(A.bracket(x, z), tr(y, q));
          Vec rhs = tr(A.bracket(A.bracket(x, y), z), q) -
                    tr(x, tr(A.bracket(y, z), q)) + tr(z, tr(y, tr(x, q)));
          c.check({xi, yi, zi, qi}, lhs, rhs);
        }
  VerificationReport rep;
  rep.checks.push_back(c.take());
  return rep;
}

namespace {

MalcevAlgebra split_extension(const MalcevAlgebra& A, const ModuleAction& act,
                              const SkewBilinearMap* omega) {
  const int n = A.dim(), m = act.carrier_dim();
  const Field& f = A.field();
  std::vector<std::string> names = A.names();
  names.insert(names.end(), act.basis_v.begin(), act.basis_v.end());
  MalcevAlgebra E(f, names);

  auto embed = [&](const Vec& xm, const Vec& xv) {
    Vec out(f, n + m);
    for (int i = 0; i < n; ++i) out[i] = xm[i];
    for (int i = 0; i < m; ++i) out[n + i] = xv[i];
    return out;
  };
  const Vec zm(f, n), zv(f, m);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec vpart = omega ? omega->pair(i, j) : zv;
      E.set_pair_product(i, j, embed(A.pair_product(i, j), vpart));
    }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      E.set_pair_product(i, n + b, embed(zm, act.act.at(i, b)));
  // pairs inside V stay zero
  return E;
}

}  // namespace

MalcevAlgebra semidirect(const MalcevAlgebra& A, const ModuleAction& act) {
  if (act.act.field() != A.field()) throw FieldMismatch();
  if (act.act.dim_a() != A.dim()) throw DimensionMismatch();
  return split_extension(A, act, nullptr);
}

MalcevAlgebra cocycle_extension(const MalcevAlgebra& A, const ModuleAction& act,
                                const Cocycle& w) {
  if (act.act.field() != A.field() || w.omega.field() != A.field())
    throw FieldMismatch();
  if (act.act.dim_a() != A.dim() || w.omega.dim_a() != A.dim() ||
      w.omega.dim_c() != act.carrier_dim())
    throw DimensionMismatch();
  return split_extension(A, act, &w.omega);
}

VerificationReport check_cocycle(const MalcevAlgebra& A, const ModuleAction& act,
                                 const Cocycle& w, int witness_cap) {
  if (!check_module(A, act).overall()) throw ModuleAxiomFailed();
  const int n = A.dim(), m = act.carrier_dim();
  const Field& f = A.field();
  auto tr = [&](const Vec& x, const Vec& q) { return act.act.apply(x, q); };
  auto om = [&](const Vec& x, const Vec& y) { return w.omega.apply(x, y); };
  auto br = [&](const Vec& x, const Vec& y) { return A.bracket(x, y); };

  CheckBuilder c("COC", witness_cap);
  for (int xi = 0; xi < n; ++xi)
    for (int yi = 0; yi < n; ++yi)
      for (int zi = 0; zi < n; ++zi)
        for (int ti = 0; ti < n; ++ti) {
          Vec x = Vec::basis(f, n, xi), y = Vec::basis(f, n, yi),
              z = Vec::basis(f, n, zi), t = Vec::basis(f, n, ti);
          Vec lhs = om(br(x, z), br(y, t)) + tr(br(t, y), om(x, z)) +
                    tr(br(x, z), om(y, t));
          Vec rhs = om(br(br(x, y), z), t) + om(br(br(y, z), t), x) +
                    om(br(br(z, t), x), y) + om(br(br(t, x), y), z);
          rhs = rhs + tr(x, tr(t, om(y, z))) - tr(x, om(br(y, z), t));
          rhs = rhs + tr(z, tr(y, om(t, x))) - tr(z, om(br(t, x), y));
          rhs = rhs + tr(t, tr(z, om(x, y))) - tr(t, om(br(x, y), z));
          rhs = rhs + tr(y, tr(x, om(z, t))) - tr(y, om(br(z, t), x));
          c.check({xi, yi, zi, ti}, lhs, rhs);
        }
  VerificationReport rep;
  rep.checks.push_back(c.take());
  return rep;
}

}  // namespace malcev
