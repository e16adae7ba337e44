#include "malcev/algebra.hpp"

#include <set>

namespace malcev {

MalcevAlgebra::MalcevAlgebra(Field f, std::vector<std::string> basis_names)
    : f_(f), names_(std::move(basis_names)) {
  if (names_.empty()) throw DimensionMismatch("dimension must be positive");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw Error("basis names must be pairwise distinct");
  const int n = dim();
  table_.assign(n * (n - 1) / 2, Vec(f_, n));
}

MalcevAlgebra MalcevAlgebra::abelian(const Field& f, int dim) {
  return MalcevAlgebra(f, default_names(dim));
}

std::vector<std::string> MalcevAlgebra::default_names(int dim, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

int MalcevAlgebra::name_index(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

void MalcevAlgebra::set_pair_product(int i, int j, const Vec& value) {
  if (i < 0 || j >= dim() || i >= j) throw DimensionMismatch("need 0 <= i < j < dim");
  if (value.dim() != dim()) throw DimensionMismatch();
  if (value.field() != f_) throw FieldMismatch();
  table_[pair_index(i, j)] = value;
}

Vec MalcevAlgebra::basis_bracket(int i, int j) const {
  if (i == j) return Vec(f_, dim());
  if (i < j) return table_[pair_index(i, j)];
  return -table_[pair_index(j, i)];
}

Vec MalcevAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.dim() != dim() || y.dim() != dim()) throw DimensionMismatch();
  if (x.field() != f_ || y.field() != f_) throw FieldMismatch();
  Vec out(f_, dim());
  for (int j = 1; j < dim(); ++j)
    for (int i = 0; i < j; ++i) {
      const Scalar c = x[i] * y[j] - x[j] * y[i];
      if (!c.is_zero()) out.axpy(c, table_[pair_index(i, j)]);
    }
  return out;
}

Vec MalcevAlgebra::jacobiator(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out = bracket(bracket(x, y), z);
  out = out + bracket(bracket(y, z), x);
  out = out + bracket(bracket(z, x), y);
  return out;
}

bool MalcevAlgebra::operator==(const MalcevAlgebra& o) const {
  return f_ == o.f_ && names_ == o.names_ && table_ == o.table_;
}

VerificationReport check_malcev_eq2(const MalcevAlgebra& A, int witness_cap) {
  const int n = A.dim();
  CheckBuilder c("EQ2", witness_cap);
  for (int i = 0; i < n; ++i) {
    Vec ei = Vec::basis(A.field(), n, i);
    for (int j = 0; j < n; ++j) {
      Vec ej = Vec::basis(A.field(), n, j);
      for (int k = 0; k < n; ++k) {
        Vec ek = Vec::basis(A.field(), n, k);
        Vec lhs = A.jacobiator(ei, ej, A.basis_bracket(i, k));
        Vec rhs = A.bracket(A.jacobiator(ei, ej, ek), ei);
        c.check({i, j, k}, lhs, rhs);
      }
    }
  }
  VerificationReport rep;
  rep.checks.push_back(c.take());
  return rep;
}

VerificationReport check_malcev_eq3(const MalcevAlgebra& A, int witness_cap) {
  const int n = A.dim();
  CheckBuilder c("EQ3", witness_cap);
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(Vec::basis(A.field(), n, i));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          Vec lhs = A.bracket(A.basis_bracket(x, z), A.basis_bracket(y, w));
          Vec rhs = A.bracket(A.bracket(A.basis_bracket(x, y), e[z]), e[w]);
          rhs = rhs + A.bracket(A.bracket(A.basis_bracket(y, z), e[w]), e[x]);
          rhs = rhs + A.bracket(A.bracket(A.basis_bracket(z, w), e[x]), e[y]);
          rhs = rhs + A.bracket(A.bracket(A.basis_bracket(w, x), e[y]), e[z]);
          c.check({x, y, z, w}, lhs, rhs);
        }
  VerificationReport rep;
  rep.checks.push_back(c.take());
  return rep;
}

bool malcev_eq3_holds(const MalcevAlgebra& A) {
  const int n = A.dim();
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(Vec::basis(A.field(), n, i));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          Vec lhs = A.bracket(A.basis_bracket(x, z), A.basis_bracket(y, w));
          Vec rhs = A.bracket(A.bracket(A.basis_bracket(x, y), e[z]), e[w]);
          rhs = rhs + A.bracket(A.bracket(A.basis_bracket(y, z), e[w]), e[x]);
          rhs = rhs + A.bracket(A.bracket(A.basis_bracket(z, w), e[x]), e[y]);
          rhs = rhs + A.bracket(A.bracket(A.basis_bracket(w, x), e[y]), e[z]);
          if (lhs != rhs) return false;
        }
  return true;
}

bool is_lie(const MalcevAlgebra& A) {
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec J = A.jacobiator(Vec::basis(A.field(), n, i), Vec::basis(A.field(), n, j),
                             Vec::basis(A.field(), n, k));
        if (!J.is_zero()) return false;
      }
  return true;
}

MalcevAlgebra non_lie_dim4(const Field& f) {
  MalcevAlgebra A(f, MalcevAlgebra::default_names(4));
  auto unit = [&](int k, long long s) {
    Vec v(f, 4);
    v[k] = Scalar::of_int(f, s);
    return v;
  };
  A.set_pair_product(0, 1, unit(1, 1));   // [e1,e2] = e2
  A.set_pair_product(0, 2, unit(2, 1));   // [e1,e3] = e3
  A.set_pair_product(0, 3, unit(3, -1));  // [e1,e4] = -e4
  A.set_pair_product(1, 2, unit(3, 1));   // [e2,e3] = e4
  return A;
}

}  // namespace malcev
