#include "malcev/linalg.hpp"

#include <sstream>

namespace malcev {

Vec Vec::basis(const Field& f, int dim, int i) {
  Vec v(f, dim);
  v.c_[i] = Scalar::one(f);
  return v;
}

Vec Vec::of(const Field& f, std::initializer_list<long long> entries) {
  Vec v(f, static_cast<int>(entries.size()));
  int i = 0;
  for (long long e : entries) v.c_[i++] = Scalar::of_int(f, e);
  return v;
}

Vec Vec::operator+(const Vec& o) const {
  if (dim() != o.dim()) throw DimensionMismatch();
  Vec r = *this;
  for (int i = 0; i < dim(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  if (dim() != o.dim()) throw DimensionMismatch();
  Vec r = *this;
  for (int i = 0; i < dim(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Vec Vec::scaled(const Scalar& s) const {
  Vec r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Vec& Vec::axpy(const Scalar& s, const Vec& v) {
  if (dim() != v.dim()) throw DimensionMismatch();
  if (s.is_zero()) return *this;
  for (int i = 0; i < dim(); ++i) c_[i] += s * v.c_[i];
  return *this;
}

bool Vec::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Vec::operator==(const Vec& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

int Vec::cmp(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch();
  for (int i = 0; i < a.dim(); ++i) {
    int c = Scalar::cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Vec::str(const std::vector<std::string>& names) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    if (c_[i].is_zero()) continue;
    Scalar coeff = c_[i];
    bool neg = false;
    if (!field().is_rational()) {
      // residues print as-is
    } else if (Scalar::cmp(coeff, Scalar::zero(field())) < 0) {
      neg = true;
      coeff = -coeff;
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (!coeff.is_one()) out << coeff.literal() << "*";
    out << names[i];
  }
  if (first) return "0";
  return out.str();
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Vec Matrix::col(int j) const {
  Vec v(f_, rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(int i) const {
  Vec v(f_, cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  if (v.dim() != rows_) throw DimensionMismatch();
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch();
  Matrix r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.dim()) throw DimensionMismatch();
  Vec r(f_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

struct Echelon {
  std::vector<std::vector<Scalar>> m;  // echelon form of the augmented matrix
  std::vector<int> pivot_col;          // one entry per pivot row, increasing
  int solve_cols;
};

// Clears denominators row-wise so Bareiss stays integral over the rationals.
void make_row_integral(std::vector<Scalar>& row) {
  mpz_class l(1);
  for (const auto& s : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.rat().get_den_mpz_t());
  if (l == 1) return;
  Scalar f = Scalar::rational(mpq_class(l));
  for (auto& s : row) s *= f;
}

// Forward elimination. Pivots scan columns 0..solve_cols-1 left to right and
// take the first row with a nonzero entry. Over the rationals the two-step
// Bareiss recurrence keeps every intermediate entry integral; over GF(p) the
// same recurrence is ordinary exact elimination.
Echelon eliminate(const Field& f, std::vector<std::vector<Scalar>> m, int solve_cols) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (f.is_rational())
    for (auto& row : m) make_row_integral(row);

  Echelon e{std::move(m), {}, solve_cols};
  Scalar prev = Scalar::one(f);
  int r = 0;
  for (int c = 0; c < solve_cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!e.m[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) std::swap(e.m[pr], e.m[r]);
    const Scalar pivot = e.m[r][c];
    for (int i = r + 1; i < rows; ++i) {
      const Scalar head = e.m[i][c];
      for (int j = c; j < cols; ++j)
        e.m[i][j] = (pivot * e.m[i][j] - head * e.m[r][j]) / prev;
    }
    prev = pivot;
    e.pivot_col.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

Solution solve_linear(const Matrix& A, const Vec& b) {
  if (A.field() != b.field()) throw FieldMismatch();
  if (A.rows() != b.dim()) throw DimensionMismatch("A rows must equal b dim");
  const Field f = A.field();
  const int rows = A.rows(), n = A.cols();

  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(n + 1, Scalar::zero(f)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = A.at(i, j);
    m[i][n] = b[i];
  }
  Echelon e = eliminate(f, std::move(m), n);
  const int rank = static_cast<int>(e.pivot_col.size());

  bool consistent = true;
  for (int i = rank; i < rows; ++i)
    if (!e.m[i][n].is_zero()) consistent = false;

  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_col) is_pivot[c] = true;

  // Back substitution with the chosen free coordinates.
  auto back_substitute = [&](Vec x, bool use_aug) {
    for (int t = rank - 1; t >= 0; --t) {
      const int pc = e.pivot_col[t];
      Scalar acc = use_aug ? e.m[t][n] : Scalar::zero(f);
      for (int j = pc + 1; j < n; ++j)
        if (!e.m[t][j].is_zero() && !x[j].is_zero()) acc -= e.m[t][j] * x[j];
      x[pc] = acc / e.m[t][pc];
    }
    return x;
  };

  Solution sol;
  if (consistent) sol.particular = back_substitute(Vec(f, n), true);
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec k(f, n);
    k[j] = Scalar::one(f);
    sol.kernel_basis.push_back(back_substitute(std::move(k), false));
  }
  return sol;
}

std::optional<Matrix> invert(const Matrix& S) {
  if (S.rows() != S.cols()) throw DimensionMismatch("matrix must be square");
  const Field f = S.field();
  const int n = S.rows();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n, Scalar::zero(f)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = S.at(i, j);
    m[i][n + i] = Scalar::one(f);
  }
  Echelon e = eliminate(f, std::move(m), n);
  if (static_cast<int>(e.pivot_col.size()) < n) return std::nullopt;

  // Jordan sweep upward, then normalize pivots.
  for (int r = n - 1; r >= 0; --r) {
    const Scalar pivot = e.m[r][r];
    for (int i = 0; i < r; ++i) {
      const Scalar factor = e.m[i][r] / pivot;
      if (factor.is_zero()) continue;
      for (int j = r; j < 2 * n; ++j) e.m[i][j] -= factor * e.m[r][j];
    }
  }
  Matrix inv(f, n, n);
  for (int i = 0; i < n; ++i) {
    const Scalar d = e.m[i][i].inv();
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.m[i][n + j] * d;
  }
  return inv;
}

}  // namespace malcev
