#ifndef MALCEV_LINALG_HPP
#define MALCEV_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "malcev/field.hpp"

namespace malcev {

/// Dense coordinate vector over an exact field.
class Vec {
 public:
  Vec() = default;
  Vec(const Field& f, int dim) : f_(f), c_(dim, Scalar::zero(f)) {}
  static Vec basis(const Field& f, int dim, int i);
  static Vec of(const Field& f, std::initializer_list<long long> entries);

  const Field& field() const { return f_; }
  int dim() const { return static_cast<int>(c_.size()); }
  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar& operator[](int i) { return c_[i]; }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(const Scalar& s) const;
  Vec& axpy(const Scalar& s, const Vec& v);  // *this += s*v

  bool is_zero() const;
  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

  /// Lexicographic comparison via Scalar::cmp.
  static int cmp(const Vec& a, const Vec& b);

  /// Linear-combination rendering over basis names, e.g. "e2 + 4*e4"; "0" when zero.
  std::string str(const std::vector<std::string>& names) const;

 private:
  Field f_ = Field::rationals();
  std::vector<Scalar> c_;
};

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}
  static Matrix identity(const Field& f, int n);

  const Field& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int i, int j) const { return e_[i * cols_ + j]; }
  Scalar& at(int i, int j) { return e_[i * cols_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  Field f_ = Field::rationals();
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

/// Result of solving A x = b exactly.
struct Solution {
  std::optional<Vec> particular;  // absent when the system is inconsistent
  std::vector<Vec> kernel_basis;  // spans the null space of A
};

/// Exact linear solve. Fraction-free (Bareiss) forward elimination over the
/// rationals, plain elimination over GF(p); deterministic first-nonzero
/// pivoting so kernel bases are reproducible.
Solution solve_linear(const Matrix& A, const Vec& b);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> invert(const Matrix& S);

}  // namespace malcev

#endif
