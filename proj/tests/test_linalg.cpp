#include <random>

#include "doctest.h"
#include "malcev/linalg.hpp"

using namespace malcev;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937_64& rng) {
  const std::uint64_t p = f.prime();
  Matrix A(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = Scalar::modp(rng() % p, p);
  return A;
}

}  // namespace

TEST_CASE("identity system has the unique obvious solution") {
  Field Q = Field::rationals();
  Matrix I = Matrix::identity(Q, 2);
  Vec b = Vec::of(Q, {1, 2});
  Solution s = solve_linear(I, b);
  REQUIRE(s.particular.has_value());
  CHECK(*s.particular == b);
  CHECK(s.kernel_basis.empty());
}

TEST_CASE("zero system has full kernel") {
  Field Q = Field::rationals();
  Matrix Z(Q, 2, 2);
  Solution s = solve_linear(Z, Vec(Q, 2));
  REQUIRE(s.particular.has_value());
  CHECK(s.particular->is_zero());
  CHECK(s.kernel_basis.size() == 2);
}

TEST_CASE("random GF(5) systems verify by re-multiplication") {
  std::mt19937_64 rng(3);
  Field F5 = Field::gf(5);
  int consistent = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix A = random_matrix(F5, 4, 4, rng);
    Vec b(F5, 4);
    for (int i = 0; i < 4; ++i) b[i] = Scalar::modp(rng() % 5, 5);
    Solution s = solve_linear(A, b);
    if (s.particular) {
      ++consistent;
      CHECK(A * *s.particular == b);
    }
    for (const auto& k : s.kernel_basis) CHECK((A * k).is_zero());
  }
  CHECK(consistent > 100);  // most 4x4 systems over GF(5) are solvable
}

TEST_CASE("rational systems stay exact through fraction-free elimination") {
  std::mt19937_64 rng(4);
  Field Q = Field::rationals();
  for (int t = 0; t < 60; ++t) {
    Matrix A(Q, 3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j)
        A.at(i, j) = Scalar::rational(static_cast<long>(rng() % 11) - 5,
                                      1 + static_cast<long>(rng() % 4));
    Vec b(Q, 3);
    for (int i = 0; i < 3; ++i)
      b[i] = Scalar::rational(static_cast<long>(rng() % 11) - 5,
                              1 + static_cast<long>(rng() % 4));
    Solution s = solve_linear(A, b);
    if (s.particular) CHECK(A * *s.particular == b);
    for (const auto& k : s.kernel_basis) CHECK((A * k).is_zero());
    CHECK(s.kernel_basis.size() >= 1);  // wide system
  }
}

TEST_CASE("inconsistent systems report no particular solution") {
  Field Q = Field::rationals();
  Matrix A(Q, 2, 1);
  A.at(0, 0) = Scalar::rational(1, 1);
  A.at(1, 0) = Scalar::rational(1, 1);
  Vec b(Q, 2);
  b[0] = Scalar::rational(1, 1);
  b[1] = Scalar::rational(2, 1);
  Solution s = solve_linear(A, b);
  CHECK_FALSE(s.particular.has_value());
  CHECK(s.kernel_basis.empty());
}

TEST_CASE("kernel bases are reproducible") {
  std::mt19937_64 rng(5);
  Field F7 = Field::gf(7);
  Matrix A = random_matrix(F7, 3, 5, rng);
  Solution s1 = solve_linear(A, Vec(F7, 3));
  Solution s2 = solve_linear(A, Vec(F7, 3));
  REQUIRE(s1.kernel_basis.size() == s2.kernel_basis.size());
  for (size_t i = 0; i < s1.kernel_basis.size(); ++i)
    CHECK(s1.kernel_basis[i] == s2.kernel_basis[i]);
}

TEST_CASE("inverse of the identity and of an involution") {
  Field Q = Field::rationals();
  CHECK(*invert(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));

  Matrix swap(Q, 2, 2);
  swap.at(0, 1) = Scalar::rational(1, 1);
  swap.at(1, 0) = Scalar::rational(1, 1);
  CHECK(*invert(swap) == swap);
}

TEST_CASE("random invertible matrices over GF(7) invert exactly") {
  std::mt19937_64 rng(6);
  Field F7 = Field::gf(7);
  int found = 0;
  for (int t = 0; t < 120; ++t) {
    Matrix S = random_matrix(F7, 3, 3, rng);
    auto inv = invert(S);
    if (!inv) continue;
    ++found;
    CHECK(S * *inv == Matrix::identity(F7, 3));
    CHECK(*inv * S == Matrix::identity(F7, 3));
  }
  CHECK(found > 60);
}

TEST_CASE("singular matrices are detected") {
  Field F5 = Field::gf(5);
  Matrix S(F5, 2, 2);
  S.at(0, 0) = Scalar::modp(1, 5);
  S.at(0, 1) = Scalar::modp(2, 5);
  S.at(1, 0) = Scalar::modp(2, 5);
  S.at(1, 1) = Scalar::modp(4, 5);
  CHECK_FALSE(invert(S).has_value());
}

TEST_CASE("rational inverse with fractional entries") {
  Field Q = Field::rationals();
  Matrix S(Q, 2, 2);
  S.at(0, 0) = Scalar::rational(1, 2);
  S.at(0, 1) = Scalar::rational(1, 3);
  S.at(1, 0) = Scalar::rational(1, 4);
  S.at(1, 1) = Scalar::rational(1, 5);
  auto inv = invert(S);
  REQUIRE(inv.has_value());
  CHECK(S * *inv == Matrix::identity(Q, 2));
}
