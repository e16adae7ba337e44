#include <random>

#include "doctest.h"
#include "malcev/algebra.hpp"

using namespace malcev;

namespace {

// Independent oracle: evaluate both Malcev identities straight off the
// structure constants with its own bracket expansion, kept apart from the
// library's code path.
Vec oracle_bracket(const MalcevAlgebra& A, const Vec& x, const Vec& y) {
  Vec out(A.field(), A.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Scalar c = x[i] * y[j];
      if (c.is_zero() || i == j) continue;
      Vec col = i < j ? A.pair_product(i, j) : -A.pair_product(j, i);
      out.axpy(c, col);
    }
  return out;
}

Vec oracle_jac(const MalcevAlgebra& A, const Vec& x, const Vec& y, const Vec& z) {
  return oracle_bracket(A, oracle_bracket(A, x, y), z) +
         oracle_bracket(A, oracle_bracket(A, y, z), x) +
         oracle_bracket(A, oracle_bracket(A, z, x), y);
}

bool oracle_eq2(const MalcevAlgebra& A) {
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec x = Vec::basis(A.field(), n, i), y = Vec::basis(A.field(), n, j),
            z = Vec::basis(A.field(), n, k);
        Vec lhs = oracle_jac(A, x, y, oracle_bracket(A, x, z));
        Vec rhs = oracle_bracket(A, oracle_jac(A, x, y, z), x);
        if (lhs != rhs) return false;
      }
  return true;
}

bool oracle_eq3(const MalcevAlgebra& A) {
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Vec x = Vec::basis(A.field(), n, i), y = Vec::basis(A.field(), n, j),
              z = Vec::basis(A.field(), n, k), w = Vec::basis(A.field(), n, l);
          Vec lhs = oracle_bracket(A, oracle_bracket(A, x, z), oracle_bracket(A, y, w));
          Vec rhs =
              oracle_bracket(A, oracle_bracket(A, oracle_bracket(A, x, y), z), w) +
              oracle_bracket(A, oracle_bracket(A, oracle_bracket(A, y, z), w), x) +
              oracle_bracket(A, oracle_bracket(A, oracle_bracket(A, z, w), x), y) +
              oracle_bracket(A, oracle_bracket(A, oracle_bracket(A, w, x), y), z);
          if (lhs != rhs) return false;
        }
  return true;
}

MalcevAlgebra random_anticommutative(const Field& f, int n, std::mt19937_64& rng) {
  MalcevAlgebra A = MalcevAlgebra::abelian(f, n);
  const std::uint64_t p = f.prime();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v(f, n);
      for (int k = 0; k < n; ++k) v[k] = Scalar::modp(rng() % p, p);
      A.set_pair_product(i, j, v);
    }
  return A;
}

MalcevAlgebra sl2_like(const Field& f) {
  // [e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2
  MalcevAlgebra A(f, MalcevAlgebra::default_names(3));
  Vec a(f, 3), b(f, 3), c(f, 3);
  a[2] = Scalar::one(f);
  b[0] = Scalar::of_int(f, -2);
  c[1] = Scalar::of_int(f, 2);
  A.set_pair_product(0, 1, a);
  A.set_pair_product(0, 2, b);
  A.set_pair_product(1, 2, c);
  return A;
}

}  // namespace

TEST_CASE("the four-dimensional example bracket table") {
  for (const Field& f : {Field::rationals(), Field::gf(5)}) {
    MalcevAlgebra A = non_lie_dim4(f);
    auto e = [&](int i) { return Vec::basis(f, 4, i); };
    CHECK(A.bracket(e(0), e(1)) == e(1));        // [e1,e2] = e2
    CHECK(A.bracket(e(1), e(0)) == -e(1));       // anticommutativity
    CHECK(A.bracket(e(1), e(2)) == e(3));        // [e2,e3] = e4
    CHECK(A.bracket(e(1), e(3)).is_zero());      // [e2,e4] = 0
    CHECK(A.bracket(e(0), e(3)) == -e(3));       // [e1,e4] = -e4
    CHECK(A.bracket(e(2), e(2)).is_zero());
  }
}

TEST_CASE("jacobiator of the four-dimensional example") {
  MalcevAlgebra A = non_lie_dim4(Field::rationals());
  auto e = [&](int i) { return Vec::basis(A.field(), 4, i); };
  Vec expected(A.field(), 4);
  expected[3] = Scalar::of_int(A.field(), 3);  // [e2,e3]+[e4,e1]+[-e3,e2] = 3 e4
  CHECK(A.jacobiator(e(0), e(1), e(2)) == expected);
  CHECK(A.jacobiator(e(0), e(1), e(2)) == oracle_jac(A, e(0), e(1), e(2)));
}

TEST_CASE("jacobiator is alternating") {
  std::mt19937_64 rng(10);
  Field F5 = Field::gf(5);
  for (int t = 0; t < 50; ++t) {
    MalcevAlgebra A = random_anticommutative(F5, 1 + rng() % 4, rng);
    const int n = A.dim();
    Vec x(F5, n), y(F5, n);
    for (int k = 0; k < n; ++k) {
      x[k] = Scalar::modp(rng() % 5, 5);
      y[k] = Scalar::modp(rng() % 5, 5);
    }
    CHECK(A.jacobiator(x, x, y).is_zero());
    CHECK(A.jacobiator(x, y, x).is_zero());
    CHECK(A.jacobiator(y, x, x).is_zero());
  }
}

TEST_CASE("bracket is bilinear") {
  std::mt19937_64 rng(11);
  Field F7 = Field::gf(7);
  for (int t = 0; t < 50; ++t) {
    MalcevAlgebra A = random_anticommutative(F7, 3, rng);
    Vec x(F7, 3), xp(F7, 3), y(F7, 3);
    for (int k = 0; k < 3; ++k) {
      x[k] = Scalar::modp(rng() % 7, 7);
      xp[k] = Scalar::modp(rng() % 7, 7);
      y[k] = Scalar::modp(rng() % 7, 7);
    }
    Scalar alpha = Scalar::modp(rng() % 7, 7);
    CHECK(A.bracket(x.scaled(alpha) + xp, y) ==
          A.bracket(x, y).scaled(alpha) + A.bracket(xp, y));
  }
}

TEST_CASE("both Malcev identities hold on the canonical examples") {
  for (const Field& f : {Field::rationals(), Field::gf(5), Field::gf(7)}) {
    CHECK(check_malcev_eq2(non_lie_dim4(f)).overall());
    CHECK(check_malcev_eq3(non_lie_dim4(f)).overall());
    CHECK(check_malcev_eq2(MalcevAlgebra::abelian(f, 3)).overall());
    CHECK(check_malcev_eq3(MalcevAlgebra::abelian(f, 3)).overall());
  }
}

TEST_CASE("a dim-3 table checked against the independent oracle") {
  // [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=0
  Field Q = Field::rationals();
  MalcevAlgebra A(Q, MalcevAlgebra::default_names(3));
  Vec a(Q, 3), b(Q, 3);
  a[2] = Scalar::one(Q);
  b[0] = Scalar::one(Q);
  A.set_pair_product(0, 1, a);
  A.set_pair_product(0, 2, b);
  CHECK(check_malcev_eq2(A).overall() == oracle_eq2(A));
  CHECK(check_malcev_eq3(A).overall() == oracle_eq3(A));
}

TEST_CASE("library checks agree with the oracle on random instances") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    Field f = Field::gf((t % 2) ? 5 : 7);
    MalcevAlgebra A = random_anticommutative(f, 1 + rng() % 3, rng);
    CHECK(check_malcev_eq2(A).overall() == oracle_eq2(A));
    CHECK(check_malcev_eq3(A).overall() == oracle_eq3(A));
    CHECK(check_malcev_eq3(A).overall() == malcev_eq3_holds(A));
  }
}

TEST_CASE("Lie detection") {
  CHECK_FALSE(is_lie(non_lie_dim4(Field::rationals())));  // J(e1,e2,e3) = 3e4
  CHECK(is_lie(MalcevAlgebra::abelian(Field::gf(5), 4)));
  CHECK(is_lie(sl2_like(Field::rationals())));
  CHECK(check_malcev_eq2(sl2_like(Field::gf(7))).overall());  // Lie implies Malcev
}

TEST_CASE("verdicts of the two identities agree on random instances") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    Field f = Field::gf((t % 2) ? 5 : 7);
    MalcevAlgebra A = random_anticommutative(f, 1 + rng() % 4, rng);
    CHECK(check_malcev_eq2(A).overall() == check_malcev_eq3(A).overall());
  }
}

TEST_CASE("failing checks carry capped lexicographic witnesses") {
  // a dim-3 table that is not Malcev
  Field F5 = Field::gf(5);
  std::mt19937_64 rng(14);
  MalcevAlgebra A = random_anticommutative(F5, 3, rng);
  while (check_malcev_eq3(A).overall()) A = random_anticommutative(F5, 3, rng);

  VerificationReport rep = check_malcev_eq3(A, 4);
  const CheckResult& c = rep.checks[0];
  CHECK_FALSE(c.passed);
  CHECK(c.failures >= c.witnesses.size());
  CHECK(c.witnesses.size() <= 4);
  for (size_t i = 1; i < c.witnesses.size(); ++i)
    CHECK(c.witnesses[i - 1].idx < c.witnesses[i].idx);
  for (const auto& w : c.witnesses) CHECK(w.lhs != w.rhs);
}

TEST_CASE("degenerate shapes are rejected") {
  Field Q = Field::rationals();
  CHECK_THROWS_AS(MalcevAlgebra(Q, {}), DimensionMismatch);
  CHECK_THROWS((MalcevAlgebra(Q, {"a", "a"})));
  MalcevAlgebra A = MalcevAlgebra::abelian(Q, 2);
  CHECK_THROWS_AS(A.bracket(Vec(Q, 3), Vec(Q, 2)), DimensionMismatch);
}
