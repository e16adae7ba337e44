#include <random>

#include "doctest.h"
#include "malcev/field.hpp"

using namespace malcev;

TEST_CASE("rational arithmetic is exact and canonical") {
  Scalar a = Scalar::rational(1, 2), b = Scalar::rational(1, 3);
  CHECK((a + b) == Scalar::rational(5, 6));
  CHECK((a + b).str() == "5/6");

  // lowest terms, positive denominator
  Scalar c = Scalar::rational(-4, -6);
  CHECK(c.str() == "2/3");
  CHECK(Scalar::rational(2, -4).str() == "-1/2");
}

TEST_CASE("cross-multiplication identity on random rationals") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    long an = static_cast<long>(rng() % 41) - 20;
    long ad = 1 + static_cast<long>(rng() % 20);
    long bn = static_cast<long>(rng() % 41) - 20;
    long bd = 1 + static_cast<long>(rng() % 20);
    Scalar s = Scalar::rational(an, ad) + Scalar::rational(bn, bd);
    CHECK(s == Scalar::rational(an * bd + bn * ad, ad * bd));
  }
}

TEST_CASE("prime field arithmetic") {
  Scalar two = Scalar::modp(2, 5);
  CHECK(two.inv() == Scalar::modp(3, 5));  // 2*3 = 6 = 1 mod 5
  CHECK((two * two.inv()).is_one());
  CHECK((-Scalar::modp(0, 5)).is_zero());
  CHECK((Scalar::modp(4, 7) + Scalar::modp(5, 7)) == Scalar::modp(2, 7));
  CHECK(Scalar::modp(3, 7).str() == "3 mod 7");
}

TEST_CASE("inverse of zero signals division by zero") {
  CHECK_THROWS_AS(Scalar::modp(0, 5).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::rational(0, 1).inv(), DivisionByZero);
}

TEST_CASE("characteristic 2 and 3 are rejected") {
  CHECK_THROWS_AS(Field::gf(2), BadFieldChar);
  CHECK_THROWS_AS(Field::gf(3), BadFieldChar);
  CHECK_THROWS_AS(Field::gf(6), FieldNotAllowed);
  CHECK_THROWS_AS(Field::gf(1), FieldNotAllowed);
  CHECK(Field::gf(5).prime() == 5);
  CHECK(Field::gf(65537).prime() == 65537);
}

TEST_CASE("operands must share the field") {
  CHECK_THROWS_AS(Scalar::modp(1, 5) + Scalar::modp(1, 7), FieldMismatch);
  CHECK_THROWS_AS(Scalar::rational(1, 2) * Scalar::modp(1, 5), FieldMismatch);
}

TEST_CASE("scalar parsing round-trips literals") {
  Field Q = Field::rationals(), F7 = Field::gf(7);
  CHECK(Scalar::parse(Q, "2/3") == Scalar::rational(2, 3));
  CHECK(Scalar::parse(Q, "-1") == Scalar::rational(-1, 1));
  CHECK(Scalar::parse(F7, "12") == Scalar::modp(5, 7));
  CHECK(Scalar::parse(F7, "-1") == Scalar::modp(6, 7));
  CHECK_THROWS(Scalar::parse(F7, "1/2"));
}

TEST_CASE("field-element inverses on random instances") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    std::uint64_t p = (t % 2) ? 5 : 7;
    Scalar s = Scalar::modp(1 + rng() % (p - 1), p);
    CHECK((s * s.inv()).is_one());
  }
}
