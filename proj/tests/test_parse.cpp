#include "doctest.h"
#include "malcev/parse.hpp"
#include "malcev/unified.hpp"

using namespace malcev;

namespace {

const char* kM4 = R"(# the four-dimensional example
field rational
dim 4
basis e1 e2 e3 e4
[e1,e2] = e2
[e1,e3] = e3
[e1,e4] = -e4
[e2,e3] = e4
)";

}  // namespace

TEST_CASE("the four-dimensional document parses to the canonical table") {
  MalcevAlgebra A = parse_algebra(kM4);
  CHECK(A == non_lie_dim4(Field::rationals()));
}

TEST_CASE("a dimension line without brackets is an abelian algebra") {
  MalcevAlgebra A = parse_algebra("field gf 5\ndim 2\nbasis a b\n");
  CHECK(A.dim() == 2);
  CHECK(A.pair_product(0, 1).is_zero());
}

TEST_CASE("coefficient grammar") {
  MalcevAlgebra A = parse_algebra(
      "field rational\ndim 3\nbasis x y z\n[x,y] = 2/3*z - x + 4*y\n");
  Vec v = A.pair_product(0, 1);
  CHECK(v[0] == Scalar::rational(-1, 1));
  CHECK(v[1] == Scalar::rational(4, 1));
  CHECK(v[2] == Scalar::rational(2, 3));

  MalcevAlgebra B = parse_algebra("field gf 7\ndim 2\nbasis a b\n[a,b] = -1*a\n");
  CHECK(B.pair_product(0, 1)[0] == Scalar::modp(6, 7));

  // an explicit zero stands alone
  MalcevAlgebra C = parse_algebra("field gf 7\ndim 2\nbasis a b\n[a,b] = 0\n");
  CHECK(C.pair_product(0, 1).is_zero());
}

TEST_CASE("swapped pair stores the negated column") {
  MalcevAlgebra A = parse_algebra("field gf 5\ndim 2\nbasis a b\n[b,a] = a\n");
  Vec v = A.pair_product(0, 1);  // [a,b] = -a
  CHECK(v[0] == Scalar::modp(4, 5));
}

TEST_CASE("diagonal brackets are rejected with a location") {
  try {
    parse_algebra("field rational\ndim 2\nbasis e1 e2\n[e1,e1] = e2\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 4);
    CHECK(e.col >= 1);
  }
}

TEST_CASE("duplicate pairs are rejected either way round") {
  const char* doc = "field rational\ndim 2\nbasis a b\n[a,b] = a\n[b,a] = b\n";
  CHECK_THROWS_AS(parse_algebra(doc), DuplicatePair);
}

TEST_CASE("unknown names and bad fields are rejected") {
  CHECK_THROWS_AS(parse_algebra("field rational\ndim 1\nbasis a\n[a,c] = a\n"),
                  UnknownBasisName);
  CHECK_THROWS_AS(parse_algebra("field gf 3\ndim 1\nbasis a\n"), BadFieldChar);
  CHECK_THROWS_AS(parse_algebra("field gf 9\ndim 1\nbasis a\n"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra("field gf 5\ndim 2\nbasis a b\n[a,b] = 1/2*a\n"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_algebra("field real\ndim 1\nbasis a\n"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra("field rational\ndim 2\nbasis a\n"), SyntaxError);
}

TEST_CASE("algebra round trip is the identity on parsed values") {
  MalcevAlgebra A = parse_algebra(kM4);
  CHECK(parse_algebra(serialize_algebra(A)) == A);

  MalcevAlgebra B = parse_algebra(
      "field gf 7\ndim 3\nbasis x y z\n[x,y] = 3*z\n[y,z] = x + 6*y\n");
  CHECK(parse_algebra(serialize_algebra(B)) == B);
}

TEST_CASE("datum documents parse and round trip") {
  const char* doc = R"(field rational
dim 3
basis e1 e2 e4
[e1,e2] = e2
[e1,e4] = -e4
space V { basis v }
tl e2 v = e4
tr e1 v = v
)";
  ExtendingDatum d = parse_datum(doc);
  CHECK(d.M.dim() == 3);
  CHECK(d.dim_v() == 1);
  Vec e4(Field::rationals(), 3);
  e4[2] = Scalar::rational(1, 1);
  CHECK(d.tl.at(1, 0) == e4);
  CHECK(parse_datum(serialize_datum(d)) == d);
}

TEST_CASE("the extracted datum survives a parse/serialize/parse loop") {
  MalcevAlgebra E = non_lie_dim4(Field::rationals());
  ExtendingDatum d = extract_datum(Projection::coordinate_names(E, {"e1", "e2", "e4"}));
  ExtendingDatum back = parse_datum(serialize_datum(d));
  CHECK(back == d);
}

TEST_CASE("datum grammar rejections") {
  const char* head = "field gf 5\ndim 2\nbasis a b\nspace V { basis u w }\n";
  CHECK_THROWS_AS(parse_datum((std::string(head) + "omega u u = a\n")), SyntaxError);
  CHECK_THROWS_AS(parse_datum((std::string(head) + "omega u w = a\nomega w u = b\n")),
                  DuplicatePair);
  // wrong codomain: tl must land in the base algebra
  CHECK_THROWS_AS(parse_datum((std::string(head) + "tl a u = w\n")), WrongCodomain);
  // wrong codomain: tr must land in the complement
  CHECK_THROWS_AS(parse_datum((std::string(head) + "tr a u = b\n")), WrongCodomain);
  // shared names across the spaces
  CHECK_THROWS_AS(parse_datum("field gf 5\ndim 1\nbasis a\nspace V { basis a }\n"),
                  SyntaxError);
  // missing space section
  CHECK_THROWS_AS(parse_datum("field gf 5\ndim 1\nbasis a\ntl a u = a\n"), SyntaxError);
}

TEST_CASE("action and cocycle documents") {
  MalcevAlgebra M = non_lie_dim4(Field::gf(5));
  ModuleAction act = parse_action(M, "space V { basis v1 v2 }\ntr e1 v1 = v1 + 2*v2\n");
  CHECK(act.carrier_dim() == 2);
  CHECK(act.act.at(0, 0)[1] == Scalar::modp(2, 5));
  CHECK_THROWS_AS(parse_action(M, "space V { basis v }\ntl e1 v = e1\n"), SyntaxError);

  Cocycle w = parse_cocycle(M, act.basis_v, "omega e1 e2 = v2\nomega e3 e1 = v1\n");
  CHECK(w.omega.pair(0, 1)[1] == Scalar::modp(1, 5));
  // swapped order negates
  CHECK(w.omega.pair(0, 2)[0] == Scalar::modp(4, 5));
  CHECK_THROWS_AS(parse_cocycle(M, act.basis_v, "omega e1 e1 = v1\n"), SyntaxError);
}

TEST_CASE("map documents fill unlisted images with zero") {
  MalcevAlgebra M = non_lie_dim4(Field::rationals());
  Matrix D = parse_dmatrix(M, "D e2 = e4\n");
  CHECK(D.col(1)[3] == Scalar::rational(1, 1));
  CHECK(D.col(0).is_zero());
  CHECK_THROWS_AS(parse_dmatrix(M, "D e2 = e4\nD e2 = e3\n"), DuplicatePair);
}

TEST_CASE("error locations are 1-based line and column") {
  try {
    parse_algebra("field rational\ndim 2\nbasis a b\n[a,b] = a ++ b\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 4);
    CHECK(e.col == 12);
  }
  try {
    parse_algebra("field rational\ndim 2\nbasis a b\n[a,b] = c\n");
    FAIL("expected UnknownBasisName");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 4);
    CHECK(e.col == 9);
  }
}

TEST_CASE("rational tables reduce mod p when denominators are units") {
  MalcevAlgebra A = parse_algebra(
      "field rational\ndim 2\nbasis a b\n[a,b] = 2/3*a - b\n");
  MalcevAlgebra B = algebra_mod_p(A, 5);
  // 2/3 = 2 * 3^{-1} = 2*2 = 4 mod 5
  CHECK(B.pair_product(0, 1)[0] == Scalar::modp(4, 5));
  CHECK(B.pair_product(0, 1)[1] == Scalar::modp(4, 5));
  MalcevAlgebra C = parse_algebra(
      "field rational\ndim 2\nbasis a b\n[a,b] = 1/5*a\n");
  CHECK_THROWS_AS(algebra_mod_p(C, 5), FieldNotAllowed);
}
