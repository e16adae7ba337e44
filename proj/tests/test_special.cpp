#include <random>

#include "doctest.h"
#include "malcev/special.hpp"

using namespace malcev;

namespace {

MalcevAlgebra random_malcev_dim_le2(const Field& f, const std::string& stem,
                                    std::mt19937_64& rng) {
  // every anticommutative algebra of dim <= 2 satisfies the identities
  const std::uint64_t p = f.prime();
  int n = 1 + static_cast<int>(rng() % 2);
  MalcevAlgebra A(f, MalcevAlgebra::default_names(n, stem));
  if (n == 2) {
    Vec v(f, 2);
    for (int k = 0; k < 2; ++k) v[k] = Scalar::modp(rng() % p, p);
    A.set_pair_product(0, 1, v);
  }
  return A;
}

BilinearMap random_map(const Field& f, int da, int db, int dc, std::mt19937_64& rng,
                       int sparsity = 3) {
  BilinearMap m(f, da, db, dc);
  const std::uint64_t p = f.prime();
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      if (rng() % sparsity == 0) {
        Vec v(f, dc);
        for (int k = 0; k < dc; ++k) v[k] = Scalar::modp(rng() % p, p);
        m.set(a, b, v);
      }
  return m;
}

SkewBilinearMap random_skew(const Field& f, int da, int dc, std::mt19937_64& rng,
                            int sparsity = 3) {
  SkewBilinearMap m(f, da, dc);
  const std::uint64_t p = f.prime();
  for (int a = 0; a < da; ++a)
    for (int b = a + 1; b < da; ++b)
      if (rng() % sparsity == 0) {
        Vec v(f, dc);
        for (int k = 0; k < dc; ++k) v[k] = Scalar::modp(rng() % p, p);
        m.set_pair(a, b, v);
      }
  return m;
}

}  // namespace

TEST_CASE("trivial crossed product is the direct sum") {
  Field F5 = Field::gf(5);
  MalcevAlgebra M = non_lie_dim4(F5);
  MalcevAlgebra V(F5, {"v1"});
  CrossedSystem cs{M, V, BilinearMap(F5, 4, 1, 4), SkewBilinearMap(F5, 1, 4)};
  auto [E, rep] = crossed_product(cs);
  CHECK(E.dim() == 5);
  CHECK(rep.find("direct")->passed);
  CHECK(rep.overall());
}

TEST_CASE("crossed product keeps the complement bracket in the second slot") {
  std::mt19937_64 rng(40);
  Field F5 = Field::gf(5);
  for (int t = 0; t < 40; ++t) {
    MalcevAlgebra M = random_malcev_dim_le2(F5, "e", rng);
    MalcevAlgebra V = random_malcev_dim_le2(F5, "w", rng);
    CrossedSystem cs{M, V, random_map(F5, M.dim(), V.dim(), M.dim(), rng),
                     random_skew(F5, V.dim(), M.dim(), rng)};
    auto [E, rep] = crossed_product(cs);
    const int n = M.dim();
    for (int a = 0; a < V.dim(); ++a)
      for (int b = a + 1; b < V.dim(); ++b) {
        Vec w = E.pair_product(n + a, n + b);
        for (int k = 0; k < V.dim(); ++k) CHECK(w[n + k] == V.pair_product(a, b)[k]);
      }
  }
}

TEST_CASE("a crossed product with one action entry records its direct verdict") {
  Field Q = Field::rationals();
  MalcevAlgebra M = non_lie_dim4(Q);
  MalcevAlgebra V(Q, {"v"});
  CrossedSystem cs{M, V, BilinearMap(Q, 4, 1, 4), SkewBilinearMap(Q, 1, 4)};
  Vec e4(Q, 4);
  e4[3] = Scalar::one(Q);
  cs.tl.set(0, 0, e4);  // e1 <| v = e4
  auto [E, rep] = crossed_product(cs);
  bool direct = rep.find("direct")->passed;
  CHECK(direct == check_malcev_eq3(E).overall());
}

TEST_CASE("trivial skew-crossed product is the direct sum") {
  Field F7 = Field::gf(7);
  MalcevAlgebra M = non_lie_dim4(F7);
  MalcevAlgebra V(F7, {"v1", "v2"});
  SkewCrossedSystem ss{M, V, BilinearMap(F7, 4, 2, 2), SkewBilinearMap(F7, 2, 4)};
  auto [E, rep] = skew_crossed_product(ss);
  CHECK(rep.overall());
  CHECK(rep.find("direct")->passed);
}

TEST_CASE("skew-crossed product with a functional equals the flag bracket with zero map") {
  Field F5 = Field::gf(5);
  MalcevAlgebra M = non_lie_dim4(F5);
  MalcevAlgebra V(F5, {"u"});
  SkewCrossedSystem ss{M, V, BilinearMap(F5, 4, 1, 1), SkewBilinearMap(F5, 1, 4)};
  Vec lu(F5, 1);
  lu[0] = Scalar::one(F5);
  ss.tr.set(0, 0, lu);  // e1 |> u = u, the e1-supported functional
  auto [E, rep] = skew_crossed_product(ss);

  ExtendingDatum d = ExtendingDatum::zero(M, {"u"});
  d.tr = ss.tr;
  CHECK(E == build_unified(d));
  CHECK(rep.find("direct")->passed);  // that functional is the valid direction
}

TEST_CASE("matched pair with zero actions passes everything") {
  Field F5 = Field::gf(5);
  MalcevAlgebra M = non_lie_dim4(F5);
  MalcevAlgebra V(F5, {"v1", "v2"});
  MatchedPairData mp{M, V, BilinearMap(F5, 4, 2, 2), BilinearMap(F5, 4, 2, 4)};
  CHECK(matched_pair_check(mp).overall());
  MalcevAlgebra E = bicrossed_product(mp);
  CHECK(check_malcev_eq3(E).overall());
}

TEST_CASE("the extracted matched-pair instance passes with the repaired first condition") {
  MalcevAlgebra E0 = non_lie_dim4(Field::rationals());
  Projection pr = Projection::coordinate_names(E0, {"e1", "e2", "e4"});
  ExtendingDatum d = extract_datum(pr);
  REQUIRE(d.omega.is_zero());
  REQUIRE(d.bracket_v.is_zero());
  MatchedPairData mp{d.M, d.v_algebra(), d.tr, d.tl};
  VerificationReport rep = matched_pair_check(mp);
  CHECK(rep.find("direct")->passed);
  for (const char* id : {"MP1", "MP2", "MP3", "MP4", "MP5", "MP6"})
    CHECK(rep.find(id)->passed);
  CHECK_FALSE(rep.find("MP1")->as_printed);
  CHECK(rep.overall());
}

TEST_CASE("dual-path records on random matched pairs") {
  std::mt19937_64 rng(41);
  Field F5 = Field::gf(5);
  int direct_pass = 0, disagreements = 0;
  for (int t = 0; t < 150; ++t) {
    MalcevAlgebra M = random_malcev_dim_le2(F5, "e", rng);
    MalcevAlgebra V = random_malcev_dim_le2(F5, "w", rng);
    MatchedPairData mp{M, V, random_map(F5, M.dim(), V.dim(), V.dim(), rng),
                       random_map(F5, M.dim(), V.dim(), M.dim(), rng)};
    VerificationReport rep = matched_pair_check(mp);
    bool direct = rep.find("direct")->passed;
    CHECK(direct == check_malcev_eq3(bicrossed_product(mp)).overall());
    bool conj = true;
    for (const auto& c : rep.checks)
      if (c.id != "direct" && c.id != "MP1..MP6-crosscheck") conj = conj && c.passed;
    if (conj != direct) {
      ++disagreements;
      CHECK_FALSE(rep.triage.empty());
    }
    if (direct) ++direct_pass;
  }
  CHECK(direct_pass > 20);
}

TEST_CASE("special products are the unified product of their induced data") {
  std::mt19937_64 rng(42);
  Field F5 = Field::gf(5);
  for (int t = 0; t < 80; ++t) {
    MalcevAlgebra M = random_malcev_dim_le2(F5, "e", rng);
    MalcevAlgebra V = random_malcev_dim_le2(F5, "w", rng);
    const int n = M.dim(), m = V.dim();

    CrossedSystem cs{M, V, random_map(F5, n, m, n, rng), random_skew(F5, m, n, rng)};
    CHECK(crossed_product(cs).first == build_unified(cs.to_datum()));

    SkewCrossedSystem ss{M, V, random_map(F5, n, m, m, rng), random_skew(F5, m, n, rng)};
    CHECK(skew_crossed_product(ss).first == build_unified(ss.to_datum()));

    MatchedPairData mp{M, V, random_map(F5, n, m, m, rng), random_map(F5, n, m, n, rng)};
    CHECK(bicrossed_product(mp) == build_unified(mp.to_datum()));
  }
}

TEST_CASE("bicrossed product of abelian factors with zero actions is abelian") {
  Field F5 = Field::gf(5);
  MalcevAlgebra M = MalcevAlgebra::abelian(F5, 2);
  MalcevAlgebra V(F5, MalcevAlgebra::default_names(2, "w"));
  MatchedPairData mp{M, V, BilinearMap(F5, 2, 2, 2), BilinearMap(F5, 2, 2, 2)};
  MalcevAlgebra E = bicrossed_product(mp);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(E.pair_product(i, j).is_zero());
}

TEST_CASE("both factors embed as subalgebras of the bicrossed product") {
  std::mt19937_64 rng(43);
  Field F5 = Field::gf(5);
  MalcevAlgebra M = random_malcev_dim_le2(F5, "e", rng);
  MalcevAlgebra V = random_malcev_dim_le2(F5, "w", rng);
  MatchedPairData mp{M, V, random_map(F5, M.dim(), V.dim(), V.dim(), rng),
                     random_map(F5, M.dim(), V.dim(), M.dim(), rng)};
  MalcevAlgebra E = bicrossed_product(mp);
  const int n = M.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = n; k < E.dim(); ++k) CHECK(E.pair_product(i, j)[k].is_zero());
  for (int a = n; a < E.dim(); ++a)
    for (int b = a + 1; b < E.dim(); ++b)
      for (int k = 0; k < n; ++k) CHECK(E.pair_product(a, b)[k].is_zero());
}

TEST_CASE("non-Malcev factors are rejected") {
  Field Q = Field::rationals();
  MalcevAlgebra bad(Q, MalcevAlgebra::default_names(3));
  Vec a(Q, 3), b(Q, 3);
  a[2] = Scalar::rational(1, 1);
  b[0] = Scalar::rational(1, 1);
  bad.set_pair_product(0, 1, a);
  bad.set_pair_product(0, 2, b);
  REQUIRE_FALSE(check_malcev_eq3(bad).overall());
  MalcevAlgebra V(Q, {"v"});
  CrossedSystem cs{bad, V, BilinearMap(Q, 3, 1, 3), SkewBilinearMap(Q, 1, 3)};
  CHECK_THROWS_AS(crossed_product(cs), FactorNotMalcev);
}
