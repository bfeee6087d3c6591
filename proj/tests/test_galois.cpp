#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qline/factor.hpp"
#include "qline/galois.hpp"
#include "qline/upoly.hpp"
#include "qline/util.hpp"

using namespace qline;

TEST_CASE("prime field construction") {
  Tower t7(7, 0);
  CHECK(t7.base().p == 7);
  Tower big(10007, 0);
  CHECK(big.base().p == 10007);
  CHECK_THROWS_AS(Tower(3, 0), error);
  CHECK_THROWS_AS(Tower(2, 0), error);
  CHECK_THROWS_AS(Tower(10, 0), error);
}

TEST_CASE("inverse in F_7") {
  Tower t(7, 0);
  const auto& F = t.base();
  CHECK(invert(Fq(F, 3)) == Fq(F, 5));  // 3*5 = 15 = 1 mod 7
  CHECK(invert(Fq(F, 1)) == Fq(F, 1));
  CHECK_THROWS_AS(invert(Fq(F, 0)), error);
}

TEST_CASE("find_irreducible degrees 1 and 2") {
  // degree 1 always works
  auto lin = find_irreducible(7, 1, 0);
  CHECK(lin.size() == 2);
  CHECK(lin[1] == 1);

  // degree 2 over F_7: no root among the 7 candidates
  auto quad = find_irreducible(7, 2, 0);
  REQUIRE(quad.size() == 3);
  CHECK(quad[2] == 1);
  for (std::uint64_t r = 0; r < 7; ++r) {
    std::uint64_t val = (quad[0] + quad[1] * r + r * r) % 7;
    CHECK(val != 0);
  }

  // degree 2 over F_5
  auto q5 = find_irreducible(5, 2, 0);
  for (std::uint64_t r = 0; r < 5; ++r) {
    std::uint64_t val = (q5[0] + q5[1] * r + r * r) % 5;
    CHECK(val != 0);
  }

  // determinism in the seed
  CHECK(find_irreducible(7, 2, 0) == find_irreducible(7, 2, 0));
  CHECK(find_irreducible(10007, 6, 1) == find_irreducible(10007, 6, 1));
}

TEST_CASE("extension field arithmetic satisfies field axioms on samples") {
  Tower t(10007, 0);
  const auto& F = t.field(3);
  auto rng = seeded_rng(123);
  std::uniform_int_distribution<std::uint64_t> dist(0, 10006);
  auto rand_elt = [&] {
    std::vector<std::uint64_t> v(3);
    for (auto& x : v) x = dist(rng);
    return Fq::from_vec(F, v);
  };
  for (int i = 0; i < 1000; ++i) {
    Fq a = rand_elt(), b = rand_elt(), c = rand_elt();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * invert(a) == Fq::one(F));
  }
}

TEST_CASE("frobenius is additive and fixes exactly F_p") {
  Tower t(31, 0);
  const auto& F = t.field(4);
  auto rng = seeded_rng(9);
  std::uniform_int_distribution<std::uint64_t> dist(0, 30);
  auto rand_elt = [&] {
    std::vector<std::uint64_t> v(4);
    for (auto& x : v) x = dist(rng);
    return Fq::from_vec(F, v);
  };
  int fixed_outside_prime = 0;
  for (int i = 0; i < 200; ++i) {
    Fq a = rand_elt(), b = rand_elt();
    CHECK((a + b).pow(31) == a.pow(31) + b.pow(31));
    if (a.frobenius() == a && !a.in_prime_field()) ++fixed_outside_prime;
  }
  CHECK(fixed_outside_prime == 0);
  // prime-field elements are fixed
  for (std::uint64_t v = 0; v < 31; ++v) CHECK(Fq(F, v).frobenius() == Fq(F, v));
}

TEST_CASE("embedding is a field homomorphism and injective") {
  Tower t(7, 0);
  const auto& F49 = t.field(2);
  const auto& F74 = t.field(4);
  auto rng = seeded_rng(17);
  std::uniform_int_distribution<std::uint64_t> dist(0, 6);
  auto rand_elt = [&] {
    std::vector<std::uint64_t> v(2);
    for (auto& x : v) x = dist(rng);
    return Fq::from_vec(F49, v);
  };
  for (int i = 0; i < 100; ++i) {
    Fq a = rand_elt(), b = rand_elt();
    CHECK(t.embed(a, F74) * t.embed(b, F74) == t.embed(a * b, F74));
    CHECK(t.embed(a, F74) + t.embed(b, F74) == t.embed(a + b, F74));
    if (!(a == b)) CHECK(t.embed(a, F74) != t.embed(b, F74));
    // image fixed by the 2nd Frobenius power (lands in the copy of F_49)
    CHECK(t.embed(a, F74).pow_p(2) == t.embed(a, F74));
  }
  // prime-field elements embed as constants
  CHECK(t.embed(Fq(t.base(), 5), F74) == Fq(F74, 5));
  // generator of F_49 maps to a root of the F_49 modulus
  Fq g = Fq::gen(F49);
  Fq img = t.embed(g, F74);
  UPoly mod49(F74);
  for (auto c : F49.modulus) mod49.c.push_back(Fq(F74, c));
  mod49.trim();
  CHECK(mod49.eval(img).is_zero());
  CHECK_THROWS_AS(t.embed(Fq::gen(t.field(3)), F74), error);  // 3 does not divide 4
}

TEST_CASE("upoly divrem and gcd") {
  Tower t(7, 0);
  const auto& F = t.base();
  UPoly x = UPoly::x(F);
  UPoly f = (x + UPoly::constant(F, Fq(F, 1))) * (x + UPoly::constant(F, Fq(F, 6))) *
            (x + UPoly::constant(F, Fq(F, 2)));
  UPoly g = (x + UPoly::constant(F, Fq(F, 1))) * (x + UPoly::constant(F, Fq(F, 3)));
  UPoly d = gcd(f, g);
  CHECK(d.deg() == 1);
  CHECK(d == x + UPoly::constant(F, Fq(F, 1)));
  UPoly q, r;
  divrem(f, g, q, r);
  CHECK(q * g + r == f);
  CHECK(r.deg() < g.deg());
}

TEST_CASE("factorization examples over F_7") {
  Tower t(7, 0);
  const auto& F = t.base();
  UPoly x = UPoly::x(F);
  auto c = [&](std::uint64_t v) { return UPoly::constant(F, Fq(F, v)); };

  // x^2 - 1 = (x-1)(x+1)
  auto f1 = factor_univariate(x * x - c(1), 0);
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0].second == 1);
  CHECK(f1.factors[1].second == 1);

  // x^3 - 1 = (x-1)(x-2)(x-4): roots 1, 2, 4
  auto roots = roots_in_own_field(x * x * x - c(1), 0);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].first == Fq(F, 1));
  CHECK(roots[1].first == Fq(F, 2));
  CHECK(roots[2].first == Fq(F, 4));

  // x^2 + 1 irreducible over F_7
  auto f2 = factor_univariate(x * x + c(1), 0);
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].first.deg() == 2);

  // (x-1)^2 (x+1): squarefree structure
  auto sq = squarefree_decompose((x - c(1)) * (x - c(1)) * (x + c(1)));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 1);
  CHECK(sq[0].first == x + c(1));
  CHECK(sq[1].second == 2);
  CHECK(sq[1].first == x - c(1));
}

TEST_CASE("factorization round-trips on random polynomials") {
  for (std::uint64_t p : {10007ull}) {
    Tower t(p, 0);
    for (int k : {1, 2}) {
      const auto& F = t.field(k);
      auto rng = seeded_rng(hash_seq({p, (std::uint64_t)k}));
      std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<Fq> cs;
        int d = 1 + (int)(rng() % 12);
        for (int i = 0; i <= d; ++i) {
          std::vector<std::uint64_t> v(k);
          for (auto& x : v) x = dist(rng);
          cs.push_back(Fq::from_vec(F, v));
        }
        UPoly f(F, cs);
        if (f.deg() < 1) continue;
        auto fac = factor_univariate(f, 0);
        UPoly prod = UPoly::constant(F, fac.unit);
        int degsum = 0;
        for (auto& [g, m] : fac.factors) {
          for (int i = 0; i < m; ++i) prod = prod * g;
          degsum += m * g.deg();
        }
        CHECK(prod == f);
        CHECK(degsum == f.deg());
      }
    }
  }
}

TEST_CASE("all_roots places conjugate roots in the right extension") {
  Tower t(7, 0);
  const auto& F = t.base();
  UPoly x = UPoly::x(F);
  auto c = [&](std::uint64_t v) { return UPoly::constant(F, Fq(F, v)); };
  // x^2 + 1 over F_7: two conjugate roots in F_49
  auto roots = all_roots(t, x * x + c(1), 0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first.ctx().k == 2);
  CHECK(roots[1].first.ctx().k == 2);
  Fq r = roots[0].first;
  CHECK((r * r + Fq(t.field(2), 1)).is_zero());
  CHECK(roots[1].first == r.frobenius());
}
