#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qline/families.hpp"
#include "qline/oracle.hpp"
#include "qline/report.hpp"
#include "qline/verify.hpp"
#include "qline/util.hpp"

using namespace qline;

namespace {

// naive census over F_p (L = 1): every candidate line through every rational
// point of the marked line, verified by five evaluations of f
std::vector<LineKey> naive_census(const QuarticWithLine& X) {
  const Tower& tw = *X.tower;
  const FieldCtx& F = tw.base();
  std::uint64_t p = F.p;
  std::vector<LineKey> out;
  auto eval = [&](const std::vector<Fq>& pt) { return X.f.eval(pt); };
  auto consider = [&](const std::vector<Fq>& P, const std::vector<Fq>& Q) {
    if (Q[2].is_zero() && Q[3].is_zero()) return;  // span would be the line
    // f(P) = 0 already; four more points pin the binary quartic
    if (!eval(Q).is_zero()) return;
    for (std::uint64_t tau = 1; tau <= 3; ++tau) {
      std::vector<Fq> pt(4, Fq::zero(F));
      for (int i = 0; i < 4; ++i) pt[i] = P[i] + Fq(F, tau) * Q[i];
      if (!eval(pt).is_zero()) return;
    }
    // canonical key
    Fq s = Q[2], t = Q[3];
    std::array<std::uint64_t, 2> st;
    if (!t.is_zero()) {
      st = {(s * t.inv()).vec()[0], 1};
    } else {
      st = {1, 0};
    }
    Fq u = !t.is_zero() ? Q[3] : Q[2];
    // dual of the in-plane line through (P1, P2, 0) and (Q1, Q2, u)
    Fq d0 = P[1] * u - Fq::zero(F);
    Fq d1 = Fq::zero(F) - P[0] * u;
    Fq d2 = P[0] * Q[1] - P[1] * Q[0];
    std::array<Fq, 3> dual = {d0, d1, d2};
    for (size_t i = 3; i-- > 0;) {
      if (!dual[i].is_zero()) {
        Fq inv = dual[i].inv();
        for (auto& x : dual) x *= inv;
        break;
      }
    }
    LineKey key;
    key.v = {(std::uint32_t)st[0], (std::uint32_t)st[1],
             (std::uint32_t)dual[0].vec()[0], (std::uint32_t)dual[1].vec()[0],
             (std::uint32_t)dual[2].vec()[0]};
    out.push_back(key);
  };
  auto sweep_directions = [&](const std::vector<Fq>& P) {
    // directions over P^3's projective points
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c)
          consider(P, {Fq(F, a), Fq(F, b), Fq(F, c), Fq::one(F)});
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        consider(P, {Fq(F, a), Fq(F, b), Fq::one(F), Fq::zero(F)});
    // directions with x3 = x4 = 0 are skipped inside consider
  };
  for (std::uint64_t x1 = 0; x1 < p; ++x1)
    sweep_directions({Fq(F, x1), Fq::one(F), Fq::zero(F), Fq::zero(F)});
  sweep_directions({Fq::one(F), Fq::zero(F), Fq::zero(F), Fq::zero(F)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("oracle agrees with a naive scan and with the fiber table at p = 31") {
  Tower tw(31, 0);
  const auto& F = tw.base();
  // a smooth Z member (the composition 6 IV shape splits rationally often)
  ZParams par;
  par.q = MPoly::zero(F, quartic_vars());
  par.g = parse_poly("x3^4+x4^4", F, quartic_vars());
  auto X = make_Z(tw, par);
  auto table = singular_fiber_table(X);
  REQUIRE(is_smooth(X, table).smooth);
  auto conic_route = brute_force_lines_meeting(X, 1);
  auto naive = naive_census(X);
  CHECK(conic_route == naive);
  auto impl = rational_lines_from_table(X, table, 1);
  CHECK(conic_route == impl);
  // over F_{31^2} the implementation census still matches the oracle
  auto conic2 = brute_force_lines_meeting(X, 2);
  auto impl2 = rational_lines_from_table(X, table, 2);
  CHECK(conic2 == impl2);
  CHECK(conic2.size() >= conic_route.size());
}

TEST_CASE("oracle also agrees on a T member at p = 31") {
  Tower tw(31, 0);
  const auto& F = tw.base();
  auto rng = seeded_rng(5);
  std::uniform_int_distribution<std::uint64_t> dist(1, 30);
  for (int trial = 0; trial < 64; ++trial) {
    TParams par;
    par.a = Fq(F, dist(rng));
    par.b = Fq(F, dist(rng));
    par.c = Fq(F, dist(rng));
    MPoly g(F, quartic_vars());
    for (int i = 0; i <= 4; ++i)
      g += MPoly::monomial(F, quartic_vars(), {0, 0, i, 4 - i}, Fq(F, dist(rng) % 31));
    par.g = g;
    auto X = make_T(tw, par);
    FiberTable table;
    try {
      table = singular_fiber_table(X);
    } catch (const error&) {
      continue;
    }
    if (!is_smooth(X, table).smooth) continue;
    CHECK(brute_force_lines_meeting(X, 1) == rational_lines_from_table(X, table, 1));
    CHECK(brute_force_lines_meeting(X, 1) == naive_census(X));
    return;
  }
  FAIL("no smooth T member found at p = 31");
}

TEST_CASE("analyze produces a full deterministic report") {
  Tower tw(10007, 0);
  auto X = make_Z_paper_instance(tw);
  AnalyzeOptions opts;
  auto rep = analyze(tw, X, opts);
  CHECK(rep.smooth.smooth);
  REQUIRE(rep.second_kind.has_value());
  CHECK(*rep.second_kind);
  REQUIRE(rep.lines.has_value());
  CHECK(rep.lines->count == 18);
  REQUIRE(rep.detect.has_value());
  CHECK_FALSE(*rep.detect);
  CHECK(!rep.segre.has_value());
  REQUIRE(rep.cross_check_agrees.has_value());
  CHECK(*rep.cross_check_agrees);
  auto j1 = rep.to_json(opts).dump();
  // a fresh tower and a fresh analysis give byte-identical output
  Tower tw2(10007, 0);
  auto rep2 = analyze(tw2, make_Z_paper_instance(tw2), opts);
  CHECK(j1 == rep2.to_json(opts).dump());
  CHECK(j1.find("schema") != std::string::npos);
}

TEST_CASE("verify refuses unusable primes") {
  CHECK_THROWS_AS(verify_paper(13, 0), error);
  CHECK_THROWS_AS(verify_paper(7, 0), error);
}

TEST_CASE("partial report on singular input") {
  Tower tw(10007, 0);
  const auto& F = tw.base();
  MPoly f = parse_poly("x3*x1^3+x4*x2^3", F, quartic_vars());
  auto rep = analyze(tw, from_normalized(tw, f), AnalyzeOptions{});
  CHECK_FALSE(rep.smooth.smooth);
  REQUIRE(rep.smooth.witness.has_value());
  CHECK(!rep.lines.has_value());
  CHECK(!rep.segre.has_value());
  // witness lies on V(x1, x2)
  auto w = *rep.smooth.witness;
  CHECK(w[0].is_zero());
  CHECK(w[1].is_zero());
}

TEST_CASE("report data is mapped back to the caller's coordinates") {
  Tower tw(10007, 0);
  const auto& F = tw.base();
  auto Z = make_Z_paper_instance(tw);
  // move the line to V(x1, x2) by swapping variables
  FqMat M(F, 4, 4);
  M.at(0, 2) = M.at(1, 3) = M.at(2, 0) = M.at(3, 1) = Fq::one(F);
  MPoly fw = substitute_linear(Z.f, M.to_rows());
  MPoly l1 = MPoly::variable(F, quartic_vars(), 0);
  MPoly l2 = MPoly::variable(F, quartic_vars(), 1);
  auto rep = analyze(tw, fw, l1, l2, AnalyzeOptions{});
  CHECK(rep.smooth.smooth);
  CHECK(rep.lines->count == 18);
  // every reported line (pair of forms in original coordinates) vanishes on
  // a point of the original line V(x1, x2)
  auto j = rep.to_json(AnalyzeOptions{});
  // invariant data matches the unmoved analysis
  auto rep0 = analyze(tw, Z, AnalyzeOptions{});
  CHECK(rep0.lines->count == rep.lines->count);
  CHECK(rep0.ramification->type == rep.ramification->type);
  CHECK(rep0.fibers->fibers.size() == rep.fibers->fibers.size());
  (void)j;
}
