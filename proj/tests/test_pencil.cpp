#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qline/factor.hpp"
#include "qline/pencil.hpp"
#include "qline/util.hpp"

using namespace qline;

namespace {

bool proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_term().c == b * a.leading_term().c;
}

// Z-family member from the textual q and g (polynomials in x3, x4)
QuarticWithLine make_z(const Tower& tw, const std::string& q, const std::string& g) {
  const auto& F = tw.base();
  std::string text = "x3*x1^3+x4*x2^3+x1*x2*(" + q + ")+(" + g + ")";
  return from_normalized(tw, parse_poly(text, F, quartic_vars()));
}

const char* kZExplicitQ = "6*x3^2-3*x3*x4+3*x4^2";
const char* kZExplicitG =
    "1/3*(80*x3^4+20*x4^4-72*x3^3*x4-16*x3^2*x4^2-36*x3*x4^3)";

std::map<std::string, int> fiber_census(const FiberTable& table) {
  std::map<std::string, int> n;
  for (const auto& f : table.fibers) n[kodaira_name(f.kodaira)]++;
  return n;
}

// check that a reported P^3 line lies on the surface
void check_line_on_surface(const QuarticWithLine& X,
                           const std::pair<MPoly, MPoly>& line) {
  const Tower& tw = *X.tower;
  const FieldCtx& K = line.first.ctx();
  FqMat m(K, 2, 4);
  for (int which = 0; which < 2; ++which) {
    const MPoly& form = which ? line.second : line.first;
    for (const auto& t : form.terms())
      for (int v = 0; v < 4; ++v)
        if (t.e[v]) m.at(which, v) = t.c;
  }
  auto ker = m.kernel();
  REQUIRE(ker.size() == 2);
  static const std::vector<std::string> ab = {"a", "b"};
  std::vector<MPoly> images;
  for (int v = 0; v < 4; ++v) {
    MPoly im(K, ab);
    im += MPoly::variable(K, ab, 0) * ker[0][v];
    im += MPoly::variable(K, ab, 1) * ker[1][v];
    images.push_back(im);
  }
  MPoly restricted = X.f.map_coeffs(K).substitute(images);
  CHECK(restricted.is_zero());
  (void)tw;
}

}  // namespace

TEST_CASE("normalize_line") {
  Tower t(10007, 0);
  const auto& F = t.base();
  MPoly f = parse_poly("x3*x1^3+x4*x2^3+x3^4+x4^4", F, quartic_vars());
  MPoly x1 = MPoly::variable(F, quartic_vars(), 0);
  MPoly x2 = MPoly::variable(F, quartic_vars(), 1);
  MPoly x3 = MPoly::variable(F, quartic_vars(), 2);
  MPoly x4 = MPoly::variable(F, quartic_vars(), 3);

  // line already V(x3, x4): identity transform
  auto X = normalize_line(t, f, x3, x4);
  CHECK(X.f == f);
  CHECK(X.smooth_along_line);
  CHECK(X.a(1, 0) == x1.pow(3));
  CHECK(X.a(0, 1) == x2.pow(3));
  CHECK(X.a(4, 0) == parse_poly("1", F, quartic_vars()));

  // line V(x1, x2): swap roles
  MPoly g = parse_poly("x1*x3^3+x2*x4^3+x1^4+x2^4", F, quartic_vars());
  auto Y = normalize_line(t, g, x1, x2);
  for (const auto& term : Y.f.terms()) CHECK(term.e[2] + term.e[3] >= 1);
  // mapping normalized points back lands on the original line V(x1, x2)
  std::vector<Fq> pt = {Fq(F, 5), Fq(F, 7), Fq::zero(F), Fq::zero(F)};
  auto orig = Y.to_original.apply(pt);
  CHECK(g.eval(orig).is_zero());

  // Fermat quartic does not contain V(x3, x4)
  MPoly fermat = parse_poly("x1^4+x2^4+x3^4+x4^4", F, quartic_vars());
  CHECK_THROWS_AS(normalize_line(t, fermat, x3, x4), error);
  // dependent forms
  CHECK_THROWS_AS(normalize_line(t, f, x3, x3 * Fq(F, 2)), error);
}

TEST_CASE("fiber cubic of the Z family") {
  Tower t(10007, 0);
  const auto& F = t.base();
  auto X = make_z(t, kZExplicitQ, kZExplicitG);
  Fq s(F, 3), tt(F, 5);
  MPoly C = fiber_cubic(X, s, tt);
  // expected: s x1^3 + t x2^3 + q(s,t) x1 x2 u + g(s,t) u^3
  std::map<std::string, Fq> binds = {{"s", s}, {"t", tt}};
  MPoly q34 = parse_poly(kZExplicitQ, F, quartic_vars());
  MPoly g34 = parse_poly(kZExplicitG, F, quartic_vars());
  Fq qv = q34.eval({Fq(F, 0), Fq(F, 0), s, tt});
  Fq gv = g34.eval({Fq(F, 0), Fq(F, 0), s, tt});
  MPoly expected =
      parse_poly("s*x1^3 + t*x2^3", F, plane_vars(), binds) +
      MPoly::monomial(F, plane_vars(), {1, 1, 1}, qv) +
      MPoly::monomial(F, plane_vars(), {0, 0, 3}, gv);
  CHECK(C == expected);

  // degenerate member: q = g = 0 at (1:1) is the cone x1^3 + x2^3
  auto X0 = make_z(t, "0*x3", "0*x3");
  MPoly C0 = fiber_cubic(X0, Fq::one(F), Fq::one(F));
  CHECK(C0 == parse_poly("x1^3+x2^3", F, plane_vars()));
  auto cls = classify_plane_cubic(C0, t, 5);
  CHECK(cls.type == Kodaira::IV);
}

TEST_CASE("pencil discriminant matches the closed form for Z") {
  Tower t(10007, 0);
  const auto& F = t.base();
  auto X = make_z(t, kZExplicitQ, kZExplicitG);
  MPoly delta = pencil_discriminant(X);
  CHECK(delta.is_homogeneous());
  CHECK(delta.total_degree() == 24);
  // s t g (q^3 + 27 s t g)^3 with x3 -> s, x4 -> t
  auto to_st = [](const MPoly& h) {
    return h.renamed_var("x3", "s").renamed_var("x4", "t").rename_ring(pencil_vars());
  };
  MPoly qs = to_st(parse_poly(kZExplicitQ, F, quartic_vars()));
  REQUIRE(false == qs.is_zero());
  MPoly gs = to_st(parse_poly(kZExplicitG, F, quartic_vars()));
  MPoly s = MPoly::variable(F, pencil_vars(), 0);
  MPoly tt = MPoly::variable(F, pencil_vars(), 1);
  MPoly closed = s * tt * gs * (qs.pow(3) + s * tt * gs * Fq(F, 27)).pow(3);
  CHECK(proportional(delta, closed));

  // q = 0, g = x3^4 + x4^4: six fourfold roots
  auto X2 = make_z(t, "0*x3", "x3^4+x4^4");
  MPoly d2 = pencil_discriminant(X2);
  MPoly g2 = to_st(parse_poly("x3^4+x4^4", F, quartic_vars()));
  CHECK(proportional(d2, s.pow(4) * tt.pow(4) * g2.pow(4)));

  // fully singular pencil
  auto X0 = make_z(t, "0*x3", "0*x3");
  CHECK_THROWS_AS(pencil_discriminant(X0), error);
}

TEST_CASE("binary form roots and splitting fields") {
  Tower t(7, 0);
  const auto& F = t.base();
  // x1^2 x2^2: (0:1) and (1:0), both double
  MPoly f1 = parse_poly("s^2*t^2", F, pencil_vars());
  auto r1 = binary_form_roots(t, f1, 0);
  REQUIRE(r1.size() == 2);
  for (const auto& r : r1) CHECK(r.multiplicity == 2);
  CHECK((r1[0].a.is_zero() || r1[0].b.is_zero()));
  // s t (s - t): three simple roots (0:1), (1:0), (1:1)
  MPoly f2 = parse_poly("s^2*t-s*t^2", F, pencil_vars());
  auto r2 = binary_form_roots(t, f2, 0);
  REQUIRE(r2.size() == 3);
  int mults = 0;
  for (const auto& r : r2) mults += r.multiplicity;
  CHECK(mults == 3);
  // property: multiplicities always sum to the degree and every root kills
  // the form
  auto rng = seeded_rng(21);
  std::uniform_int_distribution<std::uint64_t> dist(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    MPoly g(F, pencil_vars());
    int d = 1 + (int)(rng() % 6);
    for (int i = 0; i <= d; ++i)
      g += MPoly::monomial(F, pencil_vars(), {i, d - i}, Fq(F, dist(rng)));
    if (g.is_zero()) continue;
    int deg = g.total_degree();
    auto roots = binary_form_roots(t, g, 100 + trial);
    int total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      const auto& K = r.a.ctx();
      MPoly gk = K.k == 1 ? g : g.map_coeffs(K);
      CHECK(gk.eval({r.a, r.b}).is_zero());
    }
    CHECK(total == deg);
  }
  // splitting-field wrapper: x^2 - 1 over F_7 splits in degree 1
  UPoly u1(F, {Fq(F, 6), Fq::zero(F), Fq::one(F)});
  auto s1 = roots_in_splitting_field(t, u1, 0);
  CHECK(s1.splitting->k == 1);
  REQUIRE(s1.roots.size() == 2);
  // x^2 + 1 over F_7 needs degree 2
  UPoly u2(F, {Fq::one(F), Fq::zero(F), Fq::one(F)});
  auto s2 = roots_in_splitting_field(t, u2, 0);
  CHECK(s2.splitting->k == 2);
  REQUIRE(s2.roots.size() == 2);
  for (auto& [r, m] : s2.roots) {
    CHECK((r * r + Fq::one(*s2.splitting)).is_zero());
    CHECK(m == 1);
  }
}

TEST_CASE("relabeling x3, x4 to s, t") {
  Tower t(10007, 0);
  const auto& F = t.base();
  MPoly q34 = parse_poly("x3^2+2*x3*x4", F, quartic_vars());
  MPoly q2 = q34.renamed_var("x3", "s").renamed_var("x4", "t").rename_ring(pencil_vars());
  CHECK(q2.str() == "s^2 + 2*s*t");
}

TEST_CASE("singular fiber table of the explicit Z instance") {
  Tower t(10007, 0);
  auto X = make_z(t, kZExplicitQ, kZExplicitG);
  auto table = singular_fiber_table(X);
  auto census = fiber_census(table);
  CHECK(census["I3"] == 6);
  CHECK(census["I1"] == 6);
  CHECK((int)table.fibers.size() == 12);
  int vsum = 0;
  for (const auto& f : table.fibers) {
    vsum += f.v_delta;
    CHECK(f.v_delta == kodaira_vdelta(f.kodaira));
  }
  CHECK(vsum == 24);
  // every reported line component lies on the surface
  for (const auto& f : table.fibers)
    for (const auto& line : f.components_p3) check_line_on_surface(X, line);
}

TEST_CASE("ramification profiles of the model families") {
  Tower t(10007, 0);
  const auto& F = t.base();
  auto X = make_z(t, kZExplicitQ, kZExplicitG);
  auto prof = ramification_profile(X);
  CHECK(prof.type == RamType::r22);
  REQUIRE(prof.points.size() == 2);
  CHECK(prof.points[0].multiplicity == 2);
  CHECK(prof.points[1].multiplicity == 2);
  // the two points are (0:1) and (1:0) on the line
  CHECK(prof.points[0].x1.is_zero());
  CHECK(prof.points[1].x2.is_zero());

  // scaled alphas give the same profile
  auto Xs = from_normalized(t, X.f * Fq(F, 1234));
  auto profs = ramification_profile(Xs);
  CHECK(profs.type == RamType::r22);

  // T-style alpha pair: x1^3 and x2^3 - 3c x1 x2^2 (c = 1); quartic filler
  MPoly f211 = parse_poly(
      "x3*x1^3 + x4*(x2^3-3*x1*x2^2) + x3^4+x4^4+x3^2*x4^2", F, quartic_vars());
  auto X211 = from_normalized(t, f211);
  auto prof211 = ramification_profile(X211);
  CHECK(prof211.type == RamType::r211);
  REQUIRE(prof211.points.size() == 3);
  CHECK(prof211.points[0].multiplicity == 2);
  // Wronskian 9 x1^2 x2 (x2 - 2 x1): double point at (0:1)
  CHECK(prof211.points[0].x1.is_zero());

  // images of multiplicity-2 points and contact patterns agree
  auto table = singular_fiber_table(X);
  for (const auto& P : prof.points) {
    auto img = line_point_image(X, P.x1, P.x2);
    bool found = false;
    for (const auto& fib : table.fibers) {
      if (fib.param.field_degree != img.field_degree) continue;
      if (!(fib.param == img)) continue;
      found = true;
      REQUIRE(!fib.contact.empty());
      CHECK(fib.contact[0] == 3);  // multiplicity-2 point -> triple contact
    }
    CHECK(found);
  }
  // every other fiber is transversal (1+1+1) for ramification type 2^2
  for (const auto& fib : table.fibers) {
    bool is_image = false;
    for (const auto& P : prof.points) {
      auto img = line_point_image(X, P.x1, P.x2);
      if (fib.param.field_degree == img.field_degree && fib.param == img)
        is_image = true;
    }
    if (!is_image) CHECK(fib.contact == std::vector<int>{1, 1, 1});
  }
}

TEST_CASE("smoothness decisions") {
  Tower t(10007, 0);
  const auto& F = t.base();
  // the explicit instance is smooth
  auto X = make_z(t, kZExplicitQ, kZExplicitG);
  auto rep = is_smooth(X);
  CHECK(rep.smooth);

  // q = g = 0 degenerates: singular along V(x1, x2)
  auto X0 = make_z(t, "0*x3", "0*x3");
  auto rep0 = is_smooth(X0);
  CHECK(!rep0.smooth);
  REQUIRE(rep0.witness.has_value());
  auto w = *rep0.witness;
  CHECK(w[0].is_zero());
  CHECK(w[1].is_zero());
  // witness really is a singular point of the surface
  const FieldCtx& K = w[0].ctx();
  for (int v = 0; v < 4; ++v) {
    MPoly dv = X0.f.derivative(v);
    CHECK((K.k == 1 ? dv : dv.map_coeffs(K)).eval(w).is_zero());
  }

  // square factor of g away from 0 and infinity: singular
  auto Xsq = make_z(t, "x3^2+x4^2", "(x3+x4)^2*(x3+2*x4)*(x3+3*x4)");
  auto repsq = is_smooth(Xsq);
  CHECK(!repsq.smooth);
  REQUIRE(repsq.witness.has_value());

  // smooth along the line fails when alphas share a root
  MPoly fshare = parse_poly("x3*x1^3+x4*x2^2*x1+x3^4+x4^4", F, quartic_vars());
  auto Xsh = from_normalized(t, fshare);
  CHECK(!Xsh.smooth_along_line);
  auto repsh = is_smooth(Xsh);
  CHECK(!repsh.smooth);
  REQUIRE(repsh.witness.has_value());
  auto wsh = *repsh.witness;
  CHECK(wsh[2].is_zero());
  CHECK(wsh[3].is_zero());
}

TEST_CASE("lines meeting the line on the explicit Z instance") {
  Tower t(10007, 0);
  auto X = make_z(t, kZExplicitQ, kZExplicitG);
  auto table = singular_fiber_table(X);
  auto lines = lines_meeting_line(X, table);
  CHECK(lines.count == 18);
  CHECK(lines.groups.size() == 6);
  for (const auto& g : lines.groups) {
    CHECK(g.kodaira == Kodaira::I3);
    CHECK(g.lines.size() == 3);
  }
  // singular input refuses
  auto X0 = make_z(t, "0*x3", "0*x3");
  CHECK_THROWS_AS(lines_meeting_line(X0), error);
}

TEST_CASE("analysis is invariant under projective changes of coordinates") {
  Tower t(10007, 0);
  const auto& F = t.base();
  auto X = make_z(t, kZExplicitQ, kZExplicitG);
  auto rng = seeded_rng(4242);
  std::uniform_int_distribution<std::uint64_t> dist(0, 10006);
  FqMat M(F, 4, 4);
  do {
    for (auto& x : M.a) x = Fq(F, dist(rng));
  } while (M.det().is_zero());
  MPoly fw = substitute_linear(X.f, M.to_rows());
  // the line V(x3, x4) maps to the span of columns 1, 2 of M^{-1}... easier:
  // the moved line is cut out by the last two rows of M (f(Mx) vanishes when
  // x3ments of Mx are on the original line).
  // forms of the moved line: rows 3 and 4 of M^{-1}?  Use: original line is
  // V(x3, x4); a point x is on the moved line iff Mx is on V(x3, x4), i.e.
  // row3(M) x = row4(M) x = 0.
  MPoly l1(F, quartic_vars()), l2(F, quartic_vars());
  for (int j = 0; j < 4; ++j) {
    l1 += MPoly::variable(F, quartic_vars(), j) * M.at(2, j);
    l2 += MPoly::variable(F, quartic_vars(), j) * M.at(3, j);
  }
  auto Y = normalize_line(t, fw, l1, l2);
  auto tx = singular_fiber_table(X);
  auto ty = singular_fiber_table(Y);
  CHECK(fiber_census(tx) == fiber_census(ty));
  CHECK(ramification_profile(X).type == ramification_profile(Y).type);
  CHECK(lines_meeting_line(X, tx).count == lines_meeting_line(Y, ty).count);
}

