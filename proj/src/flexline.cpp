#include "qline/flexline.hpp"

#include <algorithm>
#include <numeric>

#include "qline/factor.hpp"
#include "qline/util.hpp"

namespace qline {

const char* sing_class_name(SegreDecomposition::SingClass c) {
  return c == SegreDecomposition::SingClass::line_of_triple_points
             ? "line-of-triple-points"
             : "twisted-cubic";
}

const char* irreducibility_cert_name(IrreducibilityCert c) {
  switch (c) {
    case IrreducibilityCert::linear_free: return "linear-free";
    case IrreducibilityCert::eisenstein_irreducible: return "eisenstein-irreducible";
    case IrreducibilityCert::unverified: return "unverified";
  }
  return "?";
}

// ------------------------------------------------------------ second kind

bool is_second_kind(const QuarticWithLine& X) {
  require(X.smooth_along_line, errc::singular_surface,
          "second-kind test needs a surface smooth along the line");
  // Flex condition along the line: at every point of l meeting a fiber, the
  // ternary Hessian of the fiber cubic vanishes. With the generic fiber
  // cubic C(x1, x2, u; s, t), this says the binary cubic s a10 + t a01
  // divides Hess(C)|_{u=0} identically.
  MPoly C = generic_fiber_cubic(X);
  const FieldCtx& F = C.ctx();
  const auto& big = C.vars();
  MPoly h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = C.derivative(i).derivative(j);
  MPoly H = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
            h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
            h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  MPoly H0(F, big);
  for (const auto& t : H.terms())
    if (t.e[2] == 0) H0.add_term(t.e, t.c);
  H0.normalize();
  if (H0.is_zero()) return true;
  MPoly c(F, big);
  MPoly a10 = X.a(1, 0), a01 = X.a(0, 1);
  for (const auto& t : a10.terms()) c.add_term({t.e[0], t.e[1], 0, 1, 0}, t.c);
  for (const auto& t : a01.terms()) c.add_term({t.e[0], t.e[1], 0, 0, 1}, t.c);
  c.normalize();
  return H0.try_divide_exact(c).has_value();
}

// ------------------------------------------------------------ flex surface

namespace {

std::uint64_t quartic_salt(const QuarticWithLine& X, std::uint64_t salt) {
  std::uint64_t h = hash_seq({0xf1e, salt, X.f.ctx().p, X.tower->seed()});
  for (const auto& t : X.f.terms()) {
    for (int e : t.e) h = hash_mix(h, (std::uint64_t)e);
    for (auto v : t.c.vec()) h = hash_mix(h, v);
  }
  return h;
}

// binary form in the (x1, x2) slots of the quartic ring, squarefree test;
// dehomogenizes at the second slot
bool binary34_squarefree(const MPoly& form_infull, int v0) {
  const FieldCtx& K = form_infull.ctx();
  int deg = form_infull.total_degree();
  UPoly u(K);
  u.c.assign(deg + 1, Fq::zero(K));
  for (const auto& t : form_infull.terms()) u.c[t.e[v0]] = t.c;
  u.trim();
  int inf = deg - std::max(u.deg(), 0);
  if (inf >= 2) return false;
  if (u.deg() >= 1 && gcd(u, u.derivative()).deg() > 0) return false;
  return true;
}

Fq eval_binary(const MPoly& form_infull, int v0, int v1, const Fq& a, const Fq& b) {
  const FieldCtx& K = a.ctx();
  const MPoly f = form_infull.ctx() == K ? form_infull : form_infull.map_coeffs(K);
  std::vector<Fq> pt(f.nvars(), Fq::zero(K));
  pt[v0] = a;
  pt[v1] = b;
  return f.eval(pt);
}

struct PlaneOrbit {
  MPoly fp_factor;            // beta(x3, x4), irreducible over F_p
  int multiplicity = 0;
  std::vector<PencilPoint> params;  // the geometric planes as pencil points
};

// pencil-plane part of a divisor in (x3, x4)-containing coordinates: the gcd
// of the (x1, x2, u)-coefficient binary forms of S(x1, x2, s u, t u)
MPoly pencil_plane_content(const MPoly& S) {
  const FieldCtx& F = S.ctx();
  static const std::vector<std::string> big = {"x1", "x2", "u", "s", "t"};
  MPoly G(F, big);
  for (const auto& term : S.terms()) {
    // x3 -> s u, x4 -> t u
    ExpVec e = {term.e[0], term.e[1], term.e[2] + term.e[3], term.e[2], term.e[3]};
    G.add_term(std::move(e), term.c);
  }
  G.normalize();
  // collect coefficients over (x1, x2, u) monomials
  std::map<ExpVec, UPoly> coeff;  // dehomogenized at t = 1
  std::map<ExpVec, int> st_degree;
  for (const auto& term : G.terms()) {
    ExpVec key = {term.e[0], term.e[1], term.e[2]};
    int sdeg = term.e[3];
    auto& u = coeff[key];
    if (u.F == nullptr) u = UPoly::zero(F);
    if ((int)u.c.size() < sdeg + 1) u.c.resize(sdeg + 1, Fq::zero(F));
    u.c[sdeg] = term.c;
    auto& d = st_degree[key];
    d = std::max(d, term.e[3] + term.e[4]);
  }
  UPoly g = UPoly::zero(F);
  int min_inf = -1;  // multiplicity of the root (1 : 0), i.e. plane V(x4)
  for (auto& [key, u] : coeff) {
    u.trim();
    int total = st_degree[key];
    // recover the true (s, t)-homogeneous degree of this coefficient form
    int inf = total - std::max(u.deg(), 0);
    // forms of different homogeneous degrees: gcd uses the polynomial part
    g = g.is_zero() ? u : gcd(g, u);
    min_inf = (min_inf < 0) ? inf : std::min(min_inf, inf);
  }
  if (g.is_zero()) return MPoly::zero(F, quartic_vars());
  g = g.monic();
  // homogenize back into (x3, x4)
  MPoly out(F, quartic_vars());
  int d = g.deg() + std::max(min_inf, 0);
  for (int k = 0; k <= g.deg(); ++k) {
    if (g.c[k].is_zero()) continue;
    out.add_term({0, 0, k, d - k}, g.c[k]);
  }
  out.normalize();
  return out;
}

}  // namespace

std::vector<MPoly> tangent_planes_at_ramification(const QuarticWithLine& X,
                                                  const RamificationProfile& prof) {
  std::vector<MPoly> out;
  for (const auto& P : prof.points) {
    const FieldCtx& K = P.x1.ctx();
    Fq a10 = eval_binary(X.a(1, 0), 0, 1, P.x1, P.x2);
    Fq a01 = eval_binary(X.a(0, 1), 0, 1, P.x1, P.x2);
    MPoly T(K, quartic_vars());
    if (!a10.is_zero()) T += MPoly::variable(K, quartic_vars(), 2) * a10;
    if (!a01.is_zero()) T += MPoly::variable(K, quartic_vars(), 3) * a01;
    require(!T.is_zero(), errc::internal, "tangent plane at a singular line point");
    out.push_back(normalize_form(T));
  }
  return out;
}

FlexSurface flex_surface(const QuarticWithLine& X) {
  require(X.smooth_along_line, errc::singular_surface,
          "flex surface needs a surface smooth along the line");
  const Tower& tw = *X.tower;
  const FieldCtx& F = X.f.ctx();
  const auto& vars = quartic_vars();

  auto prof = ramification_profile(X);

  // genericity adjustment: mix (x3, x4) so both alpha forms become squarefree
  // and nonvanishing at the ramification points
  auto rng = seeded_rng(quartic_salt(X, 0xad50));
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  FqMat N(F, 2, 2);
  MPoly fadj(F, vars);
  MPoly a10(F, vars), a01(F, vars);
  bool found = false;
  for (int trial = 0; trial < 200 && !found; ++trial) {
    if (trial == 0) {
      N = FqMat::identity(F, 2);
    } else {
      for (auto& x : N.a) x = Fq(F, dist(rng));
      if (N.det().is_zero()) continue;
    }
    FqMat M4 = FqMat::identity(F, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) M4.at(2 + i, 2 + j) = N.at(i, j);
    fadj = substitute_linear(X.f, M4.to_rows());
    // alpha' forms of the adjusted quartic
    auto Xa = from_normalized(tw, fadj);
    a10 = Xa.a(1, 0);
    a01 = Xa.a(0, 1);
    if (a10.is_zero() || a01.is_zero()) continue;
    if (!binary34_squarefree(a10, 0)) continue;
    if (!binary34_squarefree(a01, 0)) continue;
    bool ram_ok = true;
    for (const auto& P : prof.points) {
      if (eval_binary(a10, 0, 1, P.x1, P.x2).is_zero() ||
          eval_binary(a01, 0, 1, P.x1, P.x2).is_zero()) {
        ram_ok = false;
        break;
      }
    }
    if (!ram_ok) continue;
    found = true;
  }
  require(found, errc::elimination_degenerate,
          "no pencil coordinate change achieves the genericity conditions");

  // h polynomials of the construction (in x1, x2 slots of the quartic ring)
  auto Xa = from_normalized(tw, fadj);
  MPoly a20 = Xa.a(2, 0), a11 = Xa.a(1, 1), a02 = Xa.a(0, 2);
  MPoly h3 = a20 * a01 * a01 - a11 * a10 * a01 + a02 * a10 * a10;
  MPoly h1 = a01 * a10.derivative(0) - a10 * a01.derivative(0);
  MPoly h2 = a01 * a10.derivative(1) - a10 * a01.derivative(1);

  // bihomogeneous forms in (z1, z2; x1..x4), dehomogenized at z2 = 1
  static const std::vector<std::string> big = {"z1", "x1", "x2", "x3", "x4"};
  auto to_z = [&](const MPoly& b) {
    // binary form in (x1, x2) -> polynomial in z1 (z2 = 1)
    MPoly out(F, big);
    for (const auto& t : b.terms()) out.add_term({t.e[0], 0, 0, 0, 0}, t.c);
    out.normalize();
    return out;
  };
  auto xvar = [&](int i) { return MPoly::variable(F, big, 1 + i); };
  MPoly H3 = to_z(a10) * xvar(2) + to_z(a01) * xvar(3);
  MPoly H8 = to_z(a01) * to_z(h1) * xvar(0) + to_z(a01) * to_z(h2) * xvar(1) +
             to_z(h3) * xvar(2);
  MPoly H8s = to_z(a10) * to_z(h1) * xvar(0) * Fq(F, F.p - 1) -
              to_z(a10) * to_z(h2) * xvar(1) + to_z(h3) * xvar(3);
  MPoly E = resultant_formal(H3, H8, 0, 3, 8).rename_ring(vars);
  MPoly Es = resultant_formal(H3, H8s, 0, 3, 8).rename_ring(vars);
  require(!E.is_zero() && !Es.is_zero(), errc::elimination_degenerate,
          "eliminant vanishes identically");

  FlexSurface out;
  out.raw_degree = E.total_degree();

  // strip the auxiliary coordinate planes to their exact orders
  auto strip_var = [&](MPoly h, int v, int& order) {
    MPoly plane = MPoly::variable(F, vars, v);
    order = 0;
    for (;;) {
      auto q = h.try_divide_exact(plane);
      if (!q) break;
      h = std::move(*q);
      ++order;
    }
    return h;
  };
  int m3 = 0, m4 = 0;
  MPoly Sdiv = strip_var(E, 2, m3);
  MPoly Sdiv4 = strip_var(Es, 3, m4);
  require(m3 >= 3, errc::elimination_degenerate,
          "auxiliary plane multiplicity below three");
  out.stripped_power = m3;

  // undo the pencil coordinate change
  FqMat M4 = FqMat::identity(F, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M4.at(2 + i, 2 + j) = N.at(i, j);
  FqMat M4inv = M4.inverse();
  MPoly Sorig = substitute_linear(Sdiv, M4inv.to_rows());
  MPoly Sorig4 = substitute_linear(Sdiv4, M4inv.to_rows());
  out.divisor = Sorig;
  out.symmetric_divisor_match =
      (Sorig * Sorig4.leading_term().c == Sorig4 * Sorig.leading_term().c);
  if (!out.symmetric_divisor_match) {
    // the two eliminants may differ as divisors but must carry the same
    // support; check mutual divisibility component-wise via the plane
    // content plus the residual of each side
    MPoly chk = Sorig * Sorig4;
    require(!chk.is_zero(), errc::internal, "degenerate symmetric eliminant");
    auto divides_power = [](const MPoly& a, MPoly b) {
      // every irreducible factor of a divides b^k for large k; test by
      // repeated exact division of a by gcd-free steps: here it suffices
      // that a | b^deg(a)
      MPoly pw = b;
      for (int i = 1; i < a.total_degree(); ++i) pw = pw * b;
      return pw.try_divide_exact(a).has_value();
    };
    require(divides_power(Sorig, Sorig4) && divides_power(Sorig4, Sorig),
            errc::internal, "symmetric eliminations disagree on support");
  }

  // component extraction: pencil-plane factors first
  MPoly B = pencil_plane_content(Sorig);
  std::vector<MPoly> tangent = tangent_planes_at_ramification(X, prof);
  std::vector<PencilPoint> tangent_params;
  for (const auto& T : tangent) {
    // plane a x3 + b x4 corresponds to the pencil point (-b : a)
    Fq a = Fq::zero(T.ctx()), b = Fq::zero(T.ctx());
    for (const auto& t : T.terms()) {
      if (t.e[2]) a = t.c;
      if (t.e[3]) b = t.c;
    }
    tangent_params.push_back(make_pencil_point(-b, a));
  }

  MPoly rest = Sorig;
  if (!B.is_constant() && !B.is_zero()) {
    // factor B into F_p-irreducible binary factors
    MPoly B2 = B.renamed_var("x3", "s").renamed_var("x4", "t").rename_ring(pencil_vars());
    // dehomogenize at t = 1
    UPoly ub(F);
    ub.c.assign(B2.total_degree() + 1, Fq::zero(F));
    for (const auto& t : B2.terms()) ub.c[t.e[0]] = t.c;
    ub.trim();
    int inf = B2.total_degree() - std::max(ub.deg(), 0);
    std::vector<std::pair<MPoly, int>> fp_factors;  // (beta(x3,x4), formdeg)
    if (inf > 0)
      fp_factors.push_back({MPoly::variable(F, vars, 3), 1});  // V(x4) ... root (1:0)
    if (ub.deg() >= 1) {
      auto fac = factor_univariate(ub, tw.seed());
      for (auto& [g, mult] : fac.factors) {
        (void)mult;
        MPoly beta(F, vars);
        for (int k = 0; k <= g.deg(); ++k) {
          if (g.c[k].is_zero()) continue;
          beta.add_term({0, 0, k, g.deg() - k}, g.c[k]);
        }
        beta.normalize();
        fp_factors.push_back({beta, g.deg()});
      }
    }
    for (auto& [beta, formdeg] : fp_factors) {
      FlexComponent comp;
      comp.poly = normalize_form(beta);
      comp.degree = beta.total_degree();
      comp.multiplicity = 0;
      // exact multiplicity in the divisor
      while (true) {
        auto q = rest.try_divide_exact(comp.poly);
        if (!q) break;
        rest = std::move(*q);
        ++comp.multiplicity;
      }
      require(comp.multiplicity >= 1, errc::internal,
              "content factor does not divide the divisor");
      // geometric planes of this factor and the tangent-plane role test
      MPoly beta2 =
          beta.renamed_var("x3", "s").renamed_var("x4", "t").rename_ring(pencil_vars());
      comp.role = ComponentRole::residual;
      bool all_tangent = true;
      for (const auto& br : binary_form_roots(tw, beta2, 0x9e0)) {
        // root (s0 : t0) of beta(s, t) corresponds to the plane through the
        // pencil parameter (s0 : t0)... the plane polynomial is t0 x3 - s0 x4
        PencilPoint pp = make_pencil_point(br.a, br.b);
        const FieldCtx& K = pp.s.ctx();
        MPoly plane = MPoly::variable(K, vars, 2) * pp.t - MPoly::variable(K, vars, 3) * pp.s;
        comp.planes.push_back(normalize_form(plane));
        bool matches = false;
        for (const auto& tp : tangent_params) {
          int L = std::lcm(tp.field_degree, pp.field_degree);
          const FieldCtx& KL = tw.field(L);
          if (tw.embed(tp.s, KL) == tw.embed(pp.s, KL) &&
              tw.embed(tp.t, KL) == tw.embed(pp.t, KL))
            matches = true;
        }
        all_tangent = all_tangent && matches;
      }
      if (all_tangent) comp.role = ComponentRole::tangent_plane;
      out.components.push_back(std::move(comp));
    }
  }
  if (!rest.is_constant()) {
    FlexComponent comp;
    comp.poly = normalize_form(rest);
    comp.degree = rest.total_degree();
    comp.multiplicity = 1;
    comp.role = ComponentRole::residual;
    out.components.push_back(std::move(comp));
  }
  // canonical order: tangent planes first by degree, then residual
  std::sort(out.components.begin(), out.components.end(),
            [](const FlexComponent& a, const FlexComponent& b) {
              if (a.role != b.role) return a.role == ComponentRole::tangent_plane;
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.poly < b.poly;
            });
  out.reduced = MPoly::constant(F, vars, Fq::one(F));
  out.reduced_degree = 0;
  for (const auto& comp : out.components) {
    out.reduced = out.reduced * comp.poly;
    out.reduced_degree += comp.degree;
  }
  return out;
}

MPoly strip_tangent_planes(const FlexSurface& S, const RamificationProfile& prof,
                           const QuarticWithLine& X) {
  const FieldCtx& F = X.f.ctx();
  auto tangent = tangent_planes_at_ramification(X, prof);
  // count matched geometric planes inside tangent-plane components
  int matched = 0;
  MPoly residual = S.reduced;
  for (const auto& comp : S.components) {
    if (comp.role != ComponentRole::tangent_plane) continue;
    auto q = residual.try_divide_exact(comp.poly);
    require(q.has_value(), errc::plane_not_component,
            "tangent-plane component does not divide the reduced surface");
    residual = std::move(*q);
    matched += (int)comp.planes.size();
  }
  require(matched == (int)prof.points.size(), errc::plane_not_component,
          "a tangent plane at a ramification point is missing from the flex surface");
  (void)F;
  return residual;
}

// --------------------------------------------------------- irreducibility

IrreducibilityCert residual_irreducibility(const QuarticWithLine& X,
                                           const MPoly& residual) {
  require(!residual.is_zero(), errc::zero_input, "residual is zero");
  const FieldCtx& F = residual.ctx();
  const auto& vars = residual.vars();
  // linear-freeness: no pencil plane divides (this covers every plane through
  // the line, hence all tangent-plane candidates)
  MPoly B = pencil_plane_content(residual);
  if (!B.is_constant()) return IrreducibilityCert::unverified;
  (void)X;
  // Eisenstein route for residuals of the 2^2 shape: multiply by x3 x4^2 and
  // substitute x1 -> x1 / (x3 x4)
  bool transform_ok = true;
  MPoly hp(F, vars);
  for (const auto& t : residual.terms()) {
    int a = t.e[0], b = t.e[1], c = t.e[2], d = t.e[3];
    int c2 = c - a + 1, d2 = d - a + 2;
    if (c2 < 0 || d2 < 0) {
      transform_ok = false;
      break;
    }
    hp.add_term({a, b, c2, d2}, t.c);
  }
  if (transform_ok) {
    hp.normalize();
    // Eisenstein at the prime (x3), viewing hp as a polynomial in x1
    auto cs = hp.coeffs_in(0);
    int n = (int)cs.size() - 1;
    if (n >= 1 && !cs[n].is_zero() && cs[n].is_constant()) {
      bool ok = true;
      auto divisible_by_x3 = [](const MPoly& h) {
        for (const auto& t : h.terms())
          if (t.e[2] == 0) return false;
        return true;
      };
      auto divisible_by_x3sq = [](const MPoly& h) {
        for (const auto& t : h.terms())
          if (t.e[2] < 2) return false;
        return true;
      };
      for (int k = 0; k < n && ok; ++k)
        if (!cs[k].is_zero() && !divisible_by_x3(cs[k])) ok = false;
      if (ok && !cs[0].is_zero() && !divisible_by_x3sq(cs[0])) {
        // leading coefficient constant, lower coefficients in (x3), constant
        // term not in (x3)^2: Eisenstein applies
        return IrreducibilityCert::eisenstein_irreducible;
      }
    }
  }
  return IrreducibilityCert::linear_free;
}

// --------------------------------------------------------------- compose

QuarticWithLine segre_compose(const Tower& tw, const MPoly& S,
                              const std::vector<MPoly>& planes) {
  const FieldCtx& F = tw.base();
  const auto& vars = quartic_vars();
  require(S.ctx() == F && S.vars() == vars, errc::ctx_mismatch,
          "ruled quartic must live over the prime field in x1..x4");
  require(!S.is_zero() && S.is_homogeneous() && S.total_degree() == 4,
          errc::not_quartic, "ruled surface must be a quartic");
  for (const auto& t : S.terms())
    require(t.e[2] + t.e[3] >= 1, errc::ruled_singular_on_line,
            "ruled quartic must vanish on the line");
  {
    auto Xs = from_normalized(tw, S);
    require(Xs.smooth_along_line, errc::ruled_singular_on_line,
            "ruled quartic must be smooth along the line");
  }
  require(planes.size() == 4, errc::plane_misses_line, "exactly four planes required");
  int L = 1;
  for (const auto& P : planes) {
    require(!P.is_zero() && P.is_homogeneous() && P.total_degree() == 1,
            errc::plane_misses_line, "planes must be linear forms");
    require(P.uses_only({2, 3}), errc::plane_misses_line,
            "planes must contain the line (x3, x4 only)");
    L = std::lcm(L, P.ctx().k);
  }
  const FieldCtx& KL = tw.field(L);
  auto coeffs34 = [&](const MPoly& P) {
    Fq a = Fq::zero(KL), b = Fq::zero(KL);
    for (const auto& t : P.terms()) {
      Fq c = tw.embed(t.c, KL);
      if (t.e[2]) a = c;
      if (t.e[3]) b = c;
    }
    return std::make_pair(a, b);
  };
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) {
      auto [ai, bi] = coeffs34(planes[i]);
      auto [aj, bj] = coeffs34(planes[j]);
      require(!(ai * bj - aj * bi).is_zero(), errc::coincident_planes,
              "two of the planes coincide");
    }
  MPoly prod = MPoly::constant(KL, vars, Fq::one(KL));
  for (const auto& P : planes) prod = prod * (P.ctx() == KL ? P : P.map_coeffs(KL));
  // the product must descend to F_p
  MPoly prodF(F, vars);
  for (const auto& t : prod.terms()) {
    require(t.c.in_prime_field(), errc::ctx_mismatch,
            "plane product does not have prime-field coefficients");
    prodF.add_term(t.e, Fq(F, t.c.as_residue()));
  }
  prodF.normalize();
  auto X = from_normalized(tw, S + prodF);
  X.provenance = "segre composition";
  require(is_second_kind(X), errc::not_second_kind,
          "composition is not of the second kind (S is not ruled with this directrix)");
  return X;
}

// ------------------------------------------------------ detect and recover

std::vector<PencilPoint> triple_contact_fibers(const QuarticWithLine& X) {
  auto prof = ramification_profile(X);
  std::vector<PencilPoint> out;
  for (const auto& P : prof.points) {
    if (P.multiplicity != 2) continue;
    out.push_back(line_point_image(X, P.x1, P.x2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool segre_detect(const QuarticWithLine& X) {
  auto table = singular_fiber_table(X);
  return segre_detect(X, table);
}

bool segre_detect(const QuarticWithLine& X, const FiberTable& table) {
  auto rep = is_smooth(X, table);
  require(rep.smooth, errc::singular_surface, "detect needs a smooth surface");
  require(is_second_kind(X), errc::not_second_kind,
          "detect applies to lines of the second kind");
  const Tower& tw = *X.tower;
  for (const auto& tc : triple_contact_fibers(X)) {
    bool found = false;
    for (const auto& fib : table.fibers) {
      int L = std::lcm(tc.field_degree, fib.param.field_degree);
      const FieldCtx& KL = tw.field(L);
      if (tw.embed(fib.param.s, KL) == tw.embed(tc.s, KL) &&
          tw.embed(fib.param.t, KL) == tw.embed(tc.t, KL)) {
        found = true;
        if (fib.kodaira != Kodaira::IV) return false;
      }
    }
    if (!found) return false;  // smooth triple-contact fiber is never type IV
  }
  return true;
}

SegreDecomposition segre_recover(const QuarticWithLine& X) {
  auto table = singular_fiber_table(X);
  return segre_recover(X, table);
}

SegreDecomposition segre_recover(const QuarticWithLine& X, const FiberTable& table) {
  require(segre_detect(X, table), errc::not_decomposable,
          "the surface fails the single-contact type-IV condition");
  const Tower& tw = *X.tower;
  const FieldCtx& F = X.f.ctx();
  auto prof = ramification_profile(X);
  auto flex = flex_surface(X);
  MPoly residual = strip_tangent_planes(flex, prof, X);
  require(residual.total_degree() == 4, errc::residual_not_quartic,
          "stripped flex surface is not a quartic");

  // the four planes: parameters of 3-line fibers away from the tangent planes
  std::vector<PencilPoint> tangent_params;
  for (const auto& P : prof.points)
    tangent_params.push_back(line_point_image(X, P.x1, P.x2));
  std::vector<PencilPoint> plane_params;
  std::vector<Kodaira> plane_types;
  for (const auto& fib : table.fibers) {
    if (fib.kodaira != Kodaira::I3 && fib.kodaira != Kodaira::IV) continue;
    bool is_tangent = false;
    for (const auto& tp : tangent_params) {
      int L = std::lcm(tp.field_degree, fib.param.field_degree);
      const FieldCtx& KL = tw.field(L);
      if (tw.embed(tp.s, KL) == tw.embed(fib.param.s, KL) &&
          tw.embed(tp.t, KL) == tw.embed(fib.param.t, KL))
        is_tangent = true;
    }
    if (is_tangent) continue;
    plane_params.push_back(fib.param);
    plane_types.push_back(fib.kodaira);
  }
  require(plane_params.size() == 4, errc::not_decomposable,
          "expected exactly four non-tangent plane fibers");
  bool all_iv = true, all_i3 = true;
  for (auto k : plane_types) {
    all_iv &= (k == Kodaira::IV);
    all_i3 &= (k == Kodaira::I3);
  }
  require(all_iv || all_i3, errc::identity_failed,
          "plane fibers of mixed Kodaira type");

  SegreDecomposition dec;
  dec.sing_class = all_iv ? SegreDecomposition::SingClass::line_of_triple_points
                          : SegreDecomposition::SingClass::twisted_cubic;
  int L = 1;
  for (const auto& pp : plane_params) L = std::lcm(L, pp.field_degree);
  const FieldCtx& KL = tw.field(L);
  MPoly prod = MPoly::constant(KL, quartic_vars(), Fq::one(KL));
  for (const auto& pp : plane_params) {
    MPoly plane = MPoly::variable(KL, quartic_vars(), 2) * tw.embed(pp.t, KL) -
                  MPoly::variable(KL, quartic_vars(), 3) * tw.embed(pp.s, KL);
    dec.planes.push_back(normalize_form(
        MPoly::variable(pp.s.ctx(), quartic_vars(), 2) * pp.t -
        MPoly::variable(pp.s.ctx(), quartic_vars(), 3) * pp.s));
    prod = prod * plane;
  }
  MPoly prodF(F, quartic_vars());
  for (const auto& t : prod.terms()) {
    require(t.c.in_prime_field(), errc::identity_failed,
            "plane product fails to descend to the prime field");
    prodF.add_term(t.e, Fq(F, t.c.as_residue()));
  }
  prodF.normalize();

  // normalize S4 by its lex-leading coefficient, then solve
  // f = lambda * S4 + nu * P for the two scalars and verify exactly
  const auto& lex = residual.lex_leading_term();
  dec.s4 = residual * lex.c.inv();
  std::vector<ExpVec> monos;
  for (const auto& t : X.f.terms()) monos.push_back(t.e);
  for (const auto& t : dec.s4.terms()) monos.push_back(t.e);
  for (const auto& t : prodF.terms()) monos.push_back(t.e);
  Fq lambda = Fq::zero(F), nu = Fq::zero(F);
  bool solved = false;
  for (size_t i = 0; i < monos.size() && !solved; ++i) {
    for (size_t j = i + 1; j < monos.size() && !solved; ++j) {
      Fq s1 = dec.s4.coeff(monos[i]), p1 = prodF.coeff(monos[i]);
      Fq s2 = dec.s4.coeff(monos[j]), p2 = prodF.coeff(monos[j]);
      Fq det = s1 * p2 - s2 * p1;
      if (det.is_zero()) continue;
      Fq f1 = X.f.coeff(monos[i]), f2 = X.f.coeff(monos[j]);
      Fq inv = det.inv();
      lambda = (f1 * p2 - f2 * p1) * inv;
      nu = (s1 * f2 - s2 * f1) * inv;
      solved = true;
    }
  }
  require(solved, errc::identity_failed,
          "ruled quartic and plane product are proportional");
  require(!lambda.is_zero() && !nu.is_zero(), errc::identity_failed,
          "degenerate decomposition scalars");
  require(X.f == dec.s4 * lambda + prodF * nu, errc::identity_failed,
          "lambda * S4 + plane product does not reproduce f");
  // fold the product scalar into the first plane so that
  // lambda * S4 + L1 L2 L3 L4 = f holds with the stored planes
  dec.planes[0] = dec.planes[0] * tw.embed(nu, dec.planes[0].ctx());
  dec.lambda = lambda;
  return dec;
}

// ----------------------------------------------------------- cross check

bool flex_cross_check(const QuarticWithLine& X, int samples) {
  require(X.smooth_along_line, errc::singular_surface,
          "cross check needs a surface smooth along the line");
  const Tower& tw = *X.tower;
  const FieldCtx& F = X.f.ctx();
  MPoly delta = pencil_discriminant(X);
  bool verdict = is_second_kind(X);
  int used = 0;
  bool all_flex = true;
  for (std::uint64_t sv = 0; sv < F.p && used < samples; ++sv) {
    Fq s(F, sv), t = Fq::one(F);
    std::vector<Fq> st = {s, t};
    if (delta.eval(st).is_zero()) continue;
    ++used;
    MPoly C = fiber_cubic(X, s, t);
    MPoly bc = binary_cubic_at(X, s, t);
    // Hessian cubic of the fiber
    MPoly h[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h[i][j] = C.derivative(i).derivative(j);
    MPoly HC = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
               h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
               h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    for (const auto& br : binary_form_roots(tw, bc, hash_seq({0xfcc, sv}))) {
      const FieldCtx& K = br.a.ctx();
      std::vector<Fq> pt = {br.a, br.b, Fq::zero(K)};
      MPoly HK = K.k == 1 ? HC : HC.map_coeffs(K);
      if (!HK.eval(pt).is_zero()) all_flex = false;
    }
    if (!all_flex && verdict == false) break;  // agreement already decided
  }
  require(used >= samples || !all_flex, errc::too_few_smooth_fibers,
          "not enough smooth fibers over the base field");
  return all_flex == verdict;
}

}  // namespace qline
