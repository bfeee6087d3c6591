#include "qline/cubic.hpp"

#include <algorithm>

#include "qline/factor.hpp"
#include "qline/util.hpp"

namespace qline {

const char* kodaira_name(Kodaira k) {
  switch (k) {
    case Kodaira::smooth: return "smooth";
    case Kodaira::I1: return "I1";
    case Kodaira::I2: return "I2";
    case Kodaira::I3: return "I3";
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
    case Kodaira::nonreduced: return "nonreduced";
  }
  return "?";
}

int kodaira_vdelta(Kodaira k) {
  switch (k) {
    case Kodaira::smooth: return 0;
    case Kodaira::I1: return 1;
    case Kodaira::I2: return 2;
    case Kodaira::I3: return 3;
    case Kodaira::II: return 2;
    case Kodaira::III: return 3;
    case Kodaira::IV: return 4;
    case Kodaira::nonreduced: return -1;
  }
  return -1;
}

int kodaira_line_count(Kodaira k) {
  switch (k) {
    case Kodaira::I3:
    case Kodaira::IV: return 3;
    case Kodaira::I2:
    case Kodaira::III: return 1;
    default: return 0;
  }
}

std::vector<Fq> normalize_proj(std::vector<Fq> v) {
  for (size_t i = v.size(); i-- > 0;) {
    if (!v[i].is_zero()) {
      Fq inv = v[i].inv();
      for (auto& x : v) x *= inv;
      return v;
    }
  }
  fail(errc::internal, "zero vector is not projective");
}

MPoly normalize_form(const MPoly& f) {
  require(!f.is_zero(), errc::zero_input, "normalizing the zero form");
  // first nonzero coefficient in variable order among degree-1 terms, or
  // simply the grevlex-leading coefficient for general forms
  return f * f.leading_term().c.inv();
}

MPoly cubic_discriminant(const MPoly& C, int v0, int v1, int v2) {
  require(!C.is_zero(), errc::zero_input, "discriminant of 0");
  const FieldCtx& F = C.ctx();
  const auto& vars = C.vars();
  const int vs[3] = {v0, v1, v2};
  MPoly d[3];
  for (int i = 0; i < 3; ++i) d[i] = C.derivative(vs[i]);
  // Hessian determinant (3x3 of plane-linear forms)
  MPoly h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = d[i].derivative(vs[j]);
  MPoly H = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
            h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
            h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  MPoly rows6[6] = {d[0], d[1], d[2], H.derivative(vs[0]), H.derivative(vs[1]),
                    H.derivative(vs[2])};
  // quadric monomial basis in the plane variables
  ExpVec basis[6];
  for (auto& e : basis) e.assign(vars.size(), 0);
  basis[0][v0] = 2;
  basis[1][v1] = 2;
  basis[2][v2] = 2;
  basis[3][v0] = basis[3][v1] = 1;
  basis[4][v0] = basis[4][v2] = 1;
  basis[5][v1] = basis[5][v2] = 1;
  std::vector<std::vector<MPoly>> m(6, std::vector<MPoly>(6, MPoly(F, vars)));
  for (int r = 0; r < 6; ++r) {
    for (const auto& t : rows6[r].terms()) {
      ExpVec plane(vars.size(), 0), rest = t.e;
      plane[v0] = t.e[v0];
      plane[v1] = t.e[v1];
      plane[v2] = t.e[v2];
      rest[v0] = rest[v1] = rest[v2] = 0;
      int col = -1;
      for (int b = 0; b < 6; ++b)
        if (plane == basis[b]) {
          col = b;
          break;
        }
      require(col >= 0, errc::not_cubic, "row is not a quadric in the plane variables");
      m[r][col] += MPoly::monomial(F, vars, rest, t.c);
    }
  }
  return det_bareiss(std::move(m), F, vars);
}

// ------------------------------------------------------- linear factors

std::vector<std::pair<MPoly, int>> quadric_linear_factors(const MPoly& q,
                                                          const Tower& tw) {
  require(!q.is_zero(), errc::zero_input, "factors of zero quadric");
  const FieldCtx& K = q.ctx();
  const auto& vars = q.vars();
  require(vars.size() == 3, errc::internal, "quadric ring must have 3 variables");
  FqMat M(K, 3, 3);
  Fq half = Fq(K, 2).inv();
  for (int i = 0; i < 3; ++i) {
    ExpVec e(3, 0);
    e[i] = 2;
    M.at(i, i) = q.coeff(e);
    for (int j = i + 1; j < 3; ++j) {
      ExpVec e2(3, 0);
      e2[i] = e2[j] = 1;
      Fq c = q.coeff(e2) * half;
      M.at(i, j) = c;
      M.at(j, i) = c;
    }
  }
  int rank = M.rank();
  std::vector<std::pair<MPoly, int>> out;
  if (rank == 3) return out;
  if (rank == 1) {
    // q = c * L^2 with L read off a nonzero row
    for (int i = 0; i < 3; ++i) {
      bool nonzero = false;
      for (int j = 0; j < 3; ++j) nonzero = nonzero || !M.at(i, j).is_zero();
      if (!nonzero) continue;
      MPoly L(K, vars);
      for (int j = 0; j < 3; ++j)
        if (!M.at(i, j).is_zero()) L += MPoly::variable(K, vars, j) * M.at(i, j);
      out.push_back({normalize_form(L), 2});
      return out;
    }
  }
  // rank 2: two distinct lines through the kernel point
  auto ker = M.kernel();
  require(ker.size() == 1, errc::internal, "rank-2 quadric kernel");
  std::vector<Fq> k = ker[0];
  int pivot = 0;
  while (k[pivot].is_zero()) ++pivot;
  int i1 = (pivot + 1) % 3, i2 = (pivot + 2) % 3;
  // restrict q to the line {a*e_{i1} + b*e_{i2}} (misses the kernel point)
  ExpVec e1(3, 0), e2(3, 0), e12(3, 0);
  e1[i1] = 2;
  e2[i2] = 2;
  e12[i1] = e12[i2] = 1;
  Fq A = q.coeff(e1), B = q.coeff(e12), Cc = q.coeff(e2);
  // projective roots (a:b) of A a^2 + B a b + C b^2
  std::vector<std::pair<Fq, Fq>> pts;
  if (A.is_zero()) {
    pts.push_back({Fq::one(K), Fq::zero(K)});
    if (!B.is_zero())
      pts.push_back({-Cc * B.inv(), Fq::one(K)});
    else
      pts.push_back({Fq::one(K), Fq::zero(K)});
  } else {
    auto roots = all_roots(tw, UPoly(K, {Cc, B, A}), 0x9d1);
    for (auto& [r, mult] : roots)
      for (int c = 0; c < mult; ++c) pts.push_back({r, Fq::one(r.ctx())});
  }
  require(pts.size() == 2, errc::internal, "restricted quadric root count");
  // common field for kernel point and roots
  int L = 1;
  for (auto& [a, b] : pts) L = std::lcm(L, a.ctx().k);
  L = std::lcm(L, K.k);
  const FieldCtx& KL = tw.field(L);
  std::vector<MPoly> lines;
  for (auto& [a, b] : pts) {
    std::vector<Fq> P(3, Fq::zero(KL));
    P[i1] = tw.embed(a, KL);
    P[i2] = tw.embed(b, KL);
    std::vector<Fq> kk;
    for (auto& x : k) kk.push_back(tw.embed(x, KL));
    // join of kernel point and P: cross product
    std::vector<Fq> cr = {kk[1] * P[2] - kk[2] * P[1], kk[2] * P[0] - kk[0] * P[2],
                          kk[0] * P[1] - kk[1] * P[0]};
    MPoly Lf(KL, vars);
    for (int j = 0; j < 3; ++j)
      if (!cr[j].is_zero()) Lf += MPoly::variable(KL, vars, j) * cr[j];
    lines.push_back(normalize_form(Lf));
  }
  if (lines[0] == lines[1]) {
    out.push_back({lines[0], 2});
  } else {
    out.push_back({lines[0], 1});
    out.push_back({lines[1], 1});
  }
  return out;
}

// ------------------------------------------------------- classification

namespace {

std::uint64_t mpoly_salt(const MPoly& f, std::uint64_t salt) {
  std::uint64_t h = hash_seq({0xc1a55, salt, f.ctx().p, (std::uint64_t)f.ctx().k});
  for (const auto& t : f.terms()) {
    for (int e : t.e) h = hash_mix(h, (std::uint64_t)e);
    for (auto v : t.c.vec()) h = hash_mix(h, v);
  }
  return h;
}

MPoly to_field(const MPoly& f, const FieldCtx& target) {
  if (f.ctx() == target) return f;
  return f.map_coeffs(target);
}

// divisibility of f by linear form L, both mapped into a common field
bool divides_in_common_field(const Tower& tw, const MPoly& L, const MPoly& f) {
  int M = std::lcm(L.ctx().k, f.ctx().k);
  const FieldCtx& KM = tw.field(M);
  return to_field(f, KM).try_divide_exact(to_field(L, KM)).has_value();
}

struct PatchSolution {
  std::vector<std::vector<Fq>> points;
};

// Singular points of a reduced plane cubic, via a genericity coordinate
// change and resultant elimination; complete by construction.
PatchSolution singular_points_reduced(const MPoly& C, const Tower& tw,
                                      std::uint64_t salt) {
  const FieldCtx& K = C.ctx();
  const auto& vars = C.vars();
  auto rng = seeded_rng(mpoly_salt(C, hash_seq({0x51b9, salt})));
  std::uniform_int_distribution<std::uint64_t> dist(0, K.p - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    FqMat g(K, 3, 3);
    for (auto& x : g.a) x = Fq(K, dist(rng));
    if (g.det().is_zero()) continue;
    MPoly Cp = substitute_linear(C, g.to_rows());
    MPoly q[3];
    for (int i = 0; i < 3; ++i) q[i] = Cp.derivative(i);
    // genericity: x^2 coefficients present in all partials
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      ExpVec e(3, 0);
      e[0] = 2;
      if (q[i].coeff(e).is_zero()) ok = false;
    }
    if (!ok) continue;
    // no singular point on the line y3 = 0: the restricted binary forms
    // q_i(y1, y2, 0) must have no common projective root. Their y1^2
    // coefficients are nonzero by the genericity check, so (1:0) is never a
    // common root and the dehomogenized gcd decides it.
    {
      UPoly b[3];
      for (int i = 0; i < 3; ++i) {
        auto by = q[i].coeffs_in(2);  // powers of y3
        MPoly b0 = by.empty() ? MPoly::zero(K, vars) : by[0];
        UPoly u(K);
        u.c.assign(3, Fq::zero(K));
        for (const auto& t : b0.terms()) u.c[t.e[0]] = t.c;
        u.trim();
        b[i] = u;
      }
      UPoly gz = gcd(gcd(b[0], b[1]), b[2]);
      if (gz.deg() > 0) continue;  // redraw: common root on the removed line
    }
    // affine patch y3 = 1; eliminate y1
    std::vector<std::string> xy = {"y1", "y2"};
    MPoly f01[3];
    std::vector<MPoly> images = {MPoly::variable(K, xy, 0), MPoly::variable(K, xy, 1),
                                 MPoly::constant(K, xy, Fq::one(K))};
    for (int i = 0; i < 3; ++i) f01[i] = q[i].substitute(images);
    MPoly r12 = resultant_formal(f01[0], f01[1], 0, 2, 2);
    MPoly r13 = resultant_formal(f01[0], f01[2], 0, 2, 2);
    if (r12.is_zero() || r13.is_zero()) continue;
    UPoly w = gcd(r12.to_upoly(1), r13.to_upoly(1));
    PatchSolution sol;
    if (w.deg() > 0) {
      auto wroots = all_roots(tw, w, hash_seq({salt, 0x77}));
      for (auto& [y0, ymult] : wroots) {
        const FieldCtx& Ky = y0.ctx();
        // specialize the three quadrics at y2 = y0 and intersect
        UPoly spec[3];
        for (int i = 0; i < 3; ++i) {
          MPoly fi = to_field(f01[i], Ky);
          auto cs = fi.coeffs_in(0);  // powers of y1, entries depend on y2
          UPoly u(Ky);
          for (auto& cpoly : cs) {
            UPoly c1 = cpoly.to_upoly(1);
            u.c.push_back(c1.eval(y0));
          }
          u.trim();
          spec[i] = u;
        }
        UPoly h = gcd(gcd(spec[0], spec[1]), spec[2]);
        if (h.deg() <= 0) continue;
        auto xroots = all_roots(tw, h, hash_seq({salt, 0x78}));
        for (auto& [x0, xmult] : xroots) {
          const FieldCtx& Kx = x0.ctx();
          Fq y0x = tw.embed(y0, Kx);
          std::vector<Fq> pt = {x0, y0x, Fq::one(Kx)};
          // verify all partials vanish
          bool good = true;
          for (int i = 0; i < 3 && good; ++i) {
            MPoly qi = to_field(q[i], Kx);
            good = qi.eval(pt).is_zero();
          }
          if (good) sol.points.push_back(pt);
        }
      }
    }
    // map back through g
    for (auto& pt : sol.points) {
      const FieldCtx& Kp = pt[0].ctx();
      std::vector<Fq> orig(3, Fq::zero(Kp));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) orig[i] += tw.embed(g.at(i, j), Kp) * pt[j];
      pt = normalize_proj(orig);
    }
    std::sort(sol.points.begin(), sol.points.end(),
              [](const std::vector<Fq>& a, const std::vector<Fq>& b) {
                if (a[0].ctx().k != b[0].ctx().k) return a[0].ctx().k < b[0].ctx().k;
                for (int i = 0; i < 3; ++i)
                  if (!(a[i] == b[i])) return a[i] < b[i];
                return false;
              });
    sol.points.erase(std::unique(sol.points.begin(), sol.points.end()),
                     sol.points.end());
    return sol;
  }
  fail(errc::elimination_degenerate, "no usable coordinate change found");
}

// line through two projective points (cross product), over the lcm field
MPoly join_line(const Tower& tw, const std::vector<Fq>& P, const std::vector<Fq>& Q,
                const std::vector<std::string>& vars) {
  int L = std::lcm(P[0].ctx().k, Q[0].ctx().k);
  const FieldCtx& KL = tw.field(L);
  std::vector<Fq> a, b;
  for (auto& x : P) a.push_back(tw.embed(x, KL));
  for (auto& x : Q) b.push_back(tw.embed(x, KL));
  std::vector<Fq> cr = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0]};
  MPoly Lf(KL, vars);
  for (int j = 0; j < 3; ++j)
    if (!cr[j].is_zero()) Lf += MPoly::variable(KL, vars, j) * cr[j];
  return normalize_form(Lf);
}

}  // namespace

PlaneCubicClass classify_plane_cubic(const MPoly& C, const Tower& tw,
                                     std::uint64_t salt) {
  require(!C.is_zero(), errc::not_cubic, "zero cubic");
  require(C.nvars() == 3, errc::not_cubic, "cubic must live in a 3-variable ring");
  require(C.is_homogeneous() && C.total_degree() == 3, errc::not_cubic,
          "input is not a ternary cubic form");
  const auto& vars = C.vars();
  PlaneCubicClass out;

  // nonreduced test: a repeated factor of a cubic is a line L with L | all
  // partials. Partials of a cubic free of some variable force the cone case.
  MPoly q[3];
  int first_nonzero = -1;
  for (int i = 0; i < 3; ++i) {
    q[i] = C.derivative(i);
    if (first_nonzero < 0 && !q[i].is_zero()) first_nonzero = i;
  }
  require(first_nonzero >= 0, errc::not_cubic, "constant cubic");
  auto cands = quadric_linear_factors(q[first_nonzero], tw);
  for (auto& [L, mult] : cands) {
    bool common = true;
    for (int i = 0; i < 3 && common; ++i) {
      if (q[i].is_zero()) continue;
      common = divides_in_common_field(tw, L, q[i]);
    }
    if (common && divides_in_common_field(tw, L, C)) {
      out.type = Kodaira::nonreduced;
      out.lines.push_back(L);
      return out;
    }
  }

  auto sol = singular_points_reduced(C, tw, salt);
  out.singular_points = sol.points;
  size_t n = sol.points.size();
  if (n == 0) {
    out.type = Kodaira::smooth;
    return out;
  }
  if (n == 2) {
    out.type = Kodaira::I2;
    MPoly L = join_line(tw, sol.points[0], sol.points[1], vars);
    require(divides_in_common_field(tw, L, C), errc::internal,
            "I2 secant does not divide");
    out.lines.push_back(L);
    return out;
  }
  if (n == 3) {
    out.type = Kodaira::I3;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        MPoly L = join_line(tw, sol.points[i], sol.points[j], vars);
        require(divides_in_common_field(tw, L, C), errc::internal,
                "I3 edge does not divide");
        out.lines.push_back(L);
      }
    std::sort(out.lines.begin(), out.lines.end());
    return out;
  }
  require(n == 1, errc::internal, "reduced cubic with more than 3 singular points");

  // one singular point: move it to (0:0:1) and read the local structure
  const auto& P = sol.points[0];
  const FieldCtx& KP = P[0].ctx();
  int pivot = 0;
  for (int i = 0; i < 3; ++i)
    if (!P[i].is_zero()) pivot = i;
  FqMat T(KP, 3, 3);
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    T.at(i, col) = Fq::one(KP);
    ++col;
  }
  for (int i = 0; i < 3; ++i) T.at(i, 2) = P[i];
  MPoly CK = to_field(C, KP);
  MPoly Cpp = substitute_linear(CK, T.to_rows());
  auto by_y3 = Cpp.coeffs_in(2);
  require(by_y3.size() <= 4, errc::internal, "degree bookkeeping");
  for (size_t d = 2; d < by_y3.size(); ++d)
    require(by_y3[d].is_zero(), errc::internal, "translated point is not singular");
  MPoly Q = by_y3.size() > 1 ? by_y3[1] : MPoly::zero(KP, vars);
  MPoly D = by_y3[0];
  FqMat Tg = T;
  auto map_back = [&](const MPoly& form) {
    const FieldCtx& Kf = form.ctx();
    FqMat Tf(Kf, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) Tf.at(i, j) = tw.embed(Tg.at(i, j), Kf);
    return normalize_form(substitute_linear(form, Tf.inverse().to_rows()));
  };

  if (!Q.is_zero()) {
    // binary quadratic A y1^2 + B y1 y2 + C y2^2
    ExpVec e1(3, 0), e2(3, 0), e12(3, 0);
    e1[0] = 2;
    e2[1] = 2;
    e12[0] = e12[1] = 1;
    Fq A = Q.coeff(e1), B = Q.coeff(e12), Cc = Q.coeff(e2);
    Fq disc = B * B - Fq(KP, 4) * A * Cc;
    if (!disc.is_zero()) {
      out.type = Kodaira::I1;
      return out;
    }
    // rank 1: double tangent line
    MPoly Tl(KP, vars);
    if (!A.is_zero()) {
      // y1 + (B/2A) y2
      Tl = MPoly::variable(KP, vars, 0) +
           MPoly::variable(KP, vars, 1) * (B * (Fq(KP, 2) * A).inv());
    } else {
      Tl = MPoly::variable(KP, vars, 1);
    }
    if (Cpp.try_divide_exact(Tl).has_value()) {
      out.type = Kodaira::III;
      out.lines.push_back(map_back(Tl));
    } else {
      out.type = Kodaira::II;
    }
    return out;
  }

  // triple point: cone over the binary cubic D
  require(!D.is_zero(), errc::internal, "zero cubic after translation");
  UPoly u(KP);
  u.c.assign(4, Fq::zero(KP));
  for (const auto& t : D.terms()) u.c[t.e[0]] = t.c;
  u.trim();
  int deg_drop = 3 - (u.is_zero() ? 0 : u.deg());  // multiplicity of root (1:0)
  std::vector<std::pair<MPoly, int>> factors;     // line, multiplicity
  if (deg_drop > 0)
    factors.push_back({MPoly::variable(KP, vars, 1), deg_drop});  // y2 | D
  if (!u.is_zero() && u.deg() > 0) {
    auto roots = all_roots(tw, u, hash_seq({salt, 0x311e}));
    for (auto& [r, mult] : roots) {
      const FieldCtx& Kr = r.ctx();
      MPoly L = MPoly::variable(Kr, vars, 0) - MPoly::constant(Kr, vars, r) *
                                                   MPoly::variable(Kr, vars, 1);
      factors.push_back({L, mult});
    }
  }
  int distinct = 0;
  bool repeated = false;
  for (auto& [L, m] : factors) {
    distinct += 1;
    if (m > 1) repeated = true;
  }
  require(!repeated && distinct == 3, errc::internal,
          "repeated cone component escaped the nonreduced test");
  out.type = Kodaira::IV;
  for (auto& [L, m] : factors) out.lines.push_back(map_back(L));
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

}  // namespace qline
