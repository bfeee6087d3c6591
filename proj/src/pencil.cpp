#include "qline/pencil.hpp"

#include <algorithm>
#include <numeric>

#include "qline/factor.hpp"
#include "qline/util.hpp"

namespace qline {

const std::vector<std::string>& quartic_vars() {
  static const std::vector<std::string> v = {"x1", "x2", "x3", "x4"};
  return v;
}
const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v = {"x1", "x2", "u"};
  return v;
}
const std::vector<std::string>& pencil_vars() {
  static const std::vector<std::string> v = {"s", "t"};
  return v;
}

const char* ram_type_name(RamType t) {
  switch (t) {
    case RamType::r1111: return "1^4";
    case RamType::r211: return "2,1^2";
    case RamType::r22: return "2^2";
  }
  return "?";
}

MPoly QuarticWithLine::a(int i, int j) const {
  auto it = alpha.find({i, j});
  if (it != alpha.end()) return it->second;
  return MPoly::zero(f.ctx(), f.vars());
}

bool PencilPoint::operator==(const PencilPoint& o) const {
  return field_degree == o.field_degree && s.vec() == o.s.vec() && t.vec() == o.t.vec();
}

bool PencilPoint::operator<(const PencilPoint& o) const {
  if (field_degree != o.field_degree) return field_degree < o.field_degree;
  if (!(s.vec() == o.s.vec())) return s.vec() < o.s.vec();
  return t.vec() < o.t.vec();
}

PencilPoint make_pencil_point(const Fq& s, const Fq& t) {
  PencilPoint P;
  if (!t.is_zero()) {
    Fq inv = t.inv();
    P.s = s * inv;
    P.t = Fq::one(t.ctx());
  } else {
    require(!s.is_zero(), errc::internal, "pencil point (0 : 0)");
    P.s = Fq::one(s.ctx());
    P.t = Fq::zero(s.ctx());
  }
  P.field_degree = P.s.ctx().k;
  return P;
}

// ------------------------------------------------------ binary form tools

std::vector<BinRoot> binary_form_roots(const Tower& tw, const MPoly& form,
                                       std::uint64_t salt) {
  require(!form.is_zero(), errc::zero_input, "roots of the zero form");
  require(form.nvars() == 2, errc::internal, "binary form ring must have 2 variables");
  require(form.is_homogeneous(), errc::internal, "binary form must be homogeneous");
  const FieldCtx& K = form.ctx();
  int deg = form.total_degree();
  // dehomogenize second variable to 1
  UPoly u(K);
  u.c.assign(deg + 1, Fq::zero(K));
  for (const auto& t : form.terms()) u.c[t.e[0]] = t.c;
  u.trim();
  std::vector<BinRoot> out;
  int inf_mult = deg - std::max(u.deg(), 0);
  if (u.is_zero()) inf_mult = 0;  // unreachable for a nonzero form
  if (inf_mult > 0) {
    BinRoot r;
    r.a = Fq::one(tw.base());
    r.b = Fq::zero(tw.base());
    r.field_degree = 1;
    r.multiplicity = inf_mult;
    out.push_back(r);
  }
  if (u.deg() >= 1) {
    for (auto& [root, mult] : all_roots(tw, u, hash_seq({salt, 0xb1})))
      out.push_back({root, Fq::one(root.ctx()), root.ctx().k, mult});
  }
  std::sort(out.begin(), out.end(), [](const BinRoot& a, const BinRoot& b) {
    if (a.field_degree != b.field_degree) return a.field_degree < b.field_degree;
    if (!(a.a.vec() == b.a.vec())) return a.a.vec() < b.a.vec();
    return a.b.vec() < b.b.vec();
  });
  return out;
}

namespace {

// binary form in the (x1, x2) slots of the quartic ring -> 2-variable ring
MPoly as_binary_form(const MPoly& f, const std::string& v0, const std::string& v1) {
  return f.rename_ring({v0, v1});
}

bool binary_forms_have_common_root(const MPoly& a2, const MPoly& b2) {
  // a2, b2 nonzero homogeneous in a 2-variable ring
  const FieldCtx& K = a2.ctx();
  auto dehom = [&](const MPoly& f, int& inf) {
    UPoly u(K);
    u.c.assign(f.total_degree() + 1, Fq::zero(K));
    for (const auto& t : f.terms()) u.c[t.e[0]] = t.c;
    u.trim();
    inf = f.total_degree() - std::max(u.deg(), 0);
    return u;
  };
  int ia = 0, ib = 0;
  UPoly ua = dehom(a2, ia), ub = dehom(b2, ib);
  if (ia > 0 && ib > 0) return true;  // both vanish at (1 : 0)
  return gcd(ua, ub).deg() > 0;
}

}  // namespace

// ---------------------------------------------------------- construction

namespace {

void build_alpha(QuarticWithLine& X) {
  const auto& F = X.f.ctx();
  const auto& vars = X.f.vars();
  X.alpha.clear();
  for (const auto& t : X.f.terms()) {
    int i = t.e[2], j = t.e[3];
    ExpVec e = t.e;
    e[2] = e[3] = 0;
    auto key = std::make_pair(i, j);
    auto it = X.alpha.find(key);
    if (it == X.alpha.end())
      X.alpha.emplace(key, MPoly::monomial(F, vars, e, t.c));
    else
      it->second += MPoly::monomial(F, vars, e, t.c);
  }
  MPoly a10 = X.a(1, 0), a01 = X.a(0, 1);
  if (a10.is_zero() || a01.is_zero()) {
    X.smooth_along_line = false;
  } else {
    X.smooth_along_line = !binary_forms_have_common_root(
        as_binary_form(a10, "x1", "x2"), as_binary_form(a01, "x1", "x2"));
  }
}

}  // namespace

QuarticWithLine normalize_line(const Tower& tw, const MPoly& f, const MPoly& l1,
                               const MPoly& l2) {
  const FieldCtx& F = tw.base();
  require(f.ctx() == F, errc::ctx_mismatch, "quartic must live over the prime field");
  require(f.vars() == quartic_vars(), errc::ctx_mismatch, "quartic ring is x1..x4");
  require(!f.is_zero() && f.is_homogeneous() && f.total_degree() == 4,
          errc::not_quartic, "input is not a homogeneous quartic");
  for (const MPoly* l : {&l1, &l2})
    require(!l->is_zero() && l->is_homogeneous() && l->total_degree() == 1,
            errc::degenerate_line, "line must be given by two linear forms");
  // rows of A: two completing unit vectors, then l1, l2
  auto form_row = [&](const MPoly& l) {
    std::vector<Fq> row(4, Fq::zero(F));
    for (const auto& t : l.terms())
      for (int v = 0; v < 4; ++v)
        if (t.e[v]) row[v] = t.c;
    return row;
  };
  std::vector<Fq> r3 = form_row(l1), r4 = form_row(l2);
  FqMat A(F, 4, 4);
  for (int j = 0; j < 4; ++j) {
    A.at(2, j) = r3[j];
    A.at(3, j) = r4[j];
  }
  {
    FqMat two(F, 2, 4);
    for (int j = 0; j < 4; ++j) {
      two.at(0, j) = r3[j];
      two.at(1, j) = r4[j];
    }
    require(two.rank() == 2, errc::degenerate_line, "the two forms are dependent");
  }
  int placed = 0;
  for (int e = 0; e < 4 && placed < 2; ++e) {
    // tentatively place the e-th unit vector and test the combined rank
    FqMat cand = A;
    cand.at(placed, e) = Fq::one(F);
    FqMat sub(F, 3 + placed, 4);
    int r = 0;
    for (int i = 0; i < placed + 1; ++i, ++r)
      for (int j = 0; j < 4; ++j) sub.at(r, j) = cand.at(i, j);
    for (int i = 2; i < 4; ++i, ++r)
      for (int j = 0; j < 4; ++j) sub.at(r, j) = cand.at(i, j);
    if (sub.rank() == 3 + placed) {
      A = cand;
      ++placed;
    }
  }
  require(placed == 2, errc::internal, "failed to complete the basis");
  FqMat M = A.inverse();
  MPoly fn = substitute_linear(f, M.to_rows());
  // membership in (x3, x4)
  for (const auto& t : fn.terms())
    require(t.e[2] + t.e[3] >= 1, errc::line_not_on_surface,
            "the quartic does not vanish on the line");
  QuarticWithLine X;
  X.tower = &tw;
  X.f = fn;
  X.to_original = M;
  X.provenance = "normalized from user frame";
  build_alpha(X);
  return X;
}

QuarticWithLine from_normalized(const Tower& tw, const MPoly& f) {
  const FieldCtx& F = tw.base();
  require(f.ctx() == F, errc::ctx_mismatch, "quartic must live over the prime field");
  require(f.vars() == quartic_vars(), errc::ctx_mismatch, "quartic ring is x1..x4");
  require(!f.is_zero() && f.is_homogeneous() && f.total_degree() == 4,
          errc::not_quartic, "input is not a homogeneous quartic");
  for (const auto& t : f.terms())
    require(t.e[2] + t.e[3] >= 1, errc::line_not_on_surface,
            "the quartic does not vanish on V(x3, x4)");
  QuarticWithLine X;
  X.tower = &tw;
  X.f = f;
  X.to_original = FqMat::identity(F, 4);
  X.provenance = "already normalized";
  build_alpha(X);
  return X;
}

// ---------------------------------------------------------------- fibers

MPoly fiber_cubic(const QuarticWithLine& X, const Fq& s, const Fq& t) {
  const FieldCtx& K = s.ctx();
  const Tower& tw = *X.tower;
  MPoly C(K, plane_vars());
  for (const auto& [ij, aij] : X.alpha) {
    auto [i, j] = ij;
    Fq st = s.pow(i) * t.pow(j);
    if (st.is_zero()) continue;
    for (const auto& term : aij.terms()) {
      ExpVec e = {term.e[0], term.e[1], i + j - 1};
      C.add_term(std::move(e), tw.embed(term.c, K) * st);
    }
  }
  C.normalize();
  return C;
}

MPoly generic_fiber_cubic(const QuarticWithLine& X) {
  const FieldCtx& F = X.f.ctx();
  static const std::vector<std::string> vars = {"x1", "x2", "u", "s", "t"};
  MPoly C(F, vars);
  for (const auto& [ij, aij] : X.alpha) {
    auto [i, j] = ij;
    for (const auto& term : aij.terms()) {
      ExpVec e = {term.e[0], term.e[1], i + j - 1, i, j};
      C.add_term(std::move(e), term.c);
    }
  }
  C.normalize();
  return C;
}

MPoly binary_cubic_at(const QuarticWithLine& X, const Fq& s, const Fq& t) {
  const FieldCtx& K = s.ctx();
  const Tower& tw = *X.tower;
  static const std::vector<std::string> vars = {"x1", "x2"};
  MPoly c(K, vars);
  for (auto [ij, coefvar] : {std::pair<std::pair<int, int>, int>{{1, 0}, 0},
                             std::pair<std::pair<int, int>, int>{{0, 1}, 1}}) {
    MPoly aij = X.a(ij.first, ij.second);
    Fq mult = coefvar == 0 ? s : t;
    for (const auto& term : aij.terms()) {
      ExpVec e = {term.e[0], term.e[1]};
      c.add_term(std::move(e), tw.embed(term.c, K) * mult);
    }
  }
  c.normalize();
  return c;
}

MPoly pencil_discriminant(const QuarticWithLine& X) {
  require(X.smooth_along_line, errc::singular_surface,
          "pencil discriminant needs a surface smooth along the line");
  MPoly C = generic_fiber_cubic(X);
  MPoly disc = cubic_discriminant(C, 0, 1, 2);
  if (disc.is_zero())
    fail(errc::identically_zero, "every fiber of the pencil is singular");
  MPoly delta = disc.rename_ring(pencil_vars());
  require(delta.is_homogeneous() && delta.total_degree() == 24, errc::internal,
          "pencil discriminant degree");
  return delta;
}

// ------------------------------------------------------------ P^3 images

PencilPoint line_point_image(const QuarticWithLine& X, const Fq& x1, const Fq& x2) {
  const Tower& tw = *X.tower;
  const FieldCtx& K = x1.ctx();
  auto eval2 = [&](const MPoly& a) {
    MPoly aK = K.k == 1 ? a : a.map_coeffs(K);
    return aK.eval({x1, x2, Fq::zero(K), Fq::zero(K)});
  };
  Fq v10 = eval2(X.a(1, 0)), v01 = eval2(X.a(0, 1));
  (void)tw;
  return make_pencil_point(-v01, v10);
}

std::pair<MPoly, MPoly> plane_line_to_p3(const Tower& tw, const Fq& s, const Fq& t,
                                         const MPoly& plane_form) {
  int L = std::lcm(s.ctx().k, plane_form.ctx().k);
  const FieldCtx& KL = tw.field(L);
  Fq se = tw.embed(s, KL), te = tw.embed(t, KL);
  auto V = [&](int i) { return MPoly::variable(KL, quartic_vars(), i); };
  MPoly plane = V(2) * te - V(3) * se;
  // plane-internal coefficients
  Fq lam = Fq::zero(KL), mu = Fq::zero(KL), nu = Fq::zero(KL);
  for (const auto& term : plane_form.terms()) {
    Fq c = tw.embed(term.c, KL);
    if (term.e[0]) lam = c;
    else if (term.e[1]) mu = c;
    else nu = c;
  }
  MPoly second(KL, quartic_vars());
  if (!lam.is_zero()) second += V(0) * lam;
  if (!mu.is_zero()) second += V(1) * mu;
  if (!nu.is_zero()) {
    if (!te.is_zero())
      second += V(3) * (nu * te.inv());
    else
      second += V(2) * (nu * se.inv());
  }
  return {normalize_form(plane), normalize_form(second)};
}

std::vector<Fq> plane_point_to_p3(const Tower& tw, const Fq& s, const Fq& t,
                                  const std::vector<Fq>& pt) {
  int L = std::lcm(s.ctx().k, pt[0].ctx().k);
  const FieldCtx& KL = tw.field(L);
  Fq se = tw.embed(s, KL), te = tw.embed(t, KL);
  Fq x1 = tw.embed(pt[0], KL), x2 = tw.embed(pt[1], KL), u = tw.embed(pt[2], KL);
  return normalize_proj({x1, x2, se * u, te * u});
}

// ----------------------------------------------------------- fiber table

FiberTable singular_fiber_table(const QuarticWithLine& X) {
  const Tower& tw = *X.tower;
  FiberTable out;
  out.delta = pencil_discriminant(X);
  auto roots = binary_form_roots(tw, out.delta, 0xde17a);
  int fiber_index = 0;
  for (const auto& root : roots) {
    FiberRecord rec;
    rec.param = make_pencil_point(root.a, root.b);
    rec.v_delta = root.multiplicity;
    MPoly C = fiber_cubic(X, rec.param.s, rec.param.t);
    auto cls = classify_plane_cubic(C, tw, hash_seq({0xf1be7, (std::uint64_t)fiber_index}));
    rec.kodaira = cls.type;
    rec.components_plane = cls.lines;
    for (const auto& L : cls.lines)
      rec.components_p3.push_back(plane_line_to_p3(tw, rec.param.s, rec.param.t, L));
    for (const auto& sp : cls.singular_points)
      rec.singular_points_p3.push_back(plane_point_to_p3(tw, rec.param.s, rec.param.t, sp));
    // contact pattern of the line with this fiber
    MPoly bc = binary_cubic_at(X, rec.param.s, rec.param.t);
    for (const auto& br : binary_form_roots(tw, bc, 0xc0417))
      rec.contact.push_back(br.multiplicity);
    std::sort(rec.contact.begin(), rec.contact.end(), std::greater<int>());
    out.fibers.push_back(std::move(rec));
    ++fiber_index;
  }
  std::sort(out.fibers.begin(), out.fibers.end(),
            [](const FiberRecord& a, const FiberRecord& b) { return a.param < b.param; });
  return out;
}

// ---------------------------------------------------------- ramification

RamificationProfile ramification_profile(const QuarticWithLine& X) {
  require(X.smooth_along_line, errc::singular_surface,
          "ramification profile needs a surface smooth along the line");
  const Tower& tw = *X.tower;
  MPoly a10 = X.a(1, 0), a01 = X.a(0, 1);
  MPoly W = a10.derivative(0) * a01.derivative(1) - a10.derivative(1) * a01.derivative(0);
  if (W.is_zero()) fail(errc::wronskian_zero, "Wronskian of the alpha pair vanishes");
  MPoly W2 = as_binary_form(W, "x1", "x2");
  require(W2.is_homogeneous() && W2.total_degree() == 4, errc::internal,
          "Wronskian degree");
  RamificationProfile out;
  int total = 0;
  for (const auto& br : binary_form_roots(tw, W2, 0x4a77)) {
    require(br.multiplicity <= 2, errc::unexpected_pattern,
            "ramification multiplicity above 2");
    RamificationProfile::Point P;
    P.x1 = br.a;
    P.x2 = br.b;
    P.field_degree = br.field_degree;
    P.multiplicity = br.multiplicity;
    out.points.push_back(P);
    total += br.multiplicity;
  }
  require(total == 4, errc::internal, "ramification divisor degree");
  std::sort(out.points.begin(), out.points.end(),
            [](const RamificationProfile::Point& a, const RamificationProfile::Point& b) {
              if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
              if (a.field_degree != b.field_degree) return a.field_degree < b.field_degree;
              if (!(a.x1.vec() == b.x1.vec())) return a.x1.vec() < b.x1.vec();
              return a.x2.vec() < b.x2.vec();
            });
  int doubles = 0;
  for (auto& P : out.points) doubles += (P.multiplicity == 2);
  out.type = doubles == 0 ? RamType::r1111 : (doubles == 1 ? RamType::r211 : RamType::r22);
  return out;
}

// ------------------------------------------------------------ smoothness

namespace {

// all four partials of f vanish at the P^3 point?
bool surface_singular_at(const QuarticWithLine& X, const std::vector<Fq>& pt) {
  const FieldCtx& K = pt[0].ctx();
  for (int v = 0; v < 4; ++v) {
    MPoly dv = X.f.derivative(v);
    MPoly dvK = K.k == 1 ? dv : dv.map_coeffs(K);
    if (!dvK.eval(pt).is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<Fq>> witness_on_plane_line(const QuarticWithLine& X,
                                                     const Fq& s, const Fq& t,
                                                     const MPoly& plane_form) {
  // two points spanning the line V(plane_form) inside the plane (s : t)
  const Tower& tw = *X.tower;
  const FieldCtx& K = plane_form.ctx();
  std::vector<Fq> coef(3, Fq::zero(K));
  for (const auto& term : plane_form.terms())
    for (int v = 0; v < 3; ++v)
      if (term.e[v]) coef[v] = term.c;
  FqMat row(K, 1, 3);
  for (int v = 0; v < 3; ++v) row.at(0, v) = coef[v];
  auto ker = row.kernel();
  require(ker.size() == 2, errc::internal, "plane line kernel");
  auto A3 = plane_point_to_p3(tw, s, t, ker[0]);
  auto B3 = plane_point_to_p3(tw, s, t, ker[1]);
  int L = std::lcm(A3[0].ctx().k, B3[0].ctx().k);
  const FieldCtx& KL = tw.field(L);
  static const std::vector<std::string> ab = {"a", "b"};
  std::vector<MPoly> images;
  for (int v = 0; v < 4; ++v) {
    MPoly im(KL, ab);
    im += MPoly::variable(KL, ab, 0) * tw.embed(A3[v], KL);
    im += MPoly::variable(KL, ab, 1) * tw.embed(B3[v], KL);
    images.push_back(im);
  }
  // restrict the four partials; look for a common projective root
  std::vector<MPoly> restricted;
  for (int v = 0; v < 4; ++v) {
    MPoly dv = X.f.derivative(v).map_coeffs(KL);
    restricted.push_back(dv.substitute(images));
  }
  // collect nonzero restrictions; if all vanish the whole line is singular
  std::vector<MPoly> nz;
  for (auto& r : restricted)
    if (!r.is_zero()) nz.push_back(r);
  if (nz.empty()) {
    auto pt = ker[0];
    return plane_point_to_p3(tw, s, t, pt);
  }
  // common roots of binary cubics
  std::vector<BinRoot> cand = binary_form_roots(tw, nz[0], 0x9a7c);
  for (const auto& br : cand) {
    const FieldCtx& Kr = tw.field(std::lcm(br.a.ctx().k, KL.k));
    std::vector<Fq> ab_pt = {tw.embed(br.a, Kr), tw.embed(br.b, Kr)};
    bool all = true;
    for (auto& r : nz) {
      MPoly rK = r.ctx() == Kr ? r : r.map_coeffs(Kr);
      if (!rK.eval(ab_pt).is_zero()) {
        all = false;
        break;
      }
    }
    if (!all) continue;
    std::vector<Fq> p3(4, Fq::zero(Kr));
    for (int v = 0; v < 4; ++v)
      p3[v] = tw.embed(A3[v], Kr) * ab_pt[0] + tw.embed(B3[v], Kr) * ab_pt[1];
    return normalize_proj(p3);
  }
  return std::nullopt;
}

}  // namespace

SmoothnessReport is_smooth(const QuarticWithLine& X) {
  if (!X.smooth_along_line) {
    SmoothnessReport rep;
    rep.smooth = false;
    rep.reason = "singular along the line";
    const Tower& tw = *X.tower;
    MPoly a10 = X.a(1, 0), a01 = X.a(0, 1);
    if (a10.is_zero() && a01.is_zero()) {
      const FieldCtx& F = X.f.ctx();
      rep.witness = std::vector<Fq>{Fq::one(F), Fq::zero(F), Fq::zero(F), Fq::zero(F)};
    } else {
      // common root of the binary cubics
      MPoly probe = a10.is_zero() ? a01 : a10;
      for (const auto& br : binary_form_roots(tw, as_binary_form(probe, "x1", "x2"), 0x517)) {
        const FieldCtx& Kr = br.a.ctx();
        std::vector<Fq> pt2 = {br.a, br.b};
        MPoly other = a10.is_zero() ? a10 : a01;
        MPoly otherB = other.is_zero()
                           ? MPoly::zero(Kr, {"x1", "x2"})
                           : as_binary_form(other, "x1", "x2").map_coeffs(Kr);
        if (otherB.is_zero() || otherB.eval(pt2).is_zero()) {
          rep.witness = std::vector<Fq>{br.a, br.b, Fq::zero(Kr), Fq::zero(Kr)};
          break;
        }
      }
    }
    return rep;
  }
  FiberTable table;
  try {
    table = singular_fiber_table(X);
  } catch (const error& e) {
    if (e.code() != errc::identically_zero) throw;
    SmoothnessReport rep;
    rep.smooth = false;
    rep.reason = "discriminant vanishes identically";
    const Tower& tw = *X.tower;
    const FieldCtx& F = X.f.ctx();
    for (std::uint64_t sval = 0; sval < std::min<std::uint64_t>(F.p, 50); ++sval) {
      Fq s(F, sval), t = Fq::one(F);
      MPoly C = fiber_cubic(X, s, t);
      if (C.is_zero()) continue;
      auto cls = classify_plane_cubic(C, tw, hash_seq({0xdead, sval}));
      if (cls.type == Kodaira::nonreduced) {
        auto w = witness_on_plane_line(X, s, t, cls.lines[0]);
        if (w) {
          rep.witness = *w;
          return rep;
        }
        continue;
      }
      for (const auto& sp : cls.singular_points) {
        auto p3 = plane_point_to_p3(tw, s, t, sp);
        if (surface_singular_at(X, p3)) {
          rep.witness = p3;
          return rep;
        }
      }
    }
    return rep;
  }
  return is_smooth(X, table);
}

SmoothnessReport is_smooth(const QuarticWithLine& X, const FiberTable& table) {
  SmoothnessReport rep;
  if (!X.smooth_along_line) return is_smooth(X);
  for (const auto& fib : table.fibers) {
    if (fib.kodaira == Kodaira::nonreduced) {
      rep.smooth = false;
      rep.reason = "nonreduced fiber at parameter of degree " +
                   std::to_string(fib.param.field_degree);
      auto w = witness_on_plane_line(X, fib.param.s, fib.param.t,
                                     fib.components_plane.at(0));
      if (w) rep.witness = *w;
      return rep;
    }
    for (const auto& sp : fib.singular_points_p3) {
      if (surface_singular_at(X, sp)) {
        rep.smooth = false;
        rep.reason = "fiber singular point lies on the singular locus";
        rep.witness = sp;
        return rep;
      }
    }
  }
  rep.smooth = true;
  return rep;
}

// ------------------------------------------------------------------ lines

LinesMeeting lines_meeting_line(const QuarticWithLine& X) {
  FiberTable table = singular_fiber_table(X);
  return lines_meeting_line(X, table);
}

LinesMeeting lines_meeting_line(const QuarticWithLine& X, const FiberTable& table) {
  auto rep = is_smooth(X, table);
  require(rep.smooth, errc::singular_surface, "lines_meeting_line needs a smooth surface");
  LinesMeeting out;
  for (const auto& fib : table.fibers) {
    if (fib.components_p3.empty()) continue;
    LineGroup g;
    g.param = fib.param;
    g.kodaira = fib.kodaira;
    g.lines = fib.components_p3;
    out.count += (int)g.lines.size();
    out.groups.push_back(std::move(g));
  }
  return out;
}

}  // namespace qline
