#include "qline/families.hpp"

#include "qline/util.hpp"

namespace qline {

namespace {

void check_binary_34(const MPoly& h, int deg, const char* what) {
  if (h.is_zero()) return;
  require(h.uses_only({2, 3}), errc::ctx_mismatch,
          std::string(what) + " must involve only x3 and x4");
  require(h.is_homogeneous() && h.total_degree() == deg, errc::ctx_mismatch,
          std::string(what) + " has the wrong degree");
}

}  // namespace

QuarticWithLine make_T(const Tower& tw, const TParams& par) {
  require(!par.c.is_zero(), errc::c_zero,
          "c = 0 changes the ramification type to 2^2");
  const FieldCtx& F = tw.base();
  check_binary_34(par.g, 4, "g");
  const auto& vars = quartic_vars();
  auto V = [&](int i) { return MPoly::variable(F, vars, i); };
  auto C = [&](const Fq& v) { return MPoly::constant(F, vars, v); };
  const Fq &a = par.a, &b = par.b, &c = par.c;
  Fq four(F, 4), three(F, 3);
  Fq c3 = c.pow(3);
  Fq b4ac3 = b + four * a * c3;
  MPoly x1 = V(0), x2 = V(1), x3 = V(2), x4 = V(3);
  MPoly f = par.g.is_zero() ? MPoly::zero(F, vars) : par.g;
  f += x1 * x2 * x4 * x4 * (-(four * c3 * b4ac3));
  f += x1 * x2 * x3 * x4 * b;
  f += x1 * x2 * x3 * x3 * a;
  f += x2 * x2 * (x2 - x1 * (three * c)) * x4;
  f += x1.pow(3) * x3;
  f += (x3 - x4 * (four * c3)) * (C(b4ac3) * x4 + C(a) * x3).pow(2) *
       (C(c) * x1 + x2) * (c * three.inv());
  auto X = from_normalized(tw, f);
  X.provenance = "family T member";
  return X;
}

QuarticWithLine make_Z(const Tower& tw, const ZParams& par) {
  const FieldCtx& F = tw.base();
  check_binary_34(par.q, 2, "q");
  check_binary_34(par.g, 4, "g");
  const auto& vars = quartic_vars();
  auto V = [&](int i) { return MPoly::variable(F, vars, i); };
  MPoly f = V(2) * V(0).pow(3) + V(3) * V(1).pow(3);
  if (!par.q.is_zero()) f += V(0) * V(1) * par.q;
  if (!par.g.is_zero()) f += par.g;
  auto X = from_normalized(tw, f);
  X.provenance = "family Z member";
  return X;
}

QuarticWithLine make_Z_paper_instance(const Tower& tw) {
  std::uint64_t p = tw.p();
  require(p != 2 && p != 3 && p != 5 && p != 7, errc::bad_characteristic,
          "the explicit instance needs characteristic away from 2, 3, 5, 7");
  const FieldCtx& F = tw.base();
  ZParams par;
  par.q = parse_poly("6*x3^2-3*x3*x4+3*x4^2", F, quartic_vars());
  par.g = parse_poly("1/3*(80*x3^4+20*x4^4-72*x3^3*x4-16*x3^2*x4^2-36*x3*x4^3)", F,
                     quartic_vars());
  auto X = make_Z(tw, par);
  X.provenance = "explicit Z instance";
  return X;
}

MPoly make_S4_gamma(const Tower& tw, const Fq& gamma) {
  const FieldCtx& F = tw.base();
  const auto& vars = quartic_vars();
  auto V = [&](int i) { return MPoly::variable(F, vars, i); };
  MPoly S = V(2) * V(0).pow(3) + V(3) * V(1).pow(3);
  if (!gamma.is_zero()) {
    S += V(0) * V(1) * V(2) * V(3) * gamma;
    S -= V(2).pow(2) * V(3).pow(2) * (gamma.pow(3) * Fq(F, 27).inv());
  }
  return S;
}

SearchResult search_type_1111(const Tower& tw, int budget) {
  const FieldCtx& F = tw.base();
  const auto& vars = quartic_vars();
  SearchResult result;
  for (int iter = 0; iter < budget; ++iter) {
    ++result.candidates_tried;
    auto rng = seeded_rng(hash_seq({0x1111, tw.p(), tw.seed(), (std::uint64_t)iter}));
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
    // line correspondence: P(tau) on the line, D(tau) a random twisted cubic
    Fq p0(F, dist(rng)), p1(F, dist(rng)), r0(F, dist(rng)), r1(F, dist(rng));
    if ((p0 * r1 - p1 * r0).is_zero()) continue;  // P(tau) must sweep the line
    std::vector<std::vector<Fq>> D(4);
    for (auto& row : D)
      for (int k = 0; k < 4; ++k) row.push_back(Fq(F, dist(rng)));
    // sample ruling points and solve for the quartics through them
    std::vector<std::vector<Fq>> samples;
    for (int it = 0; it < 20 && (int)samples.size() < 80; ++it) {
      Fq tau(F, dist(rng));
      Fq Pt[4] = {p0 + p1 * tau, r0 + r1 * tau, Fq::zero(F), Fq::zero(F)};
      Fq Dt[4];
      for (int i = 0; i < 4; ++i) {
        Fq acc = Fq::zero(F);
        Fq tp = Fq::one(F);
        for (int k = 0; k < 4; ++k) {
          acc += D[i][k] * tp;
          tp *= tau;
        }
        Dt[i] = acc;
      }
      for (int m = 0; m < 4; ++m) {
        Fq mu(F, dist(rng));
        std::vector<Fq> x(4, Fq::zero(F));
        for (int i = 0; i < 4; ++i) x[i] = Pt[i] + mu * Dt[i];
        samples.push_back(std::move(x));
      }
    }
    // 35 quartic monomials
    std::vector<ExpVec> monos;
    for (int e1 = 0; e1 <= 4; ++e1)
      for (int e2 = 0; e1 + e2 <= 4; ++e2)
        for (int e3 = 0; e1 + e2 + e3 <= 4; ++e3)
          monos.push_back({e1, e2, e3, 4 - e1 - e2 - e3});
    FqMat mat(F, (int)samples.size(), (int)monos.size());
    for (int r = 0; r < (int)samples.size(); ++r) {
      for (int ccol = 0; ccol < (int)monos.size(); ++ccol) {
        Fq v = Fq::one(F);
        for (int i = 0; i < 4; ++i)
          for (int e = 0; e < monos[ccol][i]; ++e) v *= samples[r][i];
        mat.at(r, ccol) = v;
      }
    }
    auto ker = mat.kernel();
    if (ker.size() != 1) continue;
    MPoly S(F, vars);
    for (int ccol = 0; ccol < (int)monos.size(); ++ccol)
      if (!ker[0][ccol].is_zero()) S.add_term(ExpVec(monos[ccol]), ker[0][ccol]);
    S.normalize();
    if (S.is_zero() || S.total_degree() != 4) continue;
    // the ruled quartic must contain the line and be smooth along it
    bool on_line_ideal = true;
    for (const auto& term : S.terms()) on_line_ideal &= (term.e[2] + term.e[3] >= 1);
    if (!on_line_ideal) continue;
    // compose with four distinct pencil planes
    MPoly planes = MPoly::constant(F, vars, Fq::one(F));
    std::vector<Fq> cs;
    while ((int)cs.size() < 4) {
      Fq cc(F, dist(rng));
      bool dup = false;
      for (auto& prev : cs) dup |= (prev == cc);
      if (!dup) cs.push_back(cc);
    }
    for (auto& cc : cs)
      planes = planes * (MPoly::variable(F, vars, 2) - MPoly::variable(F, vars, 3) * cc);
    MPoly fq = S + planes;
    QuarticWithLine X;
    try {
      X = from_normalized(tw, fq);
    } catch (const error&) {
      continue;
    }
    if (!X.smooth_along_line) continue;
    try {
      auto prof = ramification_profile(X);
      if (prof.type != RamType::r1111) continue;
      auto table = singular_fiber_table(X);
      if (!is_smooth(X, table).smooth) continue;
    } catch (const error&) {
      continue;
    }
    X.provenance = "search: ruled quartic from a twisted-cubic correspondence";
    result.found = X;
    return result;
  }
  return result;
}

}  // namespace qline
