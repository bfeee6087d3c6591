#include "qline/verify.hpp"

#include <memory>
#include <cstdio>
#include <cstdlib>

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "qline/factor.hpp"
#include "qline/families.hpp"
#include "qline/flexline.hpp"
#include "qline/oracle.hpp"
#include "qline/util.hpp"

namespace qline {

namespace {

struct Touched {
  QuarticWithLine X;
  FiberTable table;
  std::optional<FlexSurface> flex;
};

std::map<std::string, int> census(const FiberTable& t) {
  std::map<std::string, int> n;
  for (const auto& f : t.fibers) n[kodaira_name(f.kodaira)]++;
  return n;
}

std::string census_str(const std::map<std::string, int>& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : c) {
    if (!first) os << " + ";
    first = false;
    os << n << " " << k;
  }
  return first ? "none" : os.str();
}

bool proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_term().c == b * a.leading_term().c;
}

MPoly to_st(const MPoly& h34) {
  return h34.renamed_var("x3", "s").renamed_var("x4", "t").rename_ring(pencil_vars());
}

int plane_count(const FlexSurface& S) {
  int n = 0;
  for (const auto& c : S.components)
    if (c.role == ComponentRole::tangent_plane) n += (int)c.planes.size();
  return n;
}

const MPoly* residual_component(const FlexSurface& S) {
  for (const auto& c : S.components)
    if (c.role == ComponentRole::residual) return &c.poly;
  return nullptr;
}

MPoly random_binary(const Tower& tw, int deg, std::mt19937_64& rng) {
  const auto& F = tw.base();
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  MPoly g(F, quartic_vars());
  for (int i = 0; i <= deg; ++i) {
    Fq c(F, dist(rng));
    if (!c.is_zero()) g += MPoly::monomial(F, quartic_vars(), {0, 0, i, deg - i}, c);
  }
  return g;
}

// splitting degree of delta over F_p (lcm of irreducible factor degrees)
int delta_splitting_degree(const Tower& tw, const MPoly& delta) {
  const auto& F = tw.base();
  UPoly u(F);
  u.c.assign(delta.total_degree() + 1, Fq::zero(F));
  for (const auto& t : delta.terms()) u.c[t.e[0]] = t.c;
  u.trim();
  int L = 1;
  if (u.deg() >= 1) {
    auto fac = factor_univariate(u, tw.seed());
    for (auto& [g, m] : fac.factors) L = std::lcm(L, g.deg());
  }
  return L;
}

struct Runner {
  std::uint64_t prime, seed;
  Tower tw;
  // towers for the small-field criteria; they must outlive the touched
  // instances that reference them
  std::vector<std::unique_ptr<Tower>> extra_towers;
  std::vector<Touched> touched;
  VerifyResult result;

  Runner(std::uint64_t p, std::uint64_t s) : prime(p), seed(s), tw(p, s) {}

  void run(int id, const std::string& name, const std::function<std::string()>& body) {
    CriterionResult row;
    row.id = id;
    row.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      std::string detail = body();
      if (detail.rfind("SKIP:", 0) == 0) {
        row.status = "skip";
        row.detail = detail.substr(5);
      } else {
        row.status = "pass";
        row.detail = detail;
      }
    } catch (const std::exception& e) {
      row.status = "fail";
      row.detail = e.what();
      result.all_pass = false;
    }
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) {
      std::ostringstream os;
      os << "  [" << row.status << "] criterion " << row.id << " (" << row.seconds
         << " s)\n";
      std::fputs(os.str().c_str(), stderr);
    }
    result.rows.push_back(row);
  }
  bool progress = std::getenv("QLINE_VERIFY_PROGRESS") != nullptr;

  [[noreturn]] static void mismatch(const std::string& what, const std::string& expected,
                                    const std::string& got) {
    throw std::runtime_error(what + ": expected " + expected + ", got " + got);
  }
  static void expect(bool ok, const std::string& what, const std::string& expected,
                     const std::string& got) {
    if (!ok) mismatch(what, expected, got);
  }
  static void expect_eq(int got, int expected, const std::string& what) {
    expect(got == expected, what, std::to_string(expected), std::to_string(got));
  }

  void touch(QuarticWithLine X, FiberTable table, std::optional<FlexSurface> flex) {
    touched.push_back({std::move(X), std::move(table), std::move(flex)});
  }

  // ---- criteria ----

  std::string c1() {
    auto X = make_Z_paper_instance(tw);
    auto table = singular_fiber_table(X);
    expect(is_smooth(X, table).smooth, "smoothness", "smooth", "singular");
    auto c = census(table);
    expect(c["I3"] == 6 && c["I1"] == 6 && (int)table.fibers.size() == 12,
           "fibration", "6 I3 + 6 I1", census_str(c));
    auto lines = lines_meeting_line(X, table);
    expect_eq(lines.count, 18, "lines meeting the line");
    int triplets = 0;
    for (const auto& g : lines.groups) triplets += (g.lines.size() == 3);
    expect_eq(triplets, 6, "coplanar triplets");
    // Delta = s t g (q^3 + 27 s t g)^3 up to scalar
    const auto& F = tw.base();
    MPoly q = to_st(parse_poly("6*x3^2-3*x3*x4+3*x4^2", F, quartic_vars()));
    MPoly g = to_st(parse_poly(
        "1/3*(80*x3^4+20*x4^4-72*x3^3*x4-16*x3^2*x4^2-36*x3*x4^3)", F, quartic_vars()));
    MPoly s = MPoly::variable(F, pencil_vars(), 0);
    MPoly t = MPoly::variable(F, pencil_vars(), 1);
    MPoly closed = s * t * g * (q.pow(3) + s * t * g * Fq(F, 27)).pow(3);
    expect(proportional(table.delta, closed), "discriminant",
           "s t g (q^3+27 s t g)^3 up to scalar", "different form");
    auto flex = flex_surface(X);
    touch(X, table, flex);
    return "smooth; 6 I3 + 6 I1; 18 lines in 6 triplets; Delta matches";
  }

  std::string c2() {
    auto X = make_Z_paper_instance(tw);
    auto table = singular_fiber_table(X);
    auto flex = flex_surface(X);
    expect_eq(flex.reduced_degree, 8, "reduced degree");
    expect_eq(plane_count(flex), 2, "tangent-plane count");
    const MPoly* resid = residual_component(flex);
    expect(resid != nullptr, "residual component", "present", "absent");
    const auto& F = tw.base();
    MPoly q = parse_poly("6*x3^2-3*x3*x4+3*x4^2", F, quartic_vars());
    MPoly h = parse_poly("27*x1^3*x3^2*x4+27*x2^3*x3*x4^2", F, quartic_vars()) +
              parse_poly("27*x1*x2*x3*x4", F, quartic_vars()) * q - q.pow(3);
    expect(proportional(*resid, h), "sextic residual", "Eq. (7.2) up to scalar",
           "different polynomial");
    auto prof = ramification_profile(X);
    MPoly res = strip_tangent_planes(flex, prof, X);
    expect(residual_irreducibility(X, res) == IrreducibilityCert::eisenstein_irreducible,
           "irreducibility certificate", "eisenstein-irreducible", "weaker");
    touch(X, table, flex);
    return "reduced degree 8 = 2 planes + sextic (Eq. 7.2), Eisenstein-certified";
  }

  std::string c3() {
    const auto& F = tw.base();
    auto rng = seeded_rng(hash_seq({prime, seed, 0xc3}));
    // gamma = 0, g = x3^4 + x4^4
    {
      ZParams par;
      par.q = MPoly::zero(F, quartic_vars());
      par.g = parse_poly("x3^4+x4^4", F, quartic_vars());
      auto X = make_Z(tw, par);
      auto table = singular_fiber_table(X);
      expect(is_smooth(X, table).smooth, "gamma=0 smoothness", "smooth", "singular");
      auto c = census(table);
      expect(c["IV"] == 6 && (int)table.fibers.size() == 6, "gamma=0 fibration",
             "6 IV", census_str(c));
      expect(segre_detect(X, table), "gamma=0 detect", "true", "false");
      auto dec = segre_recover(X, table);
      expect(proportional(dec.s4, make_S4_gamma(tw, Fq::zero(F))), "gamma=0 S4",
             "x3 x1^3 + x4 x2^3 up to scalar", "different");
      expect(dec.sing_class == SegreDecomposition::SingClass::line_of_triple_points,
             "gamma=0 singular locus", "line-of-triple-points",
             sing_class_name(dec.sing_class));
      expect_eq(lines_meeting_line(X, table).count, 18, "gamma=0 line count (24-3*2)");
      touch(X, table, flex_surface(X));
    }
    // gamma = 3, generic smooth g
    {
      std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
      for (int trial = 0;; ++trial) {
        expect(trial < 64, "gamma=3 sampling", "a smooth draw", "exhausted");
        ZParams par;
        par.q = parse_poly("3*x3*x4", F, quartic_vars());
        par.g = random_binary(tw, 4, rng);
        auto X = make_Z(tw, par);
        FiberTable table;
        try {
          table = singular_fiber_table(X);
        } catch (const error&) {
          continue;
        }
        if (!is_smooth(X, table).smooth) continue;
        auto c = census(table);
        expect(c["IV"] == 2 && c["I3"] == 4 && c["I1"] == 4, "gamma=3 fibration",
               "2 IV + 4 I3 + 4 I1", census_str(c));
        expect(segre_detect(X, table), "gamma=3 detect", "true", "false");
        auto dec = segre_recover(X, table);
        expect(proportional(dec.s4, make_S4_gamma(tw, Fq(F, 3))), "gamma=3 S4",
               "Remark 7.6 quartic up to scalar", "different");
        expect(dec.sing_class == SegreDecomposition::SingClass::twisted_cubic,
               "gamma=3 singular locus", "twisted-cubic", sing_class_name(dec.sing_class));
        expect_eq(lines_meeting_line(X, table).count, 18, "gamma=3 line count");
        touch(X, table, flex_surface(X));
        break;
      }
    }
    return "both specializations detect and recover with the stated classes";
  }

  std::string c4() {
    const auto& F = tw.base();
    auto rng = seeded_rng(hash_seq({prime, seed, 0xc4}));
    std::uniform_int_distribution<std::uint64_t> dist(1, F.p - 1);
    int done = 0;
    for (int trial = 0; done < 10; ++trial) {
      expect(trial < 400, "sampling", "10 smooth draws", "exhausted");
      TParams par;
      par.a = Fq(F, dist(rng));
      par.b = Fq(F, dist(rng));
      par.c = Fq(F, dist(rng));
      par.g = random_binary(tw, 4, rng);
      auto X = make_T(tw, par);
      FiberTable table;
      try {
        table = singular_fiber_table(X);
      } catch (const error&) {
        continue;
      }
      if (!is_smooth(X, table).smooth) continue;
      ++done;
      auto c = census(table);
      expect(c["I3"] == 5 && c["I1"] == 5 && c["II"] == 2, "fibration",
             "5 I3 + 5 I1 + 2 II", census_str(c));
      expect_eq(lines_meeting_line(X, table).count, 15, "line count");
      expect(ramification_profile(X).type == RamType::r211, "ramification type",
             "2,1^2", ram_type_name(ramification_profile(X).type));
      auto flex = flex_surface(X);
      expect_eq(flex.reduced_degree, 8, "flex reduced degree");
      expect_eq(plane_count(flex), 3, "tangent planes");
      const MPoly* resid = residual_component(flex);
      expect(resid && resid->total_degree() == 5, "residual", "a quintic",
             resid ? std::to_string(resid->total_degree()) : "absent");
      expect(!segre_detect(X, table), "detect", "false", "true");
      touch(X, table, flex);
    }
    return "10 smooth draws: 5 I3 + 5 I1 + 2 II, 15 lines, 3 planes + quintic";
  }

  std::string c5() {
    const auto& F = tw.base();
    auto rng = seeded_rng(hash_seq({prime, seed, 0xc5}));
    std::uniform_int_distribution<std::uint64_t> dist(1, F.p - 1);
    int done = 0;
    for (int trial = 0; done < 5; ++trial) {
      expect(trial < 400, "sampling", "5 smooth draws", "exhausted");
      TParams par;
      par.a = Fq::zero(F);
      par.b = Fq(F, dist(rng));
      par.c = Fq(F, dist(rng));
      par.g = random_binary(tw, 4, rng);
      auto X = make_T(tw, par);
      FiberTable table;
      try {
        table = singular_fiber_table(X);
      } catch (const error&) {
        continue;
      }
      if (!is_smooth(X, table).smooth) continue;
      ++done;
      auto tc = triple_contact_fibers(X);
      expect_eq((int)tc.size(), 1, "triple-contact fibers");
      bool iv = false;
      for (const auto& fib : table.fibers)
        if (fib.param == tc[0]) iv = (fib.kodaira == Kodaira::IV);
      expect(iv, "triple-contact fiber type", "IV", "other");
      expect(segre_detect(X, table), "detect", "true", "false");
      auto dec = segre_recover(X, table);
      // re-verify the identity externally
      {
        int L = 1;
        for (const auto& P : dec.planes) L = std::lcm(L, P.ctx().k);
        const FieldCtx& KL = tw.field(L);
        MPoly prod = MPoly::constant(KL, quartic_vars(), Fq::one(KL));
        for (const auto& P : dec.planes)
          prod = prod * (P.ctx() == KL ? P : P.map_coeffs(KL));
        MPoly lhs = dec.s4.map_coeffs(KL) * tw.embed(dec.lambda, KL) + prod;
        expect(lhs == X.f.map_coeffs(KL), "identity", "lambda S4 + prod L = f",
               "mismatch");
      }
      auto flex = flex_surface(X);
      expect_eq(flex.reduced_degree, 7, "flex reduced degree");
      auto c = census(table);
      bool tc_version = c["IV"] == 1 && c["I3"] == 4 && c["I1"] == 4 && c["II"] == 2;
      bool line_version = c["IV"] == 5 && c["II"] == 2;
      expect(tc_version || line_version, "fibration",
             "IV + 4 I3 + 4 I1 + 2 II or 5 IV + 2 II", census_str(c));
      bool class_matches =
          (tc_version && dec.sing_class == SegreDecomposition::SingClass::twisted_cubic) ||
          (line_version &&
           dec.sing_class == SegreDecomposition::SingClass::line_of_triple_points);
      expect(class_matches, "class consistency", "fibration matches singular locus",
             sing_class_name(dec.sing_class));
      expect_eq(lines_meeting_line(X, table).count, 15, "line count (24-3*3)");
      touch(X, table, flex);
    }
    return "5 smooth a=0 draws: type IV contact fiber, exact recovery, degree 7 flex";
  }

  std::string c6() {
    const auto& F = tw.base();
    auto rng = seeded_rng(hash_seq({prime, seed, 0xc6}));
    std::uniform_int_distribution<std::uint64_t> dist(1, F.p - 1);
    int done = 0;
    for (int trial = 0; done < 5; ++trial) {
      expect(trial < 400, "sampling", "5 smooth draws", "exhausted");
      TParams par;
      par.a = Fq(F, dist(rng));
      par.b = Fq(F, dist(rng));
      par.c = Fq(F, dist(rng));
      par.g = random_binary(tw, 4, rng);
      Fq want = Fq(F, 4) * par.a.pow(3) * par.c.pow(3) * Fq(F, 27).inv();
      par.g += MPoly::monomial(F, quartic_vars(), {0, 0, 4, 0},
                               want - par.g.coeff({0, 0, 4, 0}));
      auto X = make_T(tw, par);
      FiberTable table;
      try {
        table = singular_fiber_table(X);
      } catch (const error&) {
        continue;
      }
      if (!is_smooth(X, table).smooth) continue;
      ++done;
      auto tc = triple_contact_fibers(X);
      expect_eq((int)tc.size(), 1, "triple-contact fibers");
      bool i2 = false;
      for (const auto& fib : table.fibers)
        if (fib.param == tc[0]) i2 = (fib.kodaira == Kodaira::I2);
      expect(i2, "triple-contact fiber type", "I2", "other");
      expect_eq(lines_meeting_line(X, table).count, 16, "line count");
      touch(X, table, std::nullopt);
    }
    return "5 smooth draws: I2 contact fiber and 16 lines (count formula fails)";
  }

  std::string c7() {
    const auto& F = tw.base();
    auto rng = seeded_rng(hash_seq({prime, seed, 0xc7}));
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
    std::uniform_int_distribution<std::uint64_t> dist1(1, F.p - 1);
    int composed = 0, smooth_count = 0, recovered = 0;
    for (int iter = 0; composed < 500; ++iter) {
      expect(iter < 3000, "sampling", "500 valid compositions", "exhausted");
      Fq gamma(F, dist(rng));
      Fq mu(F, dist1(rng));
      MPoly S = make_S4_gamma(tw, gamma);
      // four pairwise independent pencil planes
      std::vector<MPoly> planes;
      std::vector<std::pair<Fq, Fq>> seen;
      while ((int)planes.size() < 4) {
        Fq a(F, dist(rng)), b(F, dist(rng));
        if (a.is_zero() && b.is_zero()) continue;
        bool dep = false;
        for (auto& [pa, pb] : seen) dep = dep || (pa * b - pb * a).is_zero();
        if (dep) continue;
        seen.push_back({a, b});
        planes.push_back(MPoly::variable(F, quartic_vars(), 2) * a +
                         MPoly::variable(F, quartic_vars(), 3) * b);
      }
      auto X = segre_compose(tw, S * mu, planes);  // throws if not second kind
      ++composed;
      FiberTable table;
      try {
        table = singular_fiber_table(X);
      } catch (const error&) {
        continue;
      }
      if (!is_smooth(X, table).smooth) continue;
      ++smooth_count;
      expect(segre_detect(X, table), "detect on composed surface", "true", "false");
      auto dec = segre_recover(X, table);
      expect(proportional(dec.s4, S), "recovered ruled quartic",
             "input S4 up to scalar", "different");
      expect(dec.s4 * dec.lambda == S * mu, "recovered scalar",
             "lambda S4 = mu S4_input", "mismatch");
      ++recovered;
      if (smooth_count <= 25) touch(X, table, std::nullopt);
    }
    expect(smooth_count > 0, "smooth subset", "nonempty", "empty");
    std::ostringstream os;
    os << "500 compositions second-kind; " << smooth_count
       << " smooth, all detected and recovered (" << recovered << ")";
    return os.str();
  }

  std::string c8() {
    int verified = 0;
    std::ostringstream os;
    for (std::uint64_t p : {31ull, 41ull}) {
      extra_towers.push_back(std::make_unique<Tower>(p, seed));
      Tower& small = *extra_towers.back();
      auto rng = seeded_rng(hash_seq({p, seed, 0xc8}));
      std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
      std::uniform_int_distribution<std::uint64_t> dist1(1, p - 1);
      int done = 0;
      for (int trial = 0; done < 10; ++trial) {
        expect(trial < 4000, "sampling", "10 split members per prime", "exhausted");
        QuarticWithLine X;
        try {
          if (trial % 2 == 0) {
            ZParams par;
            par.q = random_binary(small, 2, rng);
            par.g = random_binary(small, 4, rng);
            X = make_Z(small, par);
          } else {
            TParams par;
            par.a = Fq(small.base(), dist1(rng));
            par.b = Fq(small.base(), dist(rng));
            par.c = Fq(small.base(), dist1(rng));
            par.g = random_binary(small, 4, rng);
            X = make_T(small, par);
          }
        } catch (const error&) {
          continue;
        }
        if (!X.smooth_along_line) continue;
        MPoly delta(small.base(), pencil_vars());
        try {
          delta = pencil_discriminant(X);
        } catch (const error&) {
          continue;
        }
        int L = delta_splitting_degree(small, delta);
        if (L > 2) continue;  // keep the enumeration within the table budget
        FiberTable table;
        try {
          table = singular_fiber_table(X);
        } catch (const error&) {
          continue;
        }
        if (!is_smooth(X, table).smooth) continue;
        auto oracle = brute_force_lines_meeting(X, L);
        auto from_impl = rational_lines_from_table(X, table, L);
        expect(oracle == from_impl, "line census over F_{p^L}",
               std::to_string(oracle.size()) + " oracle lines",
               std::to_string(from_impl.size()) + " implementation lines");
        ++done;
        ++verified;
        touch(X, table, std::nullopt);
      }
      os << "p=" << p << ": 10 members verified; ";
    }
    expect_eq(verified, 20, "verified members");
    return os.str();
  }

  std::string c9() {
    int checked = 0;
    for (const auto& inst : touched) {
      const auto& table = inst.table;
      expect(table.delta.is_homogeneous() && table.delta.total_degree() == 24,
             "deg Delta", "24", std::to_string(table.delta.total_degree()));
      int vsum = 0;
      for (const auto& fib : table.fibers) {
        vsum += fib.v_delta;
        expect(fib.v_delta == kodaira_vdelta(fib.kodaira), "Kodaira v(Delta) table",
               std::to_string(kodaira_vdelta(fib.kodaira)) + " for " +
                   kodaira_name(fib.kodaira),
               std::to_string(fib.v_delta));
      }
      expect_eq(vsum, 24, "sum of v(Delta)");
      if (inst.flex) {
        for (const auto& comp : inst.flex->components) {
          if (!comp.planes.empty())
            expect(comp.role == ComponentRole::tangent_plane,
                   "flex plane component role", "tangent plane at supp(R)",
                   "stray plane component");
        }
      }
      expect(flex_cross_check(inst.X, 5), "flex cross check", "agreement",
             "disagreement");
      ++checked;
    }
    return "invariants hold on " + std::to_string(checked) + " instances";
  }

  std::string c10() {
    auto res = search_type_1111(tw, 10000);
    if (!res.found) return "SKIP:search budget exhausted without a 1^4 instance";
    auto& X = *res.found;
    auto table = singular_fiber_table(X);
    expect(is_smooth(X, table).smooth, "smoothness", "smooth", "singular");
    expect(ramification_profile(X).type == RamType::r1111, "ramification type",
           "1^4", ram_type_name(ramification_profile(X).type));
    auto lines = lines_meeting_line(X, table);
    expect_eq(lines.count, 12, "line count");
    int triplets = 0;
    for (const auto& g : lines.groups) triplets += (g.lines.size() == 3);
    expect_eq(triplets, 4, "coplanar triplets");
    auto c = census(table);
    bool a = c["I3"] == 4 && c["I1"] == 4 && c["II"] == 4;
    bool b = c["IV"] == 4 && c["II"] == 4;
    expect(a || b, "fibration", "4 I3 + 4 I1 + 4 II or 4 IV + 4 II", census_str(c));
    auto flex = flex_surface(X);
    expect_eq(flex.reduced_degree, 8, "flex reduced degree");
    expect_eq(plane_count(flex), 4, "tangent planes");
    expect(segre_detect(X, table), "detect", "true", "false");
    auto dec = segre_recover(X, table);
    expect_eq((int)dec.planes.size(), 4, "recovered planes");
    touch(X, table, flex);
    return "found after " + std::to_string(res.candidates_tried) +
           " candidates: 12 lines, " + census_str(c);
  }
};

}  // namespace

VerifyResult verify_paper(std::uint64_t prime, std::uint64_t seed) {
  require(prime != 2 && prime != 3 && prime != 5 && prime != 7, errc::bad_characteristic,
          "verification needs characteristic away from 2, 3, 5, 7");
  require(prime > 24, errc::bad_characteristic,
          "verification needs p > 24 so squarefree decomposition of the degree-24 "
          "discriminant stays tame");
  Runner r(prime, seed);
  r.run(1, "explicit 2^2 member: fibration, 18 lines, discriminant", [&] { return r.c1(); });
  r.run(2, "flex surface of the explicit member with Eisenstein certificate",
        [&] { return r.c2(); });
  r.run(3, "q = gamma x3 x4 specializations: detect, recover, classes",
        [&] { return r.c3(); });
  r.run(4, "generic 2,1^2 members: counts and flex shape", [&] { return r.c4(); });
  r.run(5, "a = 0 members: type IV contact, exact recovery", [&] { return r.c5(); });
  r.run(6, "I2 specialization: 16 lines", [&] { return r.c6(); });
  r.run(7, "500 compositions: construction soundness and roundtrip",
        [&] { return r.c7(); });
  r.run(8, "brute-force line census over small fields", [&] { return r.c8(); });
  r.run(9, "cross-cutting invariants on every touched instance", [&] { return r.c9(); });
  r.run(10, "ramification 1^4 search (conditional)", [&] { return r.c10(); });
  return r.result;
}

std::string format_verify_table(const VerifyResult& r) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << (row.status == "pass" ? "[PASS]" : row.status == "skip" ? "[SKIP]" : "[FAIL]")
       << " " << row.id << ". " << row.name << " (" << std::fixed;
    os.precision(2);
    os << row.seconds << " s)\n       " << row.detail << "\n";
  }
  os << (r.all_pass ? "result: all criteria pass" : "result: FAILURES present") << "\n";
  return os.str();
}

}  // namespace qline
