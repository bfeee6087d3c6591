#include "qline/report.hpp"

#include <set>

namespace qline {

namespace {

// polynomial in normalized coordinates -> the caller's frame
MPoly map_poly_back(const MPoly& g, const FqMat& to_original, const Tower& tw) {
  const FieldCtx& K = g.ctx();
  bool identity = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Fq& v = to_original.at(i, j);
      if ((i == j) ? !v.is_one() : !v.is_zero()) identity = false;
    }
  if (identity) return g;
  FqMat M(K, 4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M.at(i, j) = tw.embed(to_original.at(i, j), K);
  return substitute_linear(g, M.inverse().to_rows());
}

std::vector<Fq> map_point_back(const std::vector<Fq>& pt, const FqMat& to_original,
                               const Tower& tw) {
  const FieldCtx& K = pt[0].ctx();
  std::vector<Fq> out(4, Fq::zero(K));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += tw.embed(to_original.at(i, j), K) * pt[j];
  return normalize_proj(out);
}

}  // namespace

AnalysisReport analyze(const Tower& tw, const MPoly& f, const MPoly& l1,
                       const MPoly& l2, const AnalyzeOptions& opts) {
  auto X = normalize_line(tw, f, l1, l2);
  auto rep = analyze(tw, X, opts);
  rep.input_quartic = f.str();
  rep.input_line = l1.str() + "; " + l2.str();
  return rep;
}

AnalysisReport analyze(const Tower& tw, const QuarticWithLine& X,
                       const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.tower = &tw;
  rep.prime = tw.p();
  rep.seed = tw.seed();
  rep.to_original = X.to_original;
  rep.input_quartic = X.f.str();
  rep.input_line = "x3; x4";

  if (!X.smooth_along_line) {
    rep.smooth = is_smooth(X);
    return rep;
  }

  rep.second_kind = is_second_kind(X);
  try {
    rep.ramification = ramification_profile(X);
  } catch (const error&) {
    // Wronskian degenerate: fall through with a partial report
  }

  FiberTable table;
  try {
    table = singular_fiber_table(X);
  } catch (const error& e) {
    if (e.code() != errc::identically_zero) throw;
    rep.smooth = is_smooth(X);
    return rep;
  }
  rep.smooth = is_smooth(X, table);
  rep.fibers = table;
  if (!rep.smooth.smooth) return rep;

  rep.lines = lines_meeting_line(X, table);
  try {
    rep.cross_check_agrees = flex_cross_check(X, opts.cross_check_samples);
  } catch (const error& e) {
    if (e.code() != errc::too_few_smooth_fibers) throw;
  }
  rep.flex = flex_surface(X);
  if (rep.ramification) {
    MPoly residual = strip_tangent_planes(*rep.flex, *rep.ramification, X);
    rep.flex_residual = residual;
    rep.residual_cert = residual_irreducibility(X, residual);
  }
  if (*rep.second_kind) {
    rep.detect = segre_detect(X, table);
    if (*rep.detect) rep.segre = segre_recover(X, table);
  }
  return rep;
}

// ------------------------------------------------------------------ JSON

namespace {

json fq_json(const Fq& x) {
  if (x.ctx().k == 1) return json(x.vec()[0]);
  json j;
  j["d"] = x.ctx().k;
  j["c"] = x.vec();
  return j;
}

json poly_json(const MPoly& f) {
  json j;
  j["d"] = f.ctx().k;
  if (f.ctx().k == 1) {
    j["text"] = f.str();
  } else {
    json terms = json::array();
    for (const auto& t : f.terms()) {
      json term;
      term["e"] = t.e;
      term["c"] = t.c.vec();
      terms.push_back(term);
    }
    j["terms"] = terms;
  }
  return j;
}

json point_json(const std::vector<Fq>& pt) {
  json j = json::array();
  for (const auto& x : pt) j.push_back(fq_json(x));
  return j;
}

json pencil_point_json(const PencilPoint& P) {
  json j;
  j["d"] = P.field_degree;
  j["s"] = fq_json(P.s);
  j["t"] = fq_json(P.t);
  return j;
}

}  // namespace

json AnalysisReport::to_json(const AnalyzeOptions& opts, double seconds) const {
  json j;
  j["schema"] = 1;
  j["input"] = {{"prime", prime},
                {"seed", seed},
                {"quartic", input_quartic},
                {"line", input_line}};
  // registry of the extension fields used anywhere in the report
  std::set<int> degrees;
  auto note_ctx = [&](const FieldCtx& K) {
    if (K.k > 1) degrees.insert(K.k);
  };
  json smooth_j;
  smooth_j["value"] = smooth.smooth;
  if (!smooth.reason.empty()) smooth_j["reason"] = smooth.reason;
  if (smooth.witness) {
    auto w = map_point_back(*smooth.witness, to_original, *tower);
    note_ctx(w[0].ctx());
    smooth_j["witness"] = point_json(w);
  }
  j["smooth"] = smooth_j;
  if (second_kind) j["second_kind"] = *second_kind;
  if (ramification) {
    json r;
    r["type"] = ram_type_name(ramification->type);
    json pts = json::array();
    for (const auto& P : ramification->points) {
      note_ctx(P.x1.ctx());
      json pj;
      pj["point"] = json::array({fq_json(P.x1), fq_json(P.x2)});
      pj["d"] = P.field_degree;
      pj["multiplicity"] = P.multiplicity;
      pts.push_back(pj);
    }
    r["points"] = pts;
    j["ramification"] = r;
  }
  if (fibers) {
    json t;
    t["delta"] = fibers->delta.str();
    json fl = json::array();
    for (const auto& fib : fibers->fibers) {
      note_ctx(fib.param.s.ctx());
      json fj;
      fj["param"] = pencil_point_json(fib.param);
      fj["v_delta"] = fib.v_delta;
      fj["kodaira"] = kodaira_name(fib.kodaira);
      fj["contact"] = fib.contact;
      json comps = json::array();
      for (const auto& [a, b] : fib.components_p3) {
        note_ctx(a.ctx());
        comps.push_back(json::array({poly_json(map_poly_back(a, to_original, *tower)),
                                     poly_json(map_poly_back(b, to_original, *tower))}));
      }
      fj["lines"] = comps;
      json sps = json::array();
      for (const auto& sp : fib.singular_points_p3) {
        note_ctx(sp[0].ctx());
        sps.push_back(point_json(map_point_back(sp, to_original, *tower)));
      }
      fj["singular_points"] = sps;
      fl.push_back(fj);
    }
    t["list"] = fl;
    j["fibers"] = t;
  }
  if (lines) {
    json l;
    l["count"] = lines->count;
    json groups = json::array();
    for (const auto& g : lines->groups) {
      json gj;
      gj["param"] = pencil_point_json(g.param);
      gj["kodaira"] = kodaira_name(g.kodaira);
      json ls = json::array();
      for (const auto& [a, b] : g.lines) {
        note_ctx(a.ctx());
        ls.push_back(json::array({poly_json(map_poly_back(a, to_original, *tower)),
                                  poly_json(map_poly_back(b, to_original, *tower))}));
      }
      gj["lines"] = ls;
      groups.push_back(gj);
    }
    l["groups"] = groups;
    j["lines_meeting"] = l;
  }
  if (flex) {
    json fj;
    fj["raw_degree"] = flex->raw_degree;
    fj["stripped_power"] = flex->stripped_power;
    fj["reduced_degree"] = flex->reduced_degree;
    fj["symmetric_match"] = flex->symmetric_divisor_match;
    json comps = json::array();
    for (const auto& c : flex->components) {
      json cj;
      cj["poly"] = poly_json(map_poly_back(c.poly, to_original, *tower));
      cj["degree"] = c.degree;
      cj["multiplicity"] = c.multiplicity;
      cj["role"] =
          c.role == ComponentRole::tangent_plane ? "tangent-plane" : "residual";
      comps.push_back(cj);
    }
    fj["components"] = comps;
    if (flex_residual)
      fj["residual"] = poly_json(map_poly_back(*flex_residual, to_original, *tower));
    if (residual_cert) fj["residual_certificate"] = irreducibility_cert_name(*residual_cert);
    j["flex_surface"] = fj;
  }
  json sj;
  if (detect) sj["detect"] = *detect;
  if (segre) {
    sj["lambda"] = fq_json(segre->lambda);
    sj["s4"] = poly_json(map_poly_back(segre->s4, to_original, *tower));
    json pl = json::array();
    for (const auto& P : segre->planes) {
      note_ctx(P.ctx());
      pl.push_back(poly_json(map_poly_back(P, to_original, *tower)));
    }
    sj["planes"] = pl;
    sj["singular_locus"] = sing_class_name(segre->sing_class);
  }
  if (!sj.empty()) j["segre"] = sj;
  if (cross_check_agrees) j["flex_cross_check_agrees"] = *cross_check_agrees;
  json fields;
  for (int d : degrees) {
    const FieldCtx& K = tower->field(d);
    fields[std::to_string(d)] = K.modulus;
  }
  j["fields"] = fields;
  if (opts.timings) j["timing"] = {{"seconds", seconds}};
  return j;
}

}  // namespace qline
