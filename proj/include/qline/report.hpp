#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qline/flexline.hpp"
#include "qline/pencil.hpp"

namespace qline {

using json = nlohmann::ordered_json;

struct AnalyzeOptions {
  bool timings = false;
  int cross_check_samples = 5;
};

/// Full analysis of one (quartic, line) pair. Every geometric datum is
/// reported in the caller's original coordinates.
struct AnalysisReport {
  std::string input_quartic;
  std::string input_line;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;

  SmoothnessReport smooth;
  std::optional<bool> second_kind;
  std::optional<RamificationProfile> ramification;
  std::optional<FiberTable> fibers;
  std::optional<LinesMeeting> lines;
  std::optional<FlexSurface> flex;
  std::optional<IrreducibilityCert> residual_cert;
  std::optional<MPoly> flex_residual;
  std::optional<bool> detect;
  std::optional<SegreDecomposition> segre;
  std::optional<bool> cross_check_agrees;

  // original-coordinates mapping used for the report
  FqMat to_original;
  const Tower* tower = nullptr;

  json to_json(const AnalyzeOptions& opts, double seconds = 0.0) const;
};

/// normalize -> smoothness -> ramification -> fibers -> lines -> second kind
/// -> flex surface -> detect -> recover; degrades to a partial report on
/// singular inputs instead of failing.
AnalysisReport analyze(const Tower& tw, const MPoly& f, const MPoly& l1,
                       const MPoly& l2, const AnalyzeOptions& opts = {});
AnalysisReport analyze(const Tower& tw, const QuarticWithLine& X,
                       const AnalyzeOptions& opts = {});

}  // namespace qline
