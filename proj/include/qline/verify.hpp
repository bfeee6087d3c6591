#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qline {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string status;  // pass | fail | skip
  std::string detail;  // expected vs computed
  double seconds = 0.0;
};

struct VerifyResult {
  std::vector<CriterionResult> rows;
  bool all_pass = true;
};

/// Runs the whole desk-scale verification suite at the given prime and seed.
/// errc::bad_characteristic for p in {2, 3, 5, 7} or p <= 24.
VerifyResult verify_paper(std::uint64_t prime, std::uint64_t seed);

std::string format_verify_table(const VerifyResult& r);

}  // namespace qline
