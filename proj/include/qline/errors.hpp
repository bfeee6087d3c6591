#pragma once

#include <stdexcept>
#include <string>

namespace qline {

enum class errc {
  bad_characteristic,
  division_by_zero,
  no_embedding,
  ctx_mismatch,
  singular_matrix,
  zero_input,
  degree_vs_characteristic,
  line_not_on_surface,
  degenerate_line,
  identically_zero,
  wronskian_zero,
  unexpected_pattern,
  singular_surface,
  not_cubic,
  plane_not_component,
  plane_misses_line,
  coincident_planes,
  ruled_singular_on_line,
  not_decomposable,
  residual_not_quartic,
  identity_failed,
  not_second_kind,
  too_few_smooth_fibers,
  c_zero,
  parse_error,
  elimination_degenerate,
  not_quartic,
  internal,
};

const char* errc_name(errc c);

/// All library failures are reported through this exception; `code()` is the
/// machine-readable reason, what() carries context.
class error : public std::runtime_error {
 public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace qline
