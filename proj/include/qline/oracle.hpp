#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qline/pencil.hpp"

namespace qline {

/// Canonical key of an F_q-rational line meeting V(x3, x4): the pencil plane
/// parameter (s : t) and the dual coordinates (a : b : c) of the line inside
/// that plane, all as element indices of F_q (index = sum of residues times
/// powers of p).
struct LineKey {
  std::array<std::uint32_t, 5> v{};
  bool operator<(const LineKey& o) const { return v < o.v; }
  bool operator==(const LineKey& o) const { return v == o.v; }
};

/// Exhaustive census of the F_q-rational lines on X meeting the marked line,
/// q = p^L. Independent of the pencil machinery: for each rational point P
/// of the line, candidate directions are cut out by the first and second
/// polar conditions (tangent plane and polar conic, enumerated point by
/// point over F_q), and every candidate is verified by direct evaluation of
/// f on five points of the candidate line. Requires X smooth at the points
/// of the marked line and q small enough for lookup tables.
std::vector<LineKey> brute_force_lines_meeting(const QuarticWithLine& X, int L);

/// The same keys derived from a fiber table: every line component that is
/// F_q-rational (all its data descends to subfields of F_{p^L}) contributes
/// one key; the rest are skipped.
std::vector<LineKey> rational_lines_from_table(const QuarticWithLine& X,
                                               const FiberTable& table, int L);

}  // namespace qline
