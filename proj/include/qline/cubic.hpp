#pragma once

#include <cstdint>
#include <vector>

#include "qline/linalg.hpp"
#include "qline/mpoly.hpp"

namespace qline {

enum class Kodaira { smooth, I1, I2, I3, II, III, IV, nonreduced };

const char* kodaira_name(Kodaira k);
/// Vanishing order of the pencil discriminant: I1:1, I2:2, I3:3, II:2,
/// III:3, IV:4. 0 for smooth, -1 for nonreduced.
int kodaira_vdelta(Kodaira k);
/// Number of line components: I3, IV: 3; I2, III: 1; others: 0.
int kodaira_line_count(Kodaira k);

/// Discriminant of a form of degree 3 in the three variables v0, v1, v2,
/// up to a universal nonzero constant (p > 3). Remaining ring variables act
/// as coefficients. Computed as the 6x6 determinant of the three partials of
/// C together with the three partials of its Hessian, written in the quadric
/// monomial basis; vanishes exactly on singular cubics.
MPoly cubic_discriminant(const MPoly& C, int v0, int v1, int v2);

/// One plane cubic sorted out: Kodaira picture, singular points and line
/// components. Points and forms may live over extensions of the input field.
struct PlaneCubicClass {
  Kodaira type = Kodaira::smooth;
  std::vector<std::vector<Fq>> singular_points;  // normalized P^2 triples
  std::vector<MPoly> lines;  // linear forms in the cubic's ring
};

/// Classification by direct singular-point analysis: no singular point is
/// smooth; one point is sorted by the rank of the quadratic lowest term and
/// a tangent-division test (I1 / II / III / IV); two points give I2, three
/// give I3. A repeated component yields `nonreduced`.
/// errc::not_cubic unless C is homogeneous of degree 3 in its 3-variable ring.
PlaneCubicClass classify_plane_cubic(const MPoly& C, const Tower& tw,
                                     std::uint64_t salt);

/// Linear factors (with multiplicity) of a ternary quadric, over the field or
/// a quadratic extension; empty when the quadric is irreducible (rank 3).
std::vector<std::pair<MPoly, int>> quadric_linear_factors(const MPoly& q,
                                                          const Tower& tw);

/// Scale a projective coordinate vector so its last nonzero entry is 1.
std::vector<Fq> normalize_proj(std::vector<Fq> v);
/// Scale a linear form so its first nonzero coefficient is 1.
MPoly normalize_form(const MPoly& f);

}  // namespace qline
