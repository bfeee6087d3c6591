#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qline/cubic.hpp"
#include "qline/linalg.hpp"
#include "qline/mpoly.hpp"

namespace qline {

const std::vector<std::string>& quartic_vars();  // x1, x2, x3, x4
const std::vector<std::string>& plane_vars();    // x1, x2, u
const std::vector<std::string>& pencil_vars();   // s, t

/// A quartic surface normalized so the marked line is V(x3, x4), together
/// with the alpha table of f = sum alpha_{i,j} x3^i x4^j and the coordinate
/// change back to the caller's frame.
struct QuarticWithLine {
  const Tower* tower = nullptr;
  MPoly f;  // homogeneous quartic over F_p in x1..x4, contained in (x3, x4)
  std::map<std::pair<int, int>, MPoly> alpha;  // nonzero entries only
  bool smooth_along_line = false;
  FqMat to_original;  // normalized point -> original point
  std::string provenance;

  MPoly a(int i, int j) const;  // alpha_{i,j}, zero polynomial if absent
};

/// Pencil parameter (s : t), normalized to t = 1 or exactly (1 : 0). Both
/// entries share one context; field_degree is its extension degree.
struct PencilPoint {
  Fq s, t;
  int field_degree = 1;
  bool operator==(const PencilPoint& o) const;
  bool operator<(const PencilPoint& o) const;
};

PencilPoint make_pencil_point(const Fq& s, const Fq& t);

/// One singular fiber: parameter, v(Delta), Kodaira type, its line
/// components both inside the plane and as pairs of linear forms in P^3,
/// singular points (in P^3, normalized coordinates), and the contact
/// partition of l with the fiber (3, 2+1 or 1+1+1).
struct FiberRecord {
  PencilPoint param;
  int v_delta = 0;
  Kodaira kodaira = Kodaira::smooth;
  std::vector<MPoly> components_plane;
  std::vector<std::pair<MPoly, MPoly>> components_p3;
  std::vector<std::vector<Fq>> singular_points_p3;
  std::vector<int> contact;  // descending partition of 3
};

enum class RamType { r1111, r211, r22 };
const char* ram_type_name(RamType t);

/// Divisor of the Wronskian of (alpha_{1,0}, alpha_{0,1}) on the line:
/// points (x1 : x2) with multiplicities, plus the type tag.
struct RamificationProfile {
  struct Point {
    Fq x1, x2;  // normalized: x2 = 1 or exactly (1 : 0)
    int field_degree = 1;
    int multiplicity = 1;
  };
  std::vector<Point> points;
  RamType type = RamType::r1111;
};

struct SmoothnessReport {
  bool smooth = false;
  std::optional<std::vector<Fq>> witness;  // P^3 point, normalized coordinates
  std::string reason;
};

struct LineGroup {
  PencilPoint param;
  Kodaira kodaira = Kodaira::smooth;
  std::vector<std::pair<MPoly, MPoly>> lines;
};

struct LinesMeeting {
  int count = 0;
  std::vector<LineGroup> groups;
};

/// Move the line spanned by the given two independent forms to V(x3, x4).
/// errc::degenerate_line if the forms are dependent; errc::line_not_on_surface
/// if f does not vanish on the line.
QuarticWithLine normalize_line(const Tower& tw, const MPoly& f, const MPoly& l1,
                               const MPoly& l2);
/// f already contained in (x3, x4); identity coordinate change.
QuarticWithLine from_normalized(const Tower& tw, const MPoly& f);

/// Residual cubic of the plane V(t x3 - s x4), in the ring (x1, x2, u) over
/// the parameter's field: f(x1, x2, s u, t u) / u.
MPoly fiber_cubic(const QuarticWithLine& X, const Fq& s, const Fq& t);
/// Same with symbolic (s, t): ring (x1, x2, u, s, t) over F_p.
MPoly generic_fiber_cubic(const QuarticWithLine& X);
/// Restriction of the fiber cubic to the line: s alpha_{1,0} + t alpha_{0,1},
/// a binary cubic in (x1, x2) over the parameter's field.
MPoly binary_cubic_at(const QuarticWithLine& X, const Fq& s, const Fq& t);

/// Degree-24 binary form in (s, t) vanishing exactly at singular fibers,
/// up to a universal scalar. errc::identically_zero when every fiber is
/// singular.
MPoly pencil_discriminant(const QuarticWithLine& X);

struct FiberTable {
  MPoly delta;  // ring (s, t)
  std::vector<FiberRecord> fibers;
};

/// One record per root of Delta, deterministically ordered by
/// (field degree, normalized parameter).
FiberTable singular_fiber_table(const QuarticWithLine& X);

RamificationProfile ramification_profile(const QuarticWithLine& X);

/// Fiberwise smoothness decision; complete for quartics containing a line
/// since every singular point of X off the line is a singular point of its
/// plane section, and singular points on the line are exactly the common
/// roots of alpha_{1,0}, alpha_{0,1}.
SmoothnessReport is_smooth(const QuarticWithLine& X);
SmoothnessReport is_smooth(const QuarticWithLine& X, const FiberTable& table);

/// Lines on X meeting the marked line, grouped by fiber.
/// errc::singular_surface when X is singular.
LinesMeeting lines_meeting_line(const QuarticWithLine& X);
LinesMeeting lines_meeting_line(const QuarticWithLine& X, const FiberTable& table);

/// Projective roots (with multiplicity) of a nonzero homogeneous form in a
/// 2-variable ring; normalized representatives, minimal fields.
struct BinRoot {
  Fq a, b;  // the root (a : b), b = 1 or exactly (1 : 0)
  int field_degree = 1;
  int multiplicity = 1;
};
std::vector<BinRoot> binary_form_roots(const Tower& tw, const MPoly& form,
                                       std::uint64_t salt);

/// Image of the line point (x1 : x2) under the restriction of the fibration
/// to the line: (s : t) = (-alpha_{0,1} : alpha_{1,0}) evaluated there.
PencilPoint line_point_image(const QuarticWithLine& X, const Fq& x1, const Fq& x2);

/// Images of plane-internal data in P^3: a line in the plane of parameter
/// (s : t) as a pair of linear forms, and a plane point as coordinates.
std::pair<MPoly, MPoly> plane_line_to_p3(const Tower& tw, const Fq& s, const Fq& t,
                                         const MPoly& plane_form);
std::vector<Fq> plane_point_to_p3(const Tower& tw, const Fq& s, const Fq& t,
                                  const std::vector<Fq>& pt);

}  // namespace qline
