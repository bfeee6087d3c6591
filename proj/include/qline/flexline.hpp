#pragma once

#include <optional>

#include "qline/pencil.hpp"

namespace qline {

enum class ComponentRole { tangent_plane, residual };

/// One irreducible-over-F_p component of the flex divisor. Tangent-plane
/// components carry the geometric planes (over extensions when the
/// ramification points are conjugate); their product is the F_p polynomial.
struct FlexComponent {
  MPoly poly;  // over F_p, original (normalized-surface) coordinates
  int multiplicity = 1;
  ComponentRole role = ComponentRole::residual;
  int degree = 0;
  std::vector<MPoly> planes;  // geometric pencil planes, for plane components
};

struct FlexSurface {
  int raw_degree = 0;       // eliminant degree before stripping (11 generically)
  int stripped_power = 0;   // order of the auxiliary coordinate plane removed
  MPoly divisor;            // stripped eliminant, multiplicities intact
  MPoly reduced;            // product of the distinct components
  int reduced_degree = 0;
  std::vector<FlexComponent> components;
  bool symmetric_divisor_match = false;  // x4-side eliminant proportional
};

struct SegreDecomposition {
  enum class SingClass { line_of_triple_points, twisted_cubic };
  Fq lambda;
  MPoly s4;                   // over F_p, lex-leading coefficient 1
  std::vector<MPoly> planes;  // four pencil planes, possibly over extensions
  SingClass sing_class = SingClass::twisted_cubic;
};

const char* sing_class_name(SegreDecomposition::SingClass c);

/// The Hessian test: the 4x4 Hessian determinant of f restricted to the line
/// is the zero binary form.
bool is_second_kind(const QuarticWithLine& X);

/// Samples n smooth fibers and checks that every intersection point of the
/// line with the fiber is an inflection point; returns whether the sampled
/// verdict agrees with is_second_kind. errc::too_few_smooth_fibers when the
/// base field cannot supply n samples.
bool flex_cross_check(const QuarticWithLine& X, int samples);

/// Flex divisor by resultant elimination: the degree-11 eliminant of the two
/// bihomogeneous forms attached to the pencil, computed after a seeded
/// genericity change of the pencil coordinates (applied and inverted
/// transparently), with the auxiliary coordinate plane stripped to its exact
/// order, cross-checked against the symmetric construction, and factored into
/// pencil-plane components plus a residual part.
FlexSurface flex_surface(const QuarticWithLine& X);

/// Tangent planes at the ramification points, in profile order.
std::vector<MPoly> tangent_planes_at_ramification(const QuarticWithLine& X,
                                                  const RamificationProfile& prof);

/// Divide the reduced flex surface by the tangent planes at supp(R);
/// conjugate planes are removed through their F_p-irreducible product.
/// errc::plane_not_component when a tangent plane does not divide.
MPoly strip_tangent_planes(const FlexSurface& S, const RamificationProfile& prof,
                           const QuarticWithLine& X);

enum class IrreducibilityCert { linear_free, eisenstein_irreducible, unverified };
const char* irreducibility_cert_name(IrreducibilityCert c);

/// Certifies as much as elementary tools allow: absence of plane components
/// through the line (exhausting pencil planes), and irreducibility via the
/// substitution-plus-Eisenstein route when the shape matches.
IrreducibilityCert residual_irreducibility(const QuarticWithLine& X,
                                           const MPoly& residual);

/// S + L1 L2 L3 L4 for a ruled quartic S with directrix V(x3, x4) and four
/// pairwise-distinct pencil planes (coefficients possibly in extensions, with
/// an F_p product). The result is verified to carry the line as a line of
/// the second kind.
QuarticWithLine segre_compose(const Tower& tw, const MPoly& S,
                              const std::vector<MPoly>& planes);

/// Parameters of fibers meeting the line in exactly one point: images of the
/// multiplicity-2 ramification points.
std::vector<PencilPoint> triple_contact_fibers(const QuarticWithLine& X);

/// True iff every triple-contact fiber has Kodaira type IV.
bool segre_detect(const QuarticWithLine& X);
bool segre_detect(const QuarticWithLine& X, const FiberTable& table);

/// Decomposition f = lambda * S4 + L1 L2 L3 L4, recovered from the flex
/// surface and the fiber table, verified exactly before returning.
SegreDecomposition segre_recover(const QuarticWithLine& X);
SegreDecomposition segre_recover(const QuarticWithLine& X, const FiberTable& table);

}  // namespace qline
