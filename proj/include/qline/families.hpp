#pragma once

#include <optional>

#include "qline/pencil.hpp"

namespace qline {

/// Parameters of the ramification-type 2,1^2 model family: scalars a, b, c
/// (c != 0) and a binary quartic g in (x3, x4).
struct TParams {
  Fq a, b, c;
  MPoly g;  // quartic ring, variables x3 and x4 only, homogeneous of degree 4
};

/// Parameters of the ramification-type 2^2 model family: binary forms q
/// (degree 2) and g (degree 4) in (x3, x4).
struct ZParams {
  MPoly q, g;
};

/// errc::c_zero when c = 0 (the ramification type would change to 2^2).
QuarticWithLine make_T(const Tower& tw, const TParams& par);

QuarticWithLine make_Z(const Tower& tw, const ZParams& par);

/// The explicit smooth member with q = 3(2 x3^2 - x3 x4 + x4^2) and
/// g = 4(20 x3^4 + 5 x4^4 - 18 x3^3 x4 - 4 x3^2 x4^2 - 9 x3 x4^3)/3.
/// errc::bad_characteristic for p in {2, 3, 5, 7}.
QuarticWithLine make_Z_paper_instance(const Tower& tw);

/// Ruled quartic x3 x1^3 + x4 x2^3 + g x1 x2 x3 x4 - g^3 x3^2 x4^2 / 27.
MPoly make_S4_gamma(const Tower& tw, const Fq& gamma);

struct SearchResult {
  std::optional<QuarticWithLine> found;
  int candidates_tried = 0;
};

/// Randomized search for a smooth quartic with a second-kind line of
/// ramification type 1^4: ruled quartics are generated from a line
/// correspondence between the marked line and a random twisted cubic
/// (implicitized by linear elimination through sampled ruling points),
/// composed with four random pencil planes, then filtered by ramification
/// type and smoothness. NotFound is the empty optional.
SearchResult search_type_1111(const Tower& tw, int budget);

}  // namespace qline
