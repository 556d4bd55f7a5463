#pragma once

#include "treehom/lattice.hpp"
#include "treehom/tree.hpp"

namespace treehom {

// Partially specified height function: values on a support subset of the
// region.
struct PartialHeight {
  Region domain;
  std::vector<int> support;        // cell indices into domain
  std::vector<TreeVertex> values;  // aligned with support
};

// Vertex t steps from v along the geodesic ray toward omega.
TreeVertex ray_point(const TreeVertex& v, const TreeEnd& omega, int t);

// Fastest homomorphism pinned at cell x with value w, heading toward omega:
// h(y) = the vertex at distance d_Lambda(x, y) from w along the ray to omega.
HeightFunction maximal_homomorphism(int x, const TreeVertex& w,
                                    const TreeEnd& omega, const Region& lambda);

// d_T(h(x), h(y)) <= d_Lambda(x, y) for all support pairs, with parity
// conservation (the two sides agree mod 2).
bool check_extension_condition(const PartialHeight& p);

// The argmax extension: pointwise the candidate of maximal busemann depth
// toward omega; equivalently the pointwise depth-minimal extension. Throws
// ConditionViolated when check_extension_condition fails.
HeightFunction kirszbraun_extend(const PartialHeight& p, const TreeEnd& omega);
HeightFunction kirszbraun_extend(const PartialHeight& p);  // omega = backward end

// n-invariant configuration with the given slope supported on g, built by
// pinning the n-grid corners to g and extending inside one fundamental cell.
// Throws UnrealizableSlope when some numerator has the wrong parity.
PeriodicConfig periodic_from_slope(int d, const Slope& s, const Geodesic& g);
PeriodicConfig periodic_from_slope(int d, const Slope& s);

}  // namespace treehom
