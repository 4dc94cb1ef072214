#pragma once

#include <optional>

#include "polybn/polygon.hpp"

namespace polybn {

// Outcome of moving every supporting edge line of a polygon outward by
// lattice distance one. `integral` reports whether every vertex of the
// moved-out region is a lattice point; in that case `relaxed` holds the
// region (for a two-dimensional input) or an explicitly searched
// witness polygon whose interior hull equals the input (for points and
// segments).
struct RelaxationResult {
  bool integral = false;
  std::optional<Polygon> relaxed;
};

// For two-dimensional P: relaxes every edge constraint n.x <= c to
// n.x <= c+1 (n the primitive outer normal) and intersects. For a point
// or segment, where there are no edges to move, performs the bounded
// witness search described at realizable_as_interior. Throws
// empty_polygon_error on the empty polygon.
RelaxationResult relaxation(const Polygon& p);

// True iff some two-dimensional polygon D has interior_polygon(D)
// equivalent to P. Decided by integrality of the relaxation for
// two-dimensional P, and by an exhaustive witness search over a small
// box (sized to the input, 3 rows tall) for points and segments.
// Throws empty_polygon_error on the empty polygon.
bool realizable_as_interior(const Polygon& p);

}  // namespace polybn
