#pragma once

#include <vector>

#include "polybn/polygon.hpp"

namespace polybn {

// Deliberately naive reference implementations used to cross-validate
// the optimized routines. Everything here favors obviousness over
// speed; nothing here shares logic with the code it checks beyond the
// convex-hull and point-counting primitives.
namespace oracle {

// `count` pseudo-random full-dimensional hulls of point sets drawn from
// the box [0, box_size-1]^2, deterministic in `seed`.
std::vector<Polygon> random_hull_corpus(std::size_t count, unsigned seed, Int box_size = 20);

// Width by direct search over primitive directions with |a| <= scale*H
// and |b| <= scale*W (H, W the coordinate spreads), collecting every
// realizer. scale = 2 doubles the standard search box.
WidthCertificate brute_width_certificate(const Polygon& p, Int scale);

// All equivalence classes with exactly n lattice points, found by
// hulling every point subset of size <= max_subset of a box_size^2 box
// and deduplicating through normal_form. Exact for n <= 6 with the
// defaults. Returns canonical representatives, sorted by vertex key.
std::vector<Polygon> naive_classes_by_lattice_points(Int n, Int box_size = 6, int max_subset = -1);

// All equivalence classes with exactly one interior lattice point, by
// hulling every subset of size <= 8 of the 5x5 box [-2,2]^2 (8 is the
// vertex count maximum for convex polygons in a 5x5 grid). Sorted by
// vertex key.
std::vector<Polygon> naive_classes_interior_one();

// Is there a polygon D whose interior lattice points hull to exactly
// `p`? Decided by exhaustive shrink search over every sub-hull of the
// lattice points satisfying the elementary containment: any such D
// stays weakly inside each edge line of `p` pushed outward by one
// (a lattice point two levels out would force an extra interior point
// at the level between). The candidate points are gathered from the
// bounding box extended by `margin`, which must cover the pushed
// region; a too-small margin is reported as std::logic_error rather
// than silently under-searching. Requires p full-dimensional.
bool brute_force_realizable(const Polygon& p, Int margin = 12);

// Same question, searched from the hull of the full margin box with no
// pushed-region restriction. Only feasible for very small inputs; used
// to validate the containment argument underlying the faster search.
bool brute_force_realizable_box(const Polygon& p, Int margin);

}  // namespace oracle
}  // namespace polybn
