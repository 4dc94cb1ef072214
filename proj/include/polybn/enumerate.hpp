#pragma once

#include <vector>

#include "polybn/polygon.hpp"

namespace polybn {

// An equivalence class of lattice polygons under affine unimodular
// maps, carried by its normal-form representative with cached counts.
struct PolygonClass {
  Polygon representative;  // representative == normal_form(representative)
  Int n_points = 0;        // total lattice points
  Int n_interior = 0;      // interior lattice points
  Int lw = 0;              // lattice width

  friend bool operator==(const PolygonClass&, const PolygonClass&) = default;
};

// Recomputes the cached fields for an already-normalized representative.
PolygonClass make_polygon_class(Polygon normalized);

// Every equivalence class with exactly n lattice points, including the
// point and segment classes, sorted deterministically. Supported for
// 1 <= n <= 15 (range_error below, resource_limit_error above: larger
// n would need interior counts beyond the supported recursion).
// threads = 0 means the default worker count.
std::vector<PolygonClass> enumerate_by_lattice_points(Int n, unsigned threads = 0);

// Every class of two-dimensional polygons with exactly g interior
// lattice points, 1 <= g <= 12 (range_error otherwise), sorted
// deterministically and independent of the thread count.
std::vector<PolygonClass> enumerate_by_interior_points(Int g, unsigned threads = 0);

// Deduplicated classes of interior_polygon(D) over all classes D with
// g interior points; the candidate interior shapes at genus g.
std::vector<PolygonClass> interior_classes(Int g, unsigned threads = 0);

// Deterministic output order used by all three enumerations:
// (n_points, n_interior, lw, vertex key).
bool class_order(const PolygonClass& a, const PolygonClass& b);

}  // namespace polybn
