#pragma once

#include <optional>
#include <vector>

#include "polybn/core.hpp"

namespace polybn {

// The lattice width of a polygon together with every direction that
// realizes it inside the canonical search box. Directions are primitive
// with canonical sign and sorted; `width` is -1 for the empty set.
struct WidthCertificate {
  Int width = -1;
  std::vector<PrimitiveVector> realizers;

  // The canonical witnessing direction (smallest realizer); nullopt for
  // the empty polygon.
  std::optional<PrimitiveVector> direction() const {
    if (realizers.empty()) return std::nullopt;
    return realizers.front();
  }
};

// A (possibly degenerate) convex lattice polygon, stored in canonical
// hull form: vertices counter-clockwise, strictly convex (no three
// collinear), starting at the lexicographically smallest vertex.
// Dimension -1 (empty), 0 (point) and 1 (segment) are allowed; the
// segment stores its two endpoints, smaller one first.
class Polygon {
 public:
  Polygon() = default;

  // Convex hull of an arbitrary point set (duplicates and interior
  // points welcome). The empty set yields the empty polygon.
  static Polygon hull(std::vector<LatticePoint> points);

  // Wraps a list that is already in canonical hull form; throws
  // std::invalid_argument if it is not. Cheaper than hull() when the
  // caller guarantees the shape, and a correctness check when not.
  static Polygon from_canonical(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }

  // -1 for the empty polygon, 0 for a point, 1 for a segment, 2 else.
  int dim() const;

  bool contains(LatticePoint p) const;
  bool strictly_contains(LatticePoint p) const;  // interior in R^2; false when dim < 2

  // Twice the Euclidean area (exact; 0 when dim < 2).
  Int area_twice() const;

  // Number of lattice points on the boundary (all points when dim < 2).
  Int boundary_lattice_point_count() const;

  // Counts computed without materializing the point set.
  Int count_lattice_points() const;
  Int count_interior_lattice_points() const;

  // Twice the area via Pick's theorem, E + 2I - 2, with E and I found
  // by row scanning (independent of the shoelace sum, so the agreement
  // with area_twice() is a real cross-check). Throws degenerate_error
  // when dim() < 2.
  Int pick_area_twice() const;

  // All lattice points, sorted lexicographically.
  std::vector<LatticePoint> lattice_points() const;
  std::vector<LatticePoint> interior_lattice_points() const;

  // Convex hull of the interior lattice points (empty when dim < 2).
  Polygon interior_polygon() const;

  // max - min of the dot product with `direction` over the polygon.
  // Throws empty_polygon_error on the empty polygon.
  Int width_along(PrimitiveVector direction) const;

  // Minimum of width_along over all directions, with every realizing
  // direction found in the search box |a| <= height, |b| <= width.
  WidthCertificate lattice_width_certificate() const;
  Int lattice_width() const { return lattice_width_certificate().width; }

  Polygon apply(const AffineUnimodularMap& map) const;
  Polygon translated(Int dx, Int dy) const;

  // d >= 1 if this polygon is the d-th dilation of the standard
  // triangle conv{(0,0),(1,0),(0,1)} up to affine unimodular
  // equivalence, otherwise -1.
  Int standard_simplex_multiple() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;
  friend auto operator<=>(const Polygon&, const Polygon&) = default;

 private:
  // Inclusive x-range of the (possibly shrunk-by-one) polygon at height
  // y, or nullopt when the slice has no lattice point.
  std::optional<std::pair<Int, Int>> row_range(Int y, bool interior) const;

  std::vector<LatticePoint> verts_;
};

// Convenience: hull of a brace-enclosed list.
Polygon make_polygon(std::initializer_list<LatticePoint> points);

}  // namespace polybn
