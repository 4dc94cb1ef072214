#pragma once

#include <optional>

#include "polybn/polygon.hpp"

namespace polybn {

// A divisor hypothesis (g, d, r): genus, degree and rank of a putative
// divisor class. Only the arithmetic of these triples is ever needed;
// no divisor on an actual curve is represented.
struct DivisorHypothesis {
  Int g = 0;
  Int d = 0;
  Int r = 0;

  friend constexpr auto operator<=>(const DivisorHypothesis&, const DivisorHypothesis&) = default;
};

// Brill-Noether number rho = g - (r+1)(g-d+r).
Int rho(const DivisorHypothesis& h);

// Smallest degree d with rho(g,d,r) >= 0, via the closed form
// g + r - floor(g/(r+1)). Requires g >= 0 and r >= 1.
Int min_degree_nonneg_rho(Int g, Int r);

// (g, d, r) -> (g, 2g-2-d, r-d+g-1): replaces the divisor by its
// Serre/Riemann-Roch complement K - D. Involution; preserves rho.
DivisorHypothesis serre_dual(const DivisorHypothesis& h);

// Given a triple with rho < 0, 1 <= r and g <= 6, produce a triple that
// still has rho < 0 but rank 1 (g <= 4) or rank at most 2 (g = 5, 6),
// by repeatedly either passing to the complement or subtracting a
// generic point (d-1, r-1). Throws std::invalid_argument when the
// preconditions fail (in particular when rho(h) >= 0).
DivisorHypothesis reduce_to_low_rank(const DivisorHypothesis& h);

// Largest integer G with 3(G-2)^2 <= 8g - 20, i.e. the floor of
// sqrt((8/3)(g - 5/2)) + 2, evaluated with pure integer arithmetic.
// Requires g >= 3.
Int gonality_bound_theorem(Int g);

// Genus and gonality of a smooth plane curve of degree d >= 1:
// ((d-1)(d-2)/2, d-1).
struct PlaneCurveData {
  Int genus = 0;
  Int gonality = 0;

  friend constexpr auto operator<=>(const PlaneCurveData&, const PlaneCurveData&) = default;
};
PlaneCurveData plane_curve_profile(Int d);

// Upper bound on the gonality of a smooth curve with Newton polygon P:
// the lattice width of P. Requires P two-dimensional.
Int gonality_cap_from_width(const Polygon& p);

// Lattice width of P recomputed from its interior polygon:
// lw(interior) + 2, or + 3 when P is a d-fold standard simplex with
// d >= 2 (d = 1 already satisfies the +2 form under the lw(empty) = -1
// convention). Always equals lattice_width(P). Requires P
// two-dimensional.
Int width_from_interior(const Polygon& p);

// Aggregated per-polygon curve data.
struct CurveProfile {
  Polygon polygon;
  Int genus_if_smooth = 0;                // number of interior lattice points
  WidthCertificate lw_delta;              // lattice width of the polygon
  WidthCertificate lw_interior;           // lattice width of the interior polygon
  Int gonality_cap = 0;                   // = lw_delta.width
  std::optional<Int> simplex_d;           // present when the polygon is d * simplex
};

// Requires P two-dimensional; throws degenerate_error otherwise.
CurveProfile profile(const Polygon& p);

}  // namespace polybn
