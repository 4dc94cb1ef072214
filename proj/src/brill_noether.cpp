#include "polybn/brill_noether.hpp"

#include <stdexcept>

namespace polybn {

Int rho(const DivisorHypothesis& h) { return h.g - (h.r + 1) * (h.g - h.d + h.r); }

Int min_degree_nonneg_rho(Int g, Int r) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (r < 1) throw std::invalid_argument("rank must be positive");
  // rho >= 0  <=>  g - d + r <= floor(g/(r+1))  <=>  d >= g + r - floor(g/(r+1))
  return g + r - g / (r + 1);
}

DivisorHypothesis serre_dual(const DivisorHypothesis& h) {
  return {h.g, 2 * h.g - 2 - h.d, h.r - h.d + h.g - 1};
}

DivisorHypothesis reduce_to_low_rank(const DivisorHypothesis& h) {
  if (rho(h) >= 0) throw std::invalid_argument("reduce_to_low_rank requires rho < 0");
  if (h.r < 1) throw std::invalid_argument("reduce_to_low_rank requires rank >= 1");
  if (h.g > 6) throw std::invalid_argument("reduce_to_low_rank is stated for genus <= 6");
  const Int target = h.g <= 4 ? 1 : 2;
  DivisorHypothesis cur = h;
  while (cur.r > target) {
    DivisorHypothesis minus_point{cur.g, cur.d - 1, cur.r - 1};
    // Subtracting a generic point keeps rho negative whenever the
    // degree is small; otherwise pass to the complement first, which
    // lands at degree <= g - 2 and strictly smaller rank.
    if (cur.d <= cur.g && rho(minus_point) < 0)
      cur = minus_point;
    else
      cur = serre_dual(cur);
  }
  return cur;
}

Int gonality_bound_theorem(Int g) {
  if (g < 3) throw range_error("gonality_bound_theorem requires genus >= 3");
  return 2 + isqrt((8 * g - 20) / 3);
}

PlaneCurveData plane_curve_profile(Int d) {
  if (d < 1) throw range_error("plane_curve_profile requires degree >= 1");
  return {(d - 1) * (d - 2) / 2, d - 1};
}

Int gonality_cap_from_width(const Polygon& p) {
  if (p.dim() < 2)
    throw degenerate_error("gonality cap requires a two-dimensional Newton polygon");
  return p.lattice_width();
}

Int width_from_interior(const Polygon& p) {
  if (p.dim() < 2)
    throw degenerate_error("width_from_interior requires a two-dimensional polygon");
  Int inner = p.interior_polygon().lattice_width();  // -1 when the interior is empty
  return inner + (p.standard_simplex_multiple() >= 2 ? 3 : 2);
}

CurveProfile profile(const Polygon& p) {
  if (p.dim() < 2) throw degenerate_error("profile requires a two-dimensional polygon");
  CurveProfile out;
  out.polygon = p;
  out.genus_if_smooth = p.count_interior_lattice_points();
  out.lw_delta = p.lattice_width_certificate();
  out.lw_interior = p.interior_polygon().lattice_width_certificate();
  out.gonality_cap = out.lw_delta.width;
  Int d = p.standard_simplex_multiple();
  if (d >= 1) out.simplex_d = d;
  return out;
}

}  // namespace polybn
