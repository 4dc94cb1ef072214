#include "polybn/classify.hpp"

#include <stdexcept>

#include "polybn/brill_noether.hpp"
#include "polybn/core.hpp"
#include "polybn/normal_form.hpp"

namespace polybn {

std::string reason_tag(Reason reason) {
  switch (reason) {
    case Reason::kWidthExcluded:
      return "width-excluded";
    case Reason::kPlaneQuinticRule:
      return "plane-quintic-rule";
    case Reason::kGenus10Clifford:
      return "genus10-clifford-rule";
    case Reason::kLargegInequality:
      return "largeg-inequality";
    case Reason::kAdmissible:
      return "admissible";
  }
  throw std::logic_error("unknown reason tag");
}

std::vector<Verdict> classify_interior_polygons(Int max_points, unsigned threads) {
  if (max_points < 1 || max_points > 6)
    throw range_error("classify_interior_polygons supports 1..6 lattice points, got " +
                      std::to_string(max_points));
  std::vector<Verdict> verdicts;
  for (Int g = 1; g <= max_points; ++g) {
    const Int min_degree = min_degree_nonneg_rho(g, 1);
    for (const auto& c : interior_classes(g, threads)) {
      // Curves over this class have gonality at most lw + 2 in general;
      // a d-fold standard simplex also admits the (d+3)-fold simplex
      // above it, of width lw + 3.  The doubled simplex is special: it
      // passes the width test, but every curve over it is a plane
      // quintic, with a degree-5 rank-2 divisor of negative
      // Brill-Noether number.
      const Int d = c.representative.standard_simplex_multiple();
      const bool wide_enough = c.lw + 2 >= min_degree ||
                               (d >= 1 && c.lw + 3 >= min_degree);
      Verdict v{c, g, false, Reason::kWidthExcluded};
      if (!wide_enough) {
        v.reason = Reason::kWidthExcluded;
      } else if (d == 2) {
        // Plane quintics: degree d + 3 = 5, rank 2.
        if (rho({g, d + 3, 2}) >= 0)
          throw std::logic_error("plane-quintic rule invoked with nonnegative rho");
        v.reason = Reason::kPlaneQuinticRule;
      } else {
        v.admissible = true;
        v.reason = Reason::kAdmissible;
      }
      verdicts.push_back(std::move(v));
    }
  }
  return verdicts;
}

MidrangeSummary verify_midrange(Int g, unsigned threads) {
  if (g < 7 || g > 12)
    throw range_error("verify_midrange supports genus 7..12, got " + std::to_string(g));
  MidrangeSummary summary;
  summary.g = g;
  summary.half_threshold = (g + 1) / 2;
  for (const auto& c : enumerate_by_interior_points(g, threads))
    summary.max_lw_delta = std::max(summary.max_lw_delta, c.lw);
  summary.width_bound_holds = summary.max_lw_delta <= summary.half_threshold;

  const Int min_degree = min_degree_nonneg_rho(g, 1);
  // Two width routes.  Either every genus-g polygon is too narrow for
  // the generic gonality outright, or the interior polygon is narrow
  // enough that any polygon above it is (width lw + 2, or lw + 3 only
  // for the d-fold simplex whose curves have gonality d - 1 = lw + 2
  // anyway).
  const bool all_deltas_narrow = summary.max_lw_delta < min_degree;
  for (const auto& c : interior_classes(g, threads)) {
    Verdict v{c, g, false, Reason::kWidthExcluded};
    if (!all_deltas_narrow && c.lw + 2 >= min_degree) {
      // Only one class in the supported range reaches this point: the
      // exceptional ten-point class of width 4.  Its curves carry a
      // rank-3 divisor of degree at most g - 1, which is enough to
      // contradict Brill-Noether generality.
      if (g != 10 || rho({g, g - 1, 3}) >= 0)
        throw std::logic_error("midrange class escapes the width routes at genus " +
                               std::to_string(g));
      v.reason = Reason::kGenus10Clifford;
    }
    summary.verdicts.push_back(std::move(v));
  }
  return summary;
}

std::string analysis_verdict(const Polygon& p) {
  if (p.dim() != 2)
    throw degenerate_error("analysis needs a two-dimensional polygon");
  const Int g = p.count_interior_lattice_points();
  if (g == 0) return "genus 0; Brill-Noether conditions are vacuous";
  const Int min_degree = min_degree_nonneg_rho(g, 1);
  // The gonality cap is the lattice width, sharpened to d - 1 for the
  // d-fold standard simplex (projection of a degree-d plane curve).
  const Int d = p.standard_simplex_multiple();
  const Int cap = d >= 2 ? d - 1 : p.lattice_width();
  if (cap < min_degree)
    return "width-excluded: gonality is at most " + std::to_string(cap) +
           ", below the generic degree " + std::to_string(min_degree);
  const Polygon inner = p.interior_polygon();
  if (equivalent(inner, make_polygon({{0, 0}, {2, 0}, {0, 2}})))
    return "combinatorially admissible by width; excluded by plane-quintic rule";
  if (g == 10 && equivalent(inner, make_polygon({{0, 0}, {4, 2}, {2, 4}})))
    return "combinatorially admissible by width; excluded by genus-10 Clifford rule";
  return "combinatorially admissible by width";
}

std::vector<std::pair<Int, bool>> verify_largeg(Int g_max) {
  if (g_max < 13)
    throw range_error("verify_largeg requires g_max >= 13, got " + std::to_string(g_max));
  std::vector<std::pair<Int, bool>> rows;
  rows.reserve(static_cast<std::size_t>(g_max - 2));
  for (Int g = 3; g <= g_max; ++g)
    rows.emplace_back(g, min_degree_nonneg_rho(g, 1) <= gonality_bound_theorem(g));
  return rows;
}

}  // namespace polybn
