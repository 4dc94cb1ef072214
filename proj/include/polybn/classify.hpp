#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polybn/enumerate.hpp"

namespace polybn {

// Why a class of interior polygons is admissible or excluded.
//
// kWidthExcluded      every curve over this class has gonality below the
//                     generic value, by a lattice-width argument.
// kPlaneQuinticRule   the class of the doubled standard simplex: wide
//                     enough, but every curve over it is a plane quintic
//                     and carries a degree-5 rank-2 divisor with rho < 0.
// kGenus10Clifford    the exceptional ten-point class: wide enough, but
//                     curves over it carry a degree-<=9 rank-3 divisor
//                     with rho(10,9,3) < 0.
// kLargegInequality   genus beyond the crossover, where the generic
//                     gonality always exceeds the width-derived bound.
// kAdmissible         no width or named-rule obstruction.
enum class Reason {
  kWidthExcluded,
  kPlaneQuinticRule,
  kGenus10Clifford,
  kLargegInequality,
  kAdmissible,
};

// Stable hyphenated tag for a Reason ("width-excluded", "admissible", ...).
std::string reason_tag(Reason reason);

struct Verdict {
  PolygonClass polygon_class;
  Int genus = 0;
  bool admissible = false;
  Reason reason = Reason::kWidthExcluded;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Classifies every realizable interior-polygon class with at most
// max_points lattice points (genus = lattice point count of the interior
// polygon).  A class is admissible iff it passes the width test --
// lw + 2 >= min_degree_nonneg_rho(g, 1), or lw + 3 >= the same for
// multiples of the standard simplex -- and is not the doubled standard
// simplex, which is excluded by the plane-quintic rule.  Exactly the
// classes with reason kAdmissible have admissible = true.
// Throws range_error unless 1 <= max_points <= 6.
std::vector<Verdict> classify_interior_polygons(Int max_points = 6,
                                                unsigned threads = 0);

struct MidrangeSummary {
  Int g = 0;
  // Maximum lattice width over ALL polygons with g interior points.
  Int max_lw_delta = 0;
  // ceil(g/2); the generic gonality is half_threshold + 1.
  Int half_threshold = 0;
  // Whether max_lw_delta <= half_threshold.  True for g in 7..12 except
  // g = 10, where the width maximum is 6 (attained by the sixfold
  // standard simplex) against a threshold of 5.
  bool width_bound_holds = false;
  // One verdict per realizable interior-polygon class with g lattice
  // points; none is admissible.
  std::vector<Verdict> verdicts;
};

// Shows that no curve with g interior lattice points, 7 <= g <= 12, is
// Brill-Noether general.  For g != 10 a global width bound excludes every
// class; at g = 10 it excludes all but one class, which falls to the
// genus-10 Clifford rule instead.  Throws range_error outside 7..12.
MidrangeSummary verify_midrange(Int g, unsigned threads = 0);

// One-line assessment of a single polygon: whether its genus and width
// data already force a rank-1 divisor with negative Brill-Noether
// number, with the two named exclusions reported when the interior
// hull matches them.  Throws degenerate_error unless p is
// two-dimensional.
std::string analysis_verdict(const Polygon& p);

// For each genus 3 <= g <= g_max, whether the generic gonality
// min_degree_nonneg_rho(g, 1) is still covered by the width-derived
// bound gonality_bound_theorem(g).  The answer is computed, not assumed;
// it is true exactly for g in {3,...,10, 12} and false from 13 on (and,
// by a parity accident, already at 11).  Throws range_error if
// g_max < 13.
std::vector<std::pair<Int, bool>> verify_largeg(Int g_max);

}  // namespace polybn
