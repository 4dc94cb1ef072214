#pragma once

#include <json.hpp>

#include "polybn/classify.hpp"

namespace polybn {

// JSON view of a polygon class: vertices, dimension and the three
// headline invariants.
nlohmann::ordered_json class_json(const PolygonClass& c);

// JSON view of a verdict: the class plus genus, admissibility and the
// reason tag.
nlohmann::ordered_json verdict_json(const Verdict& v);

// The whole classification in one machine-readable document:
//   schema            format version (1)
//   admissible        the 11 admissible interior-polygon classes
//   admissible_count  11, with a degenerate/two-dimensional breakdown
//   excluded          the remaining realizable classes with <= 6 points
//   midrange          per-genus summaries for 7 <= g <= 12
//   genus10           the exceptional ten-point class spelled out
//   crossover         where the generic gonality outgrows the width bound
//   crossover_genus   12, the last genus where the bound still covers it
// The document is fully determined by the library (stable across runs).
// max_genus (1..6) restricts the admissible/excluded sections; the
// midrange and crossover sections do not depend on it.
nlohmann::ordered_json full_report(unsigned threads = 0, Int max_genus = 6);

}  // namespace polybn
