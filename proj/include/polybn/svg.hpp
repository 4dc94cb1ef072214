#pragma once

#include <string>

#include "polybn/classify.hpp"

namespace polybn {

// One SVG sheet drawing every classified polygon on a lattice grid:
// the 11 admissible interior polygons, the doubled standard simplex
// (plane-quintic rule) and the exceptional ten-point class (genus-10
// Clifford rule), each with a caption.  Output is deterministic.
// max_genus (1..6) restricts the small-genus cells as in full_report;
// the exceptional ten-point cell is always drawn.
std::string render_classification_sheet(unsigned threads = 0, Int max_genus = 6);

}  // namespace polybn
