#pragma once

#include <json.hpp>
#include <string>

#include "polybn/polygon.hpp"

namespace polybn {

// Parses whitespace-separated "x,y" vertex pairs ("0,0 5,0 0,5") and
// returns the convex hull of the points (order and redundancy do not
// matter).  Throws parse_error with a 1-based character position on
// malformed input or empty input, range_error when a coordinate
// exceeds kCoordLimit in magnitude.
Polygon parse_polygon_text(const std::string& text);

// Same, for a JSON array of [x, y] integer pairs.
Polygon parse_polygon_json(const std::string& text);

// Dispatches on the first non-space character: '[' means JSON,
// anything else the text format.
Polygon parse_polygon(const std::string& text);

// Vertices as a JSON array of [x, y] pairs, in canonical hull order.
nlohmann::ordered_json vertices_json(const Polygon& p);

// Vertices in the text format, e.g. "0,0 5,0 0,5".
std::string polygon_text(const Polygon& p);

}  // namespace polybn
