#include "polybn/polyio.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace polybn {

namespace {

Int checked_coordinate(long long value, std::size_t position) {
  if (value > kCoordLimit || value < -kCoordLimit)
    throw range_error("coordinate exceeds the limit at position " +
                      std::to_string(position));
  return static_cast<Int>(value);
}

// Parses a signed integer out of [first, last); returns the value and
// the number of characters consumed.
std::pair<long long, std::size_t> parse_int(const char* first, const char* last,
                                            std::size_t position) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw range_error("coordinate exceeds the limit at position " +
                      std::to_string(position));
  if (ec != std::errc() || ptr == first)
    throw parse_error("expected an integer", position);
  return {value, static_cast<std::size_t>(ptr - first)};
}

}  // namespace

Polygon parse_polygon_text(const std::string& text) {
  std::vector<LatticePoint> points;
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  while (pos < text.size()) {
    const std::size_t token_at = pos + 1;  // 1-based for messages
    auto [x, used_x] = parse_int(text.data() + pos, text.data() + text.size(), token_at);
    pos += used_x;
    if (pos >= text.size() || text[pos] != ',')
      throw parse_error("expected ',' between coordinates", pos + 1);
    ++pos;
    auto [y, used_y] = parse_int(text.data() + pos, text.data() + text.size(), pos + 1);
    pos += used_y;
    points.push_back({checked_coordinate(x, token_at), checked_coordinate(y, token_at)});
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected whitespace between vertices", pos + 1);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  if (points.empty()) throw parse_error("no vertices in polygon input", 1);
  return Polygon::hull(std::move(points));
}

Polygon parse_polygon_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array() || doc.empty())
    throw parse_error("expected a non-empty JSON array of [x,y] pairs", 1);
  std::vector<LatticePoint> points;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw parse_error("expected [x,y] integer pairs", 1);
    points.push_back({checked_coordinate(entry[0].get<long long>(), 1),
                      checked_coordinate(entry[1].get<long long>(), 1)});
  }
  return Polygon::hull(std::move(points));
}

Polygon parse_polygon(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '[' ? parse_polygon_json(text) : parse_polygon_text(text);
  }
  throw parse_error("no vertices in polygon input", 1);
}

nlohmann::ordered_json vertices_json(const Polygon& p) {
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (const auto& v : p.vertices())
    vertices.push_back(nlohmann::ordered_json::array({v.x, v.y}));
  return vertices;
}

std::string polygon_text(const Polygon& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : p.vertices()) {
    if (!first) out << ' ';
    first = false;
    out << v.x << ',' << v.y;
  }
  return out.str();
}

}  // namespace polybn
