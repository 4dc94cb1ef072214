#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polybn/core.hpp"
#include "polybn/normal_form.hpp"
#include "polybn/polyio.hpp"

using namespace polybn;
using nlohmann::json;

#ifndef POLYBN_CLI_PATH
#error "POLYBN_CLI_PATH must point at the CLI binary"
#endif

namespace {

const std::string kCli = std::string("'") + POLYBN_CLI_PATH + "'";

struct Run {
  int exit_code = -1;
  std::string output;
};

Run run(const std::string& args) {
  Run result;
  FILE* pipe = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[1 << 14];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = haystack.find(needle); at != std::string::npos;
       at = haystack.find(needle, at + needle.size()))
    ++count;
  return count;
}

Polygon polygon_of_line(const std::string& line) {
  const json parsed = json::parse(line);
  std::vector<LatticePoint> points;
  for (const auto& v : parsed.at("vertices"))
    points.push_back({v.at(0).get<Int>(), v.at(1).get<Int>()});
  return Polygon::hull(points);
}

}  // namespace

TEST_CASE("analyze: quintic simplex") {
  auto r = run("analyze --polygon '0,0 5,0 0,5'");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("genus_if_smooth") == 6);
  CHECK(report.at("lattice_width") == 5);
  CHECK(report.at("n_points") == 21);
  CHECK(report.at("simplex_multiple") == 5);
  CHECK(report.at("gonality_cap") == 5);
  CHECK(report.at("width_direction") == json::array({0, 1}));
  CHECK(report.at("interior_polygon") ==
        json::array({{1, 1}, {3, 1}, {1, 3}}));
  CHECK(report.at("verdict") ==
        "combinatorially admissible by width; excluded by plane-quintic rule");
}

TEST_CASE("analyze: genus-zero polynomial") {
  auto r = run("analyze --poly '1+x+x*y+x*y^2'");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("genus_if_smooth") == 0);
  CHECK(report.at("newton_polygon") == json::array({{0, 0}, {1, 0}, {1, 2}}));
  CHECK(report.at("theorem_bound").is_null());
  CHECK(report.at("simplex_multiple").is_null());
  CHECK(report.at("verdict") ==
        "genus 0; Brill-Noether conditions are vacuous");
}

TEST_CASE("analyze: sextic simplex bound") {
  auto r = run("analyze --polygon '0,0 6,0 0,6'");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("genus_if_smooth") == 10);
  CHECK(report.at("lattice_width") == 6);
  // Largest G with 3(G-2)^2 <= 8*10 - 20 = 60 is G = 6.
  CHECK(report.at("theorem_bound") == 6);
  CHECK(std::string(report.at("verdict")).starts_with("width-excluded"));
}

TEST_CASE("analyze: JSON polygon input and pretty mode") {
  auto json_form = run("analyze --polygon '[[0,0],[5,0],[0,5]]'");
  REQUIRE(json_form.exit_code == 0);
  auto text_form = run("analyze --polygon '0,0 5,0 0,5'");
  const json a = json::parse(json_form.output);
  const json b = json::parse(text_form.output);
  CHECK(a.at("newton_polygon") == b.at("newton_polygon"));
  CHECK(a.at("lattice_width") == b.at("lattice_width"));

  auto pretty = run("analyze --pretty --polygon '0,0 5,0 0,5'");
  REQUIRE(pretty.exit_code == 0);
  CHECK(pretty.output.find("lattice width:    5 along (0, 1)") !=
        std::string::npos);
  CHECK(pretty.output.find("excluded by plane-quintic rule") !=
        std::string::npos);
}

TEST_CASE("analyze: exit codes") {
  CHECK(run("analyze --poly 'x + @'").exit_code == 2);
  CHECK(run("analyze --poly 'x - x'").exit_code == 2);
  CHECK(run("analyze").exit_code == 2);
  CHECK(run("analyze --poly x --polygon '0,0 1,0 0,1'").exit_code == 2);
  CHECK(run("analyze --polygon '0,0 1,0'").exit_code == 3);
  CHECK(run("analyze --poly '1+x'").exit_code == 3);
  CHECK(run("analyze --polygon '0,0 1073741825,0 0,1'").exit_code == 4);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("enumerate: small streams") {
  auto three = run("enumerate --points 3");
  REQUIRE(three.exit_code == 0);
  const auto three_lines = lines_of(three.output);
  REQUIRE(three_lines.size() == 2);
  for (const auto& line : three_lines) {
    const json parsed = json::parse(line);
    REQUIRE(parsed.size() == 4);
    CHECK(parsed.contains("vertices"));
    CHECK(parsed.at("n_points") == 3);
    CHECK(parsed.contains("n_interior"));
    CHECK(parsed.contains("lw"));
  }

  auto one = run("enumerate --interior 1");
  CHECK(lines_of(one.output).size() == 16);
  auto limited = run("enumerate --interior 1 --limit 5");
  CHECK(lines_of(limited.output).size() == 5);

  CHECK(run("enumerate").exit_code == 2);
  CHECK(run("enumerate --points 2 --interior 2").exit_code == 2);
  CHECK(run("enumerate --points 0").exit_code == 4);
  CHECK(run("enumerate --points 16").exit_code == 4);
  CHECK(run("enumerate --interior 13").exit_code == 4);
}

TEST_CASE("enumerate: genus-10 stream yields 22 interior classes") {
  auto r = run("enumerate --interior 10");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 3659);
  std::set<std::string> interior_keys;
  for (const auto& line : lines)
    interior_keys.insert(
        vertex_key(normal_form(polygon_of_line(line).interior_polygon())));
  CHECK(interior_keys.size() == 22);
}

TEST_CASE("enumerate: determinism across runs, threads and the env var") {
  auto a = run("enumerate --interior 7 --threads 1");
  auto b = run("enumerate --interior 7 --threads 1");
  auto c = run("enumerate --interior 7 --threads 6");
  REQUIRE(a.exit_code == 0);
  CHECK(!a.output.empty());
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);

  Run via_env;
  FILE* pipe = popen(
      ("POLYBN_THREADS=5 " + kCli + " enumerate --interior 7 2>/dev/null").c_str(),
      "r");
  REQUIRE(pipe != nullptr);
  char buffer[1 << 14];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    via_env.output.append(buffer, n);
  via_env.exit_code = WEXITSTATUS(pclose(pipe));
  CHECK(via_env.exit_code == 0);
  CHECK(via_env.output == a.output);
}

TEST_CASE("classify: report files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "polybn-test-cli";
  std::error_code ec;
  fs::remove_all(dir, ec);

  auto r = run("classify --out '" + (dir / "full").string() + "'");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(slurp(dir / "full" / "report.json"));
  CHECK(report.at("schema") == 1);
  CHECK(report.at("admissible_count") == 11);
  CHECK(report.at("admissible").size() == 11);
  CHECK(report.at("crossover_genus") == 12);
  const std::string sheet = slurp(dir / "full" / "figures.svg");
  CHECK(count_of(sheet, "genus ") == 13);

  auto restricted = run("classify --out '" + (dir / "g4").string() +
                        "' --max-genus 4");
  REQUIRE(restricted.exit_code == 0);
  const json small = json::parse(slurp(dir / "g4" / "report.json"));
  CHECK(small.at("max_genus") == 4);
  CHECK(small.at("admissible").size() == 6);
  for (const auto& entry : small.at("admissible"))
    CHECK(entry.at("genus") <= 4);

  CHECK(run("classify --out '" + (dir / "g0").string() + "' --max-genus 0")
            .exit_code == 4);
  CHECK(run("classify --out /proc/none/sub").exit_code == 5);
  fs::remove_all(dir, ec);
}

TEST_CASE("polygon text and JSON parsing") {
  const Polygon p = parse_polygon_text("0,0 5,0 0,5");
  CHECK(p.vertices() ==
        std::vector<LatticePoint>{{0, 0}, {5, 0}, {0, 5}});
  CHECK(parse_polygon_text("5,0 0,5 0,0 1,1 2,0") == p);
  CHECK(parse_polygon_text("  -2,-1\n 1,0\t0,1 ") ==
        make_polygon({{-2, -1}, {1, 0}, {0, 1}}));
  CHECK(parse_polygon_json("[[0,0],[5,0],[0,5]]") == p);
  CHECK(parse_polygon(" [ [0,0] , [5,0] , [0,5] ]") == p);
  CHECK(parse_polygon("0,0 5,0 0,5") == p);
  CHECK(polygon_text(p) == "0,0 5,0 0,5");
  CHECK(vertices_json(p).dump() == "[[0,0],[5,0],[0,5]]");
  CHECK(parse_polygon_text("7,9") == make_polygon({{7, 9}}));
}

TEST_CASE("polygon parsing: errors carry positions") {
  CHECK_THROWS_AS(parse_polygon_text(""), parse_error);
  CHECK_THROWS_AS(parse_polygon_text("   "), parse_error);
  CHECK_THROWS_AS(parse_polygon_text("0,0 5"), parse_error);
  CHECK_THROWS_AS(parse_polygon_text("0;0"), parse_error);
  CHECK_THROWS_AS(parse_polygon_text("a,b"), parse_error);
  try {
    parse_polygon_text("0,0 x,1");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_polygon_text("0,0 1073741825,0"), range_error);
  CHECK_THROWS_AS(parse_polygon_json("[[0,0],[1]]"), parse_error);
  CHECK_THROWS_AS(parse_polygon_json("[]"), parse_error);
  CHECK_THROWS_AS(parse_polygon_json("{\"a\":1}"), parse_error);
  CHECK_THROWS_AS(parse_polygon_json("[[0,0],[1,0]"), parse_error);
  CHECK_THROWS_AS(parse_polygon_json("[[0.5,0],[1,0]]"), parse_error);
  const Int big = Int(1) << 30;
  CHECK(parse_polygon_text("0,0 " + std::to_string(big) + ",0")
            .vertices()
            .size() == 2);
  CHECK_THROWS_AS(
      parse_polygon_json("[[0,0],[" + std::to_string(big + 1) + ",0]]"),
      range_error);
}
