#include <doctest.h>

#include <random>

#include "polybn/normal_form.hpp"
#include "polybn/oracle.hpp"
#include "polybn/polygon.hpp"
#include "polybn/relax.hpp"
#include "test_util.hpp"

using namespace polybn;

TEST_CASE("relaxation of two-dimensional polygons") {
  auto square = relaxation(make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  REQUIRE(square.integral);
  CHECK(*square.relaxed == make_polygon({{-1, -1}, {2, -1}, {2, 2}, {-1, 2}}));

  auto doubled = relaxation(make_polygon({{1, 1}, {3, 1}, {1, 3}}));
  REQUIRE(doubled.integral);
  CHECK(*doubled.relaxed == make_polygon({{0, 0}, {5, 0}, {0, 5}}));

  auto unit = relaxation(make_polygon({{0, 0}, {1, 0}, {0, 1}}));
  REQUIRE(unit.integral);
  CHECK(*unit.relaxed == make_polygon({{-1, -1}, {3, -1}, {-1, 3}}));

  // A flat triangle whose moved-out region has a fractional corner.
  auto flat = relaxation(make_polygon({{0, 0}, {4, 0}, {0, 1}}));
  CHECK_FALSE(flat.integral);
  CHECK_FALSE(flat.relaxed.has_value());

  CHECK_THROWS_AS(relaxation(Polygon()), empty_polygon_error);
}

TEST_CASE("relaxation of points and segments finds witnesses") {
  auto pt = relaxation(make_polygon({{2, 2}}));
  REQUIRE(pt.integral);
  CHECK(pt.relaxed->interior_lattice_points() == std::vector<LatticePoint>{{2, 2}});

  auto seg = relaxation(make_polygon({{0, 0}, {2, 0}}));
  REQUIRE(seg.integral);
  CHECK(seg.relaxed->interior_lattice_points() ==
        std::vector<LatticePoint>({{0, 0}, {1, 0}, {2, 0}}));

  // A skew segment: direction (1,2), lattice length 2.
  auto skew = relaxation(make_polygon({{1, 1}, {3, 5}}));
  REQUIRE(skew.integral);
  CHECK(skew.relaxed->interior_lattice_points() ==
        std::vector<LatticePoint>({{1, 1}, {2, 3}, {3, 5}}));

  CHECK(realizable_as_interior(make_polygon({{0, 0}})));
  CHECK(realizable_as_interior(make_polygon({{0, 0}, {5, 0}})));
  CHECK_THROWS_AS(realizable_as_interior(Polygon()), empty_polygon_error);
}

TEST_CASE("integral relaxations reproduce their interior polygon") {
  auto corpus = oracle::random_hull_corpus(300, 1234u);
  std::mt19937 rng(5u);
  int integral_count = 0;
  for (const Polygon& p : corpus) {
    RelaxationResult r = relaxation(p);
    if (r.integral) {
      ++integral_count;
      CHECK(r.relaxed->interior_polygon() == p);
      CHECK(r.relaxed->count_interior_lattice_points() == p.count_lattice_points());
    }
    // Realizability is a property of the equivalence class.
    AffineUnimodularMap m = testutil::random_unimodular_map(rng);
    CHECK(realizable_as_interior(p.apply(m)) == r.integral);
  }
  CHECK(integral_count > 0);
  CHECK(integral_count < 300);
}
