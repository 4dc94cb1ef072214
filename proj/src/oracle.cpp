#include "polybn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <unordered_set>

#include "polybn/normal_form.hpp"

namespace polybn {
namespace oracle {

std::vector<Polygon> random_hull_corpus(std::size_t count, unsigned seed, Int box_size) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Int> coord(0, box_size - 1);
  std::uniform_int_distribution<int> npoints(3, 12);
  std::vector<Polygon> out;
  out.reserve(count);
  while (out.size() < count) {
    std::vector<LatticePoint> pts(npoints(rng));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    Polygon h = Polygon::hull(std::move(pts));
    if (h.dim() == 2) out.push_back(std::move(h));
  }
  return out;
}

WidthCertificate brute_width_certificate(const Polygon& p, Int scale) {
  if (p.dim() < 2) return p.lattice_width_certificate();
  Int xmin = p.vertices()[0].x, xmax = xmin, ymin = p.vertices()[0].y, ymax = ymin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const Int w = scale * (xmax - xmin), h = scale * (ymax - ymin);
  WidthCertificate cert;
  cert.width = std::numeric_limits<Int>::max();
  for (Int a = 0; a <= h; ++a)
    for (Int b = (a == 0 ? 1 : -w); b <= w; ++b) {
      if (gcd_nonneg(a, abs_int(b)) != 1) continue;
      Int wd = p.width_along(PrimitiveVector{a, b});
      if (wd < cert.width) {
        cert.width = wd;
        cert.realizers.clear();
      }
      if (wd == cert.width) cert.realizers.push_back(PrimitiveVector{a, b});
    }
  return cert;
}

namespace {

// Calls visit(subset) for every subset of `points` with size in
// [1, max_size].
void for_each_subset(const std::vector<LatticePoint>& points, int max_size,
                     const std::function<void(const std::vector<LatticePoint>&)>& visit) {
  std::vector<LatticePoint> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) visit(chosen);
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (std::size_t i = from; i < points.size(); ++i) {
      chosen.push_back(points[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<LatticePoint> box_points(Int x0, Int x1, Int y0, Int y1) {
  std::vector<LatticePoint> pts;
  for (Int y = y0; y <= y1; ++y)
    for (Int x = x0; x <= x1; ++x) pts.push_back({x, y});
  return pts;
}

std::vector<Polygon> dedupe_to_classes(const std::vector<Polygon>& hulls) {
  std::unordered_set<std::string> seen;
  std::vector<Polygon> classes;
  for (const Polygon& h : hulls) {
    Polygon rep = normal_form(h);
    if (seen.insert(vertex_key(rep)).second) classes.push_back(std::move(rep));
  }
  std::sort(classes.begin(), classes.end(),
            [](const Polygon& a, const Polygon& b) { return vertex_key(a) < vertex_key(b); });
  return classes;
}

}  // namespace

std::vector<Polygon> naive_classes_by_lattice_points(Int n, Int box_size, int max_subset) {
  if (max_subset < 0) max_subset = static_cast<int>(n);
  std::vector<LatticePoint> box = box_points(0, box_size - 1, 0, box_size - 1);
  std::unordered_set<std::string> seen_raw;
  std::vector<Polygon> matches;
  for_each_subset(box, max_subset, [&](const std::vector<LatticePoint>& subset) {
    Polygon h = Polygon::hull(subset);
    if (h.count_lattice_points() != n) return;
    if (seen_raw.insert(vertex_key(h)).second) matches.push_back(std::move(h));
  });
  return dedupe_to_classes(matches);
}

std::vector<Polygon> naive_classes_interior_one() {
  // A convex polygon in a 5x5 grid has at most 8 vertices (the positive
  // x-steps of 10 distinct primitive edge vectors would already exceed
  // spread 4), so subsets of size 8 reach every class in the box.
  std::vector<LatticePoint> box = box_points(-2, 2, -2, 2);
  std::unordered_set<std::string> seen_raw;
  std::vector<Polygon> matches;
  for_each_subset(box, 8, [&](const std::vector<LatticePoint>& subset) {
    Polygon h = Polygon::hull(subset);
    if (h.dim() != 2 || h.count_interior_lattice_points() != 1) return;
    if (seen_raw.insert(vertex_key(h)).second) matches.push_back(std::move(h));
  });
  return dedupe_to_classes(matches);
}

namespace {

// Exhaustive search for a polygon whose interior lattice points are
// exactly `target`, over every sub-hull of `start` that keeps the
// target strictly inside. Deleting one extreme point at a time reaches
// every such sub-hull, so failure to find one is a complete refusal.
bool shrink_search_from(const Polygon& start, const std::vector<LatticePoint>& target) {
  auto contains_target_strictly = [&](const Polygon& q) {
    for (const auto& t : target)
      if (!q.strictly_contains(t)) return false;
    return true;
  };
  if (!contains_target_strictly(start)) return false;
  constexpr std::size_t kStateCap = 20'000'000;
  std::unordered_set<std::string> visited;
  std::vector<Polygon> stack{start};
  visited.insert(vertex_key(start));
  while (!stack.empty()) {
    Polygon cur = std::move(stack.back());
    stack.pop_back();
    if (cur.interior_lattice_points() == target) return true;
    std::vector<LatticePoint> pts = cur.lattice_points();
    for (const auto& v : cur.vertices()) {
      std::vector<LatticePoint> rest;
      rest.reserve(pts.size() - 1);
      for (const auto& q : pts)
        if (q != v) rest.push_back(q);
      Polygon child = Polygon::hull(std::move(rest));
      if (child.dim() != 2 || !contains_target_strictly(child)) continue;
      if (visited.size() >= kStateCap)
        throw resource_limit_error("brute-force realizability search exceeded its state cap");
      if (visited.insert(vertex_key(child)).second) stack.push_back(std::move(child));
    }
  }
  return false;
}

struct BoundingBox {
  Int xmin, xmax, ymin, ymax;
};

BoundingBox bounding_box(const Polygon& p) {
  BoundingBox b{p.vertices()[0].x, p.vertices()[0].x, p.vertices()[0].y, p.vertices()[0].y};
  for (const auto& v : p.vertices()) {
    b.xmin = std::min(b.xmin, v.x);
    b.xmax = std::max(b.xmax, v.x);
    b.ymin = std::min(b.ymin, v.y);
    b.ymax = std::max(b.ymax, v.y);
  }
  return b;
}

}  // namespace

bool brute_force_realizable(const Polygon& p, Int margin) {
  if (p.dim() != 2)
    throw degenerate_error("brute_force_realizable expects a two-dimensional polygon");
  const BoundingBox b = bounding_box(p);
  // A candidate point must stay within one unit of every edge line of
  // p: a lattice point two levels beyond an edge, together with the
  // edge's endpoints (interior points of the candidate polygon by
  // hypothesis), would trap another lattice point strictly between
  // them at the level just beyond the edge, creating an interior point
  // outside p.
  const auto& verts = p.vertices();
  auto within_pushed_region = [&](LatticePoint z) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const LatticePoint a = verts[i];
      const LatticePoint e = verts[(i + 1) % verts.size()] - a;
      const Int g = gcd_nonneg(abs_int(e.x), abs_int(e.y));
      const PrimitiveVector n{e.y / g, -e.x / g};  // outer normal for CCW order
      if (n.dot(z) > n.dot(a) + 1) return false;
    }
    return true;
  };
  std::vector<LatticePoint> candidates;
  bool touched_frame = false;
  for (Int y = b.ymin - margin; y <= b.ymax + margin; ++y)
    for (Int x = b.xmin - margin; x <= b.xmax + margin; ++x) {
      if (!within_pushed_region({x, y})) continue;
      candidates.push_back({x, y});
      if (y == b.ymin - margin || y == b.ymax + margin || x == b.xmin - margin ||
          x == b.xmax + margin)
        touched_frame = true;
    }
  if (touched_frame)
    throw std::logic_error("brute_force_realizable margin does not cover the pushed region");
  return shrink_search_from(Polygon::hull(std::move(candidates)), p.lattice_points());
}

bool brute_force_realizable_box(const Polygon& p, Int margin) {
  if (p.dim() != 2)
    throw degenerate_error("brute_force_realizable_box expects a two-dimensional polygon");
  const BoundingBox b = bounding_box(p);
  Polygon start = Polygon::hull(
      box_points(b.xmin - margin, b.xmax + margin, b.ymin - margin, b.ymax + margin));
  return shrink_search_from(start, p.lattice_points());
}

}  // namespace oracle
}  // namespace polybn
