#include "polybn/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "polybn/normal_form.hpp"
#include "polybn/parallel.hpp"
#include "polybn/relax.hpp"

namespace polybn {
namespace {

constexpr Int kMaxInteriorCount = 12;
constexpr Int kMaxPointCount = 15;
constexpr std::size_t kDfsStateCap = 2'000'000;

void insert_class(std::map<std::string, Polygon>& classes, const Polygon& raw) {
  Polygon nf = normal_form(raw);
  std::string key = vertex_key(nf);
  classes.emplace(std::move(key), std::move(nf));
}

std::vector<PolygonClass> sorted_classes(std::map<std::string, Polygon>&& classes) {
  std::vector<PolygonClass> out;
  out.reserve(classes.size());
  for (auto& entry : classes) out.push_back(make_polygon_class(std::move(entry.second)));
  std::sort(out.begin(), out.end(), class_order);
  return out;
}

// Classes whose interior lattice points are a horizontal run of k >= 1
// points. Any width-two slab containing such a polygon must carry all
// interior points on its middle lattice line, and the width two is
// attained orthogonally to the run, so after normalization the polygon
// lives in rows y = 0..2 with interior exactly (0,1)..(k-1,1). A shear
// fixing the middle row aligns the leftmost bottom-row point over the
// leftmost top-row point up to parity; convexity against the middle
// row interval [-1, k] then bounds every remaining coordinate.
std::map<std::string, Polygon> slab_classes(Int k) {
  std::map<std::string, Polygon> classes;
  std::vector<LatticePoint> target;
  target.reserve(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) target.push_back({i, 1});
  for (Int skew = 0; skew <= 1; ++skew) {
    for (Int a0 = -1; a0 <= k; ++a0) {
      const Int a2 = a0 - skew;
      for (Int b0 = a0; b0 <= 2 * k + 2; ++b0) {
        for (Int b2 = a2; b2 <= 2 * k + 1; ++b2) {
          for (int left = 0; left <= 1; ++left) {
            for (int right = 0; right <= 1; ++right) {
              std::vector<LatticePoint> pts = {{a0, 0}, {b0, 0}, {a2, 2}, {b2, 2}};
              if (left) pts.push_back({-1, 1});
              if (right) pts.push_back({k, 1});
              Polygon p = Polygon::hull(pts);
              if (p.dim() != 2) continue;
              if (p.interior_lattice_points() == target) insert_class(classes, p);
            }
          }
        }
      }
    }
  }
  if (k == 1) {
    // The single exception to width two over a run interior: the
    // triangle of lattice width three with one interior point.
    insert_class(classes, make_polygon({{0, 0}, {3, 0}, {0, 3}}));
  }
  return classes;
}

// Every polygon whose interior hull equals the two-dimensional polygon
// B is contained in the region cut out by pushing each edge line of B
// outward by one. When that region has a non-integral vertex no such
// polygon exists; otherwise the region itself is the unique maximal
// instance, and deleting extreme lattice points one at a time reaches
// the entire family.
std::map<std::string, Polygon> two_dimensional_classes(const Polygon& inner) {
  std::map<std::string, Polygon> classes;
  RelaxationResult rel = relaxation(inner);
  if (!rel.integral) return classes;
  const std::vector<LatticePoint> target = inner.lattice_points();
  std::vector<Polygon> stack = {*rel.relaxed};
  std::set<std::string> seen = {vertex_key(stack.front())};
  while (!stack.empty()) {
    Polygon state = std::move(stack.back());
    stack.pop_back();
    if (state.interior_lattice_points() == target) insert_class(classes, state);
    for (const LatticePoint& v : state.vertices()) {
      std::vector<LatticePoint> pts;
      for (const LatticePoint& q : state.lattice_points())
        if (q != v) pts.push_back(q);
      Polygon next = Polygon::hull(pts);
      bool keeps_target = true;
      for (const LatticePoint& t : target) {
        if (!next.strictly_contains(t)) {
          keeps_target = false;
          break;
        }
      }
      if (!keeps_target) continue;
      std::string key = vertex_key(next);
      if (seen.insert(std::move(key)).second) {
        if (seen.size() > kDfsStateCap)
          throw resource_limit_error("interior enumeration state cap exceeded");
        stack.push_back(std::move(next));
      }
    }
  }
  return classes;
}

std::vector<PolygonClass> compute_by_interior(Int g, unsigned threads) {
  // Candidate interior hulls: the horizontal run of g points plus each
  // realizable two-dimensional class with exactly g lattice points.
  std::vector<Polygon> seeds;
  for (const PolygonClass& c : enumerate_by_lattice_points(g, threads))
    if (c.representative.dim() == 2) seeds.push_back(c.representative);
  std::vector<std::map<std::string, Polygon>> slots(seeds.size() + 1);
  run_indexed_jobs(seeds.size() + 1, threads, [&](std::size_t i) {
    if (i == 0) {
      slots[0] = slab_classes(g);
    } else {
      slots[i] = two_dimensional_classes(seeds[i - 1]);
    }
  });
  std::map<std::string, Polygon> merged;
  for (auto& slot : slots) merged.merge(slot);
  return sorted_classes(std::move(merged));
}

std::vector<PolygonClass> compute_by_points(Int n, unsigned threads) {
  std::map<std::string, Polygon> classes;
  if (n == 1) insert_class(classes, Polygon::hull({{0, 0}}));
  if (n >= 2) insert_class(classes, make_polygon({{0, 0}, {n - 1, 0}}));
  // Two-dimensional classes without interior points: the trapezoids
  // conv{(0,0),(a,0),(0,1),(b,1)} with a >= max(b,1) and a + b = n - 2,
  // plus the doubled unit triangle when n = 6.
  for (Int a = (n - 1) / 2; a <= n - 2; ++a) {
    const Int b = n - 2 - a;
    if (a < 1 || b < 0 || a < b) continue;
    insert_class(classes, make_polygon({{0, 0}, {a, 0}, {0, 1}, {b, 1}}));
  }
  if (n == 6) insert_class(classes, make_polygon({{0, 0}, {2, 0}, {0, 2}}));
  for (Int i = 1; i + 3 <= n; ++i) {
    for (const PolygonClass& c : enumerate_by_interior_points(i, threads))
      if (c.n_points == n) insert_class(classes, c.representative);
  }
  return sorted_classes(std::move(classes));
}

template <typename Compute>
std::vector<PolygonClass> memoized(std::map<Int, std::vector<PolygonClass>>& cache,
                                   std::mutex& mutex, Int key, Compute&& compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<PolygonClass> value = compute();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

PolygonClass make_polygon_class(Polygon normalized) {
  PolygonClass out;
  out.n_points = normalized.count_lattice_points();
  out.n_interior = normalized.count_interior_lattice_points();
  out.lw = normalized.lattice_width();
  out.representative = std::move(normalized);
  return out;
}

bool class_order(const PolygonClass& a, const PolygonClass& b) {
  auto key = [](const PolygonClass& c) {
    return std::make_tuple(c.n_points, c.n_interior, c.lw, vertex_key(c.representative));
  };
  return key(a) < key(b);
}

std::vector<PolygonClass> enumerate_by_lattice_points(Int n, unsigned threads) {
  if (n < 1) throw range_error("lattice point count must be at least 1");
  if (n > kMaxPointCount)
    throw resource_limit_error("lattice point enumeration is supported only up to 15 points");
  static std::map<Int, std::vector<PolygonClass>> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, n, [&] { return compute_by_points(n, threads); });
}

std::vector<PolygonClass> enumerate_by_interior_points(Int g, unsigned threads) {
  if (g < 1 || g > kMaxInteriorCount)
    throw range_error("interior point enumeration is supported for 1..12 points");
  static std::map<Int, std::vector<PolygonClass>> cache;
  static std::mutex mutex;
  return memoized(cache, mutex, g, [&] { return compute_by_interior(g, threads); });
}

std::vector<PolygonClass> interior_classes(Int g, unsigned threads) {
  std::map<std::string, Polygon> classes;
  for (const PolygonClass& c : enumerate_by_interior_points(g, threads))
    insert_class(classes, c.representative.interior_polygon());
  return sorted_classes(std::move(classes));
}

}  // namespace polybn
