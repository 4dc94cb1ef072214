#include "polybn/relax.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "polybn/normal_form.hpp"

namespace polybn {

namespace {

struct Halfplane {  // n.x <= c with n primitive
  PrimitiveVector n;
  Wide c;
};

std::vector<Halfplane> relaxed_constraints(const Polygon& p) {
  std::vector<Halfplane> out;
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    LatticePoint a = vs[i], b = vs[(i + 1) % vs.size()];
    LatticePoint e = b - a;
    // Outer normal of a counter-clockwise edge, scaled to primitive.
    Int g = gcd_nonneg(abs_int(e.x), abs_int(e.y));
    Int nx = e.y / g, ny = -e.x / g;
    Wide c = Wide(nx) * a.x + Wide(ny) * a.y;
    out.push_back({PrimitiveVector{nx, ny}, c + 1});
  }
  return out;
}

RelaxationResult relax_full_dimensional(const Polygon& p) {
  const std::vector<Halfplane> hp = relaxed_constraints(p);
  bool integral = true;
  std::vector<LatticePoint> corners;
  for (std::size_t i = 0; i < hp.size(); ++i)
    for (std::size_t j = 0; j < hp.size(); ++j) {
      Wide det = Wide(hp[i].n.a) * hp[j].n.b - Wide(hp[j].n.a) * hp[i].n.b;
      if (det <= 0) continue;  // each transversal pair once, oriented
      Wide xn = hp[i].c * hp[j].n.b - hp[j].c * hp[i].n.b;
      Wide yn = Wide(hp[i].n.a) * hp[j].c - Wide(hp[j].n.a) * hp[i].c;
      bool feasible = true;
      for (const Halfplane& k : hp)
        if (Wide(k.n.a) * xn + Wide(k.n.b) * yn > k.c * det) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      if (xn % det != 0 || yn % det != 0) {
        integral = false;
      } else {
        corners.push_back({Int(xn / det), Int(yn / det)});
      }
    }
  if (!integral) return {false, std::nullopt};
  return {true, Polygon::hull(std::move(corners))};
}

// Exhaustive shrink search for a polygon whose interior lattice points
// are exactly `target`, starting from the hull of a finite box. Every
// candidate inside the box is reachable by repeatedly deleting a hull
// vertex, and a state whose interior no longer strictly contains all of
// `target` can never recover, so the pruned search is complete.
std::optional<Polygon> shrink_search(const Polygon& start, const std::vector<LatticePoint>& target) {
  auto strictly_contains_all = [&](const Polygon& q) {
    for (const auto& t : target)
      if (!q.strictly_contains(t)) return false;
    return true;
  };
  if (!strictly_contains_all(start)) return std::nullopt;
  std::unordered_set<std::string> visited{vertex_key(start)};
  std::vector<Polygon> stack{start};
  while (!stack.empty()) {
    Polygon cur = std::move(stack.back());
    stack.pop_back();
    if (cur.interior_lattice_points() == target) return cur;
    std::vector<LatticePoint> pts = cur.lattice_points();
    for (const auto& v : cur.vertices()) {
      std::vector<LatticePoint> rest;
      rest.reserve(pts.size() - 1);
      for (const auto& q : pts)
        if (q != v) rest.push_back(q);
      Polygon child = Polygon::hull(std::move(rest));
      if (child.dim() != 2 || !strictly_contains_all(child)) continue;
      if (visited.insert(vertex_key(child)).second) stack.push_back(std::move(child));
    }
  }
  return std::nullopt;
}

// Maps the degenerate polygon to the horizontal model through the
// origin, searches a 3-row box around it for a witness, and maps back.
RelaxationResult relax_degenerate(const Polygon& p) {
  LatticePoint base = p.vertices().front();
  AffineUnimodularMap to_model = AffineUnimodularMap::identity();
  Int len = 0;
  if (p.dim() == 1) {
    LatticePoint d = p.vertices()[1] - p.vertices()[0];
    len = gcd_nonneg(abs_int(d.x), abs_int(d.y));
    Int ux = d.x / len, uy = d.y / len;
    ExtendedGcd e = extended_gcd(ux, uy);  // e.s*ux + e.t*uy == 1
    to_model = AffineUnimodularMap{e.s, e.t, -uy, ux};  // sends (ux,uy) to (1,0)
  }
  to_model = AffineUnimodularMap::translation(-base.x, -base.y).then(to_model);
  std::vector<LatticePoint> target;
  for (Int x = 0; x <= len; ++x) target.push_back({x, 0});
  std::vector<LatticePoint> box;
  for (Int y = -1; y <= 1; ++y)
    for (Int x = -2; x <= len + 2; ++x) box.push_back({x, y});
  std::optional<Polygon> witness = shrink_search(Polygon::hull(std::move(box)), target);
  if (!witness) return {false, std::nullopt};
  return {true, witness->apply(to_model.inverse())};
}

}  // namespace

RelaxationResult relaxation(const Polygon& p) {
  switch (p.dim()) {
    case -1: throw empty_polygon_error("relaxation of the empty polygon");
    case 0:
    case 1: return relax_degenerate(p);
    default: return relax_full_dimensional(p);
  }
}

bool realizable_as_interior(const Polygon& p) {
  if (p.empty()) throw empty_polygon_error("realizability of the empty polygon");
  if (p.dim() < 2) return relax_degenerate(p).integral;
  return relax_full_dimensional(p).integral;
}

}  // namespace polybn
