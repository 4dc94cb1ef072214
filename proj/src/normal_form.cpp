#include "polybn/normal_form.hpp"

#include <algorithm>

namespace polybn {

namespace {

// Sends the direction (a, b) (primitive) to the vertical direction:
// the new y-coordinate of a point is a*x + b*y.
AffineUnimodularMap direction_to_vertical(Int a, Int b, bool flip) {
  ExtendedGcd e = extended_gcd(a, b);  // e.s*a + e.t*b == 1
  Int c = e.t, d = -e.s;  // c*b - d*a == 1
  if (flip) {
    c = -c;
    d = -d;
  }
  return AffineUnimodularMap{c, d, a, b};
}

// Normalises the shear freedom once a width realizer points upward:
// slides the top edge chain until the leftmost top vertex sits in
// [0, w) horizontally relative to the leftmost bottom vertex.
Polygon shear_normalize(const Polygon& q) {
  const auto& vs = q.vertices();
  Int ymin = vs.front().y, ymax = vs.front().y;
  for (const auto& v : vs) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  Int w = ymax - ymin;
  Int xbot = 0, xtop = 0;
  bool got_bot = false, got_top = false;
  for (const auto& v : vs) {
    if (v.y == ymin && (!got_bot || v.x < xbot)) {
      xbot = v.x;
      got_bot = true;
    }
    if (v.y == ymax && (!got_top || v.x < xtop)) {
      xtop = v.x;
      got_top = true;
    }
  }
  Int t = -floor_div(xtop - xbot, w);
  return q.apply(AffineUnimodularMap{1, t, 0, 1});
}

Polygon translate_to_origin(const Polygon& q) {
  LatticePoint v0 = q.vertices().front();  // canonical order starts at the lex minimum
  return q.translated(-v0.x, -v0.y);
}

}  // namespace

std::string vertex_key(const Polygon& p) {
  if (p.empty()) return "-";
  std::string key;
  for (const auto& v : p.vertices()) {
    if (!key.empty()) key += ' ';
    key += std::to_string(v.x);
    key += ',';
    key += std::to_string(v.y);
  }
  return key;
}

Polygon normal_form(const Polygon& p) {
  switch (p.dim()) {
    case -1:
      return p;
    case 0:
      return make_polygon({{0, 0}});
    case 1: {
      LatticePoint d = p.vertices()[1] - p.vertices()[0];
      Int len = gcd_nonneg(abs_int(d.x), abs_int(d.y));
      return make_polygon({{0, 0}, {len, 0}});
    }
    default:
      break;
  }
  WidthCertificate cert = p.lattice_width_certificate();
  Polygon best;
  std::string best_key;
  for (const PrimitiveVector& u : cert.realizers)
    for (Int sign : {Int{1}, Int{-1}})
      for (bool flip : {false, true}) {
        Polygon q = p.apply(direction_to_vertical(sign * u.a, sign * u.b, flip));
        q = translate_to_origin(shear_normalize(q));
        std::string key = vertex_key(q);
        if (best_key.empty() || key < best_key) {
          best_key = std::move(key);
          best = std::move(q);
        }
      }
  return best;
}

bool equivalent(const Polygon& p, const Polygon& q) {
  return normal_form(p) == normal_form(q);
}

}  // namespace polybn
