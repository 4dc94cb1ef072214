#include "polybn/polygon.hpp"

#include <algorithm>
#include <limits>

namespace polybn {

namespace {

constexpr Int kRowScanCap = 20'000'000;       // rows visited by a lattice scan
constexpr Int kPointMaterializeCap = 4'000'000;  // points returned by one call
constexpr Int kWidthSearchCap = 8'000'000;    // directions tried by the width search

Wide floor_div_wide(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div_wide(Wide a, Wide b) { return -floor_div_wide(-a, b); }

Int narrow_or_throw(Wide v, const char* what) {
  if (v > Wide(std::numeric_limits<Int>::max()) || v < Wide(std::numeric_limits<Int>::min()))
    throw range_error(what);
  return Int(v);
}

struct Rational {  // num/den with den > 0, only used for row intersections
  Wide num = 0;
  Wide den = 1;
};

bool rat_less(const Rational& p, const Rational& q) { return p.num * q.den < q.num * p.den; }

Int edge_gcd(LatticePoint a, LatticePoint b) {
  return gcd_nonneg(abs_int(b.x - a.x), abs_int(b.y - a.y));
}

}  // namespace

Polygon Polygon::hull(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polygon result;
  const std::size_t n = points.size();
  if (n <= 2) {
    result.verts_ = std::move(points);
    return result;
  }
  std::vector<LatticePoint> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower_end && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);  // the last point repeats the first
  result.verts_ = std::move(h);
  return result;
}

Polygon Polygon::from_canonical(std::vector<LatticePoint> vertices) {
  Polygon rebuilt = hull(vertices);
  if (rebuilt.verts_ != vertices)
    throw std::invalid_argument("vertex list is not in canonical hull form");
  return rebuilt;
}

int Polygon::dim() const {
  switch (verts_.size()) {
    case 0: return -1;
    case 1: return 0;
    case 2: return 1;
    default: return 2;
  }
}

bool Polygon::contains(LatticePoint p) const {
  switch (dim()) {
    case -1: return false;
    case 0: return p == verts_[0];
    case 1: {
      if (cross(verts_[0], verts_[1], p) != 0) return false;
      LatticePoint d = verts_[1] - verts_[0];
      Wide t = Wide(d.x) * (p.x - verts_[0].x) + Wide(d.y) * (p.y - verts_[0].y);
      return t >= 0 && t <= Wide(d.x) * d.x + Wide(d.y) * d.y;
    }
    default:
      for (std::size_t i = 0; i < verts_.size(); ++i)
        if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p) < 0) return false;
      return true;
  }
}

bool Polygon::strictly_contains(LatticePoint p) const {
  if (dim() < 2) return false;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p) <= 0) return false;
  return true;
}

Int Polygon::area_twice() const {
  if (dim() < 2) return 0;
  Wide sum = 0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const LatticePoint& a = verts_[i];
    const LatticePoint& b = verts_[(i + 1) % verts_.size()];
    sum += Wide(a.x) * b.y - Wide(b.x) * a.y;
  }
  return narrow_or_throw(sum, "polygon area exceeds the representable range");
}

Int Polygon::boundary_lattice_point_count() const {
  switch (dim()) {
    case -1: return 0;
    case 0: return 1;
    case 1: return edge_gcd(verts_[0], verts_[1]) + 1;
    default: {
      Int total = 0;
      for (std::size_t i = 0; i < verts_.size(); ++i)
        total += edge_gcd(verts_[i], verts_[(i + 1) % verts_.size()]);
      return total;
    }
  }
}

std::optional<std::pair<Int, Int>> Polygon::row_range(Int y, bool interior) const {
  Rational lo, hi;
  bool seen = false;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    LatticePoint a = verts_[i];
    LatticePoint b = verts_[(i + 1) % verts_.size()];
    if (a.y == b.y) {
      if (a.y != y) continue;
      for (Int x : {a.x, b.x}) {
        Rational r{x, 1};
        if (!seen || rat_less(r, lo)) lo = r;
        if (!seen || rat_less(hi, r)) hi = r;
        seen = true;
      }
    } else {
      if (y < std::min(a.y, b.y) || y > std::max(a.y, b.y)) continue;
      Wide den = b.y - a.y;
      Wide num = Wide(a.x) * den + Wide(y - a.y) * (b.x - a.x);
      if (den < 0) {
        num = -num;
        den = -den;
      }
      Rational r{num, den};
      if (!seen || rat_less(r, lo)) lo = r;
      if (!seen || rat_less(hi, r)) hi = r;
      seen = true;
    }
  }
  if (!seen) return std::nullopt;
  Wide xlo = interior ? floor_div_wide(lo.num, lo.den) + 1 : ceil_div_wide(lo.num, lo.den);
  Wide xhi = interior ? ceil_div_wide(hi.num, hi.den) - 1 : floor_div_wide(hi.num, hi.den);
  if (xlo > xhi) return std::nullopt;
  return std::make_pair(Int(xlo), Int(xhi));
}

namespace {

std::pair<Int, Int> y_extent(const std::vector<LatticePoint>& verts) {
  Int ymin = verts.front().y, ymax = verts.front().y;
  for (const auto& v : verts) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  return {ymin, ymax};
}

}  // namespace

Int Polygon::count_lattice_points() const {
  if (dim() < 2) return boundary_lattice_point_count();
  auto [ymin, ymax] = y_extent(verts_);
  if (ymax - ymin > kRowScanCap)
    throw resource_limit_error("polygon spans too many lattice rows to scan");
  Wide total = 0;
  for (Int y = ymin; y <= ymax; ++y)
    if (auto r = row_range(y, false)) total += Wide(r->second) - r->first + 1;
  return narrow_or_throw(total, "lattice point count exceeds the representable range");
}

Int Polygon::count_interior_lattice_points() const {
  if (dim() < 2) return 0;
  auto [ymin, ymax] = y_extent(verts_);
  if (ymax - ymin > kRowScanCap)
    throw resource_limit_error("polygon spans too many lattice rows to scan");
  Wide total = 0;
  for (Int y = ymin + 1; y < ymax; ++y)
    if (auto r = row_range(y, true)) total += Wide(r->second) - r->first + 1;
  return narrow_or_throw(total, "lattice point count exceeds the representable range");
}

Int Polygon::pick_area_twice() const {
  if (dim() < 2) throw degenerate_error("Pick's formula requires a two-dimensional polygon");
  return 2 * count_interior_lattice_points() + boundary_lattice_point_count() - 2;
}

std::vector<LatticePoint> Polygon::lattice_points() const {
  std::vector<LatticePoint> out;
  switch (dim()) {
    case -1: return out;
    case 0: return {verts_[0]};
    case 1: {
      LatticePoint d = verts_[1] - verts_[0];
      Int g = edge_gcd(verts_[0], verts_[1]);
      for (Int k = 0; k <= g; ++k) out.push_back({verts_[0].x + k * (d.x / g), verts_[0].y + k * (d.y / g)});
      return out;
    }
    default: break;
  }
  if (count_lattice_points() > kPointMaterializeCap)
    throw resource_limit_error("polygon has too many lattice points to list");
  auto [ymin, ymax] = y_extent(verts_);
  for (Int y = ymin; y <= ymax; ++y)
    if (auto r = row_range(y, false))
      for (Int x = r->first; x <= r->second; ++x) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> Polygon::interior_lattice_points() const {
  std::vector<LatticePoint> out;
  if (dim() < 2) return out;
  if (count_interior_lattice_points() > kPointMaterializeCap)
    throw resource_limit_error("polygon has too many interior lattice points to list");
  auto [ymin, ymax] = y_extent(verts_);
  for (Int y = ymin + 1; y < ymax; ++y)
    if (auto r = row_range(y, true))
      for (Int x = r->first; x <= r->second; ++x) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

Polygon Polygon::interior_polygon() const {
  if (dim() < 2) return Polygon{};
  auto [ymin, ymax] = y_extent(verts_);
  if (ymax - ymin > kRowScanCap)
    throw resource_limit_error("polygon spans too many lattice rows to scan");
  // Only the extreme interior points of each row can be hull vertices.
  std::vector<LatticePoint> extremes;
  for (Int y = ymin + 1; y < ymax; ++y)
    if (auto r = row_range(y, true)) {
      extremes.push_back({r->first, y});
      extremes.push_back({r->second, y});
    }
  return hull(std::move(extremes));
}

Int Polygon::width_along(PrimitiveVector direction) const {
  if (empty()) throw empty_polygon_error("width of the empty polygon along a direction");
  Wide lo = direction.dot(verts_[0]), hi = lo;
  for (const auto& v : verts_) {
    Wide d = direction.dot(v);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return narrow_or_throw(hi - lo, "width exceeds the representable range");
}

WidthCertificate Polygon::lattice_width_certificate() const {
  WidthCertificate cert;
  switch (dim()) {
    case -1:
      return cert;  // width -1, no realizers
    case 0:
      cert.width = 0;
      cert.realizers = {PrimitiveVector{0, 1}, PrimitiveVector{1, 0}};
      return cert;
    case 1: {
      cert.width = 0;
      LatticePoint d = verts_[1] - verts_[0];
      cert.realizers = {PrimitiveVector::of(d.y, -d.x)};
      return cert;
    }
    default: break;
  }
  Int xmin = verts_[0].x, xmax = verts_[0].x, ymin = verts_[0].y, ymax = verts_[0].y;
  for (const auto& v : verts_) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const Int w = xmax - xmin, h = ymax - ymin;
  // Some width-realizing direction (a, b) satisfies |a| <= h, |b| <= w;
  // with the canonical sign a >= 0 that leaves (h + 1) * (2w + 1) candidates.
  if (Wide(h + 1) * (2 * w + 1) > kWidthSearchCap)
    throw resource_limit_error("lattice width search box too large");
  cert.width = std::numeric_limits<Int>::max();
  for (Int a = 0; a <= h; ++a)
    for (Int b = (a == 0 ? 1 : -w); b <= w; ++b) {
      if (gcd_nonneg(a, abs_int(b)) != 1) continue;
      Int wd = width_along(PrimitiveVector{a, b});
      if (wd < cert.width) {
        cert.width = wd;
        cert.realizers.clear();
      }
      if (wd == cert.width) cert.realizers.push_back(PrimitiveVector{a, b});
    }
  return cert;
}

Polygon Polygon::apply(const AffineUnimodularMap& map) const {
  std::vector<LatticePoint> mapped;
  mapped.reserve(verts_.size());
  for (const auto& v : verts_) {
    Wide x = Wide(map.m11()) * v.x + Wide(map.m12()) * v.y + map.tx();
    Wide y = Wide(map.m21()) * v.x + Wide(map.m22()) * v.y + map.ty();
    mapped.push_back({narrow_or_throw(x, "mapped coordinate exceeds the representable range"),
                      narrow_or_throw(y, "mapped coordinate exceeds the representable range")});
  }
  return hull(std::move(mapped));
}

Polygon Polygon::translated(Int dx, Int dy) const {
  Polygon out;
  out.verts_.reserve(verts_.size());
  for (const auto& v : verts_)
    out.verts_.push_back({narrow_or_throw(Wide(v.x) + dx, "translated coordinate exceeds the representable range"),
                          narrow_or_throw(Wide(v.y) + dy, "translated coordinate exceeds the representable range")});
  return out;
}

Int Polygon::standard_simplex_multiple() const {
  if (verts_.size() != 3) return -1;
  Int d = edge_gcd(verts_[0], verts_[1]);
  if (edge_gcd(verts_[1], verts_[2]) != d || edge_gcd(verts_[2], verts_[0]) != d) return -1;
  // Equal edge lengths d with doubled area d*d force primitive edge
  // vectors spanning a unimodular basis, i.e. an image of d * simplex.
  return area_twice() == d * d ? d : -1;
}

Polygon make_polygon(std::initializer_list<LatticePoint> points) {
  return Polygon::hull(std::vector<LatticePoint>(points));
}

}  // namespace polybn
