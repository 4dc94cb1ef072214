#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polybn {

// All polygon arithmetic is exact. Coordinates are 64-bit; every product
// goes through 128-bit intermediates, so inputs with |coordinate| up to
// kCoordLimit are safe in every operation in this library. The parsers
// enforce the limit at the boundary.
using Int = std::int64_t;
using Wide = __int128;

inline constexpr Int kCoordLimit = Int{1} << 30;

class degenerate_error : public std::invalid_argument {
 public:
  explicit degenerate_error(const std::string& what) : std::invalid_argument(what) {}
};

class empty_polygon_error : public std::invalid_argument {
 public:
  explicit empty_polygon_error(const std::string& what) : std::invalid_argument(what) {}
};

class range_error : public std::out_of_range {
 public:
  explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class empty_polynomial_error : public std::runtime_error {
 public:
  explicit empty_polynomial_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr Int gcd_nonneg(Int a, Int b) {
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// s*a + t*b == g == gcd(a, b) >= 0, on possibly negative inputs.
struct ExtendedGcd {
  Int g, s, t;
};

constexpr ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

constexpr Int abs_int(Int a) { return a < 0 ? -a : a; }

// floor(a/b) and ceil(a/b) for b > 0, exact for negative a.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Largest t >= 0 with t*t <= n.
constexpr Int isqrt(Int n) {
  if (n < 0) return -1;
  Int t = 0;
  Int bit = Int{1} << 31;
  while (bit > 0) {
    Int cand = t + bit;
    if (cand * cand <= n)
      t = cand;
    bit >>= 1;
  }
  return t;
}

struct LatticePoint {
  Int x = 0;
  Int y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.x + q.x, p.y + q.y}; }
constexpr LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.x - q.x, p.y - q.y}; }

// cross(b - a, c - a), exact.
constexpr Wide cross(LatticePoint a, LatticePoint b, LatticePoint c) {
  return Wide(b.x - a.x) * Wide(c.y - a.y) - Wide(b.y - a.y) * Wide(c.x - a.x);
}

// A nonzero integer direction with gcd 1 and canonical sign
// (a > 0, or a == 0 and b > 0). Acts on points by the dot product.
struct PrimitiveVector {
  Int a = 1;
  Int b = 0;

  static PrimitiveVector of(Int a, Int b) {
    if (a == 0 && b == 0) throw std::invalid_argument("primitive vector must be nonzero");
    Int g = gcd_nonneg(abs_int(a), abs_int(b));
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    return PrimitiveVector{a, b};
  }

  Wide dot(LatticePoint p) const { return Wide(a) * p.x + Wide(b) * p.y; }

  friend constexpr auto operator<=>(const PrimitiveVector&, const PrimitiveVector&) = default;
};

// Composition of a GL2(Z) matrix (determinant +1 or -1) with an integer
// translation: p -> M p + t.
class AffineUnimodularMap {
 public:
  AffineUnimodularMap(Int m11, Int m12, Int m21, Int m22, Int tx = 0, Int ty = 0)
      : m11_(m11), m12_(m12), m21_(m21), m22_(m22), tx_(tx), ty_(ty) {
    Int det = m11 * m22 - m12 * m21;
    if (det != 1 && det != -1)
      throw std::invalid_argument("matrix determinant must be +1 or -1");
  }

  static AffineUnimodularMap identity() { return {1, 0, 0, 1, 0, 0}; }
  static AffineUnimodularMap translation(Int tx, Int ty) { return {1, 0, 0, 1, tx, ty}; }

  Int m11() const { return m11_; }
  Int m12() const { return m12_; }
  Int m21() const { return m21_; }
  Int m22() const { return m22_; }
  Int tx() const { return tx_; }
  Int ty() const { return ty_; }

  Int det() const { return m11_ * m22_ - m12_ * m21_; }

  LatticePoint operator()(LatticePoint p) const {
    return {m11_ * p.x + m12_ * p.y + tx_, m21_ * p.x + m22_ * p.y + ty_};
  }

  // this followed by `second`.
  AffineUnimodularMap then(const AffineUnimodularMap& s) const {
    return {s.m11_ * m11_ + s.m12_ * m21_, s.m11_ * m12_ + s.m12_ * m22_,
            s.m21_ * m11_ + s.m22_ * m21_, s.m21_ * m12_ + s.m22_ * m22_,
            s.m11_ * tx_ + s.m12_ * ty_ + s.tx_, s.m21_ * tx_ + s.m22_ * ty_ + s.ty_};
  }

  AffineUnimodularMap inverse() const {
    Int d = det();  // +1 or -1, so the inverse matrix is integral
    Int i11 = d * m22_, i12 = -d * m12_, i21 = -d * m21_, i22 = d * m11_;
    return {i11, i12, i21, i22, -(i11 * tx_ + i12 * ty_), -(i21 * tx_ + i22 * ty_)};
  }

  friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

 private:
  Int m11_, m12_, m21_, m22_, tx_, ty_;
};

}  // namespace polybn
