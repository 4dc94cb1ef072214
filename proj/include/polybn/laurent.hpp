#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "polybn/polygon.hpp"

namespace polybn {

// Exact rational coefficients; only zero/nonzero matters for the Newton
// polygon, but keeping the values exact makes cancellation exact too.
using Rational = boost::multiprecision::cpp_rational;

// A Laurent polynomial in x and y: a finite sum of c * x^i * y^j with
// nonzero rational c and integer (possibly negative) exponents.  Like
// terms are always combined and zero coefficients dropped, so two
// polynomials are equal iff their term maps are.
class LaurentPoly {
 public:
  using Terms = std::map<LatticePoint, Rational>;

  LaurentPoly() = default;

  // Adds c * x^p.x * y^p.y, combining with any existing term.
  void add_term(LatticePoint p, Rational c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Exponent pairs with nonzero coefficient, in (i, j) lex order.
  std::vector<LatticePoint> support() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

// Parses a sum of terms.  Each term is an optional sign, an optional
// rational coefficient (integer or integer/integer), an optional '*',
// and any number of '*'-separated factors 'x' or 'y', each optionally
// raised via '^' (or '**') to a signed integer exponent written without
// parentheses (x^-2).  Whitespace is ignored everywhere.
//
// Throws parse_error (with 1-based character position) on a syntax
// error, range_error if an exponent exceeds kCoordLimit in magnitude,
// and empty_polynomial_error if every term cancels.
LaurentPoly parse_laurent(const std::string& text);

// Canonical rendering: terms in support order joined with " + " or
// " - ", coefficient magnitudes omitted when 1 (unless the term is
// constant), exponents omitted when 1, factors joined with '*'.
// parse_laurent(format_laurent(f)) == f for every f, and
// format_laurent(parse_laurent(s)) == s for canonical s.
std::string format_laurent(const LaurentPoly& f);

// Convex hull of the support.  Throws empty_polynomial_error on the
// zero polynomial.
Polygon newton_polygon(const LaurentPoly& f);

}  // namespace polybn
