#include "polybn/laurent.hpp"

#include <cctype>
#include <sstream>

namespace polybn {

void LaurentPoly::add_term(LatticePoint p, Rational c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<LatticePoint> LaurentPoly::support() const {
  std::vector<LatticePoint> points;
  points.reserve(terms_.size());
  for (const auto& [p, c] : terms_) points.push_back(p);
  return points;
}

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) { skip_ws(); }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  // 1-based position for error messages.
  std::size_t position() const { return pos_ + 1; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    skip_ws();
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(message, position());
  }

  // Unsigned integer with unbounded precision (coefficients can be as
  // long as they like; only exponents are range-limited).
  boost::multiprecision::cpp_int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    boost::multiprecision::cpp_int value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    skip_ws();
    return value;
  }

  Int exponent() {
    bool negative = false;
    if (consume('-'))
      negative = true;
    else
      consume('+');
    const std::size_t at = position();
    boost::multiprecision::cpp_int value = integer();
    if (value > kCoordLimit)
      throw range_error("exponent exceeds the coordinate limit at position " +
                        std::to_string(at));
    Int e = static_cast<Int>(value);
    return negative ? -e : e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  Scanner in(text);
  if (in.done()) in.fail("empty input");
  LaurentPoly poly;
  bool first = true;
  while (first || !in.done()) {
    // Term separator / leading sign.
    bool negative = false;
    if (in.consume('-'))
      negative = true;
    else if (!in.consume('+') && !first)
      in.fail("expected '+' or '-' between terms");
    first = false;

    Rational coefficient = 1;
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      boost::multiprecision::cpp_int numerator = in.integer();
      if (in.consume('/')) {
        const std::size_t at = in.position();
        boost::multiprecision::cpp_int denominator = in.integer();
        if (denominator == 0)
          throw parse_error("zero denominator", at);
        coefficient = Rational(numerator, denominator);
      } else {
        coefficient = Rational(numerator);
      }
      have_coefficient = true;
      // An explicit '*' may separate the coefficient from the factors.
      if (in.consume('*') && in.peek() != 'x' && in.peek() != 'y')
        in.fail("expected 'x' or 'y' after '*'");
    }

    LatticePoint exponents{0, 0};
    bool have_factor = false;
    while (in.peek() == 'x' || in.peek() == 'y') {
      const char variable = in.peek();
      in.consume(variable);
      have_factor = true;
      Int e = 1;
      if (in.consume('^')) {
        e = in.exponent();
      } else if (in.consume('*')) {
        if (in.consume('*')) {
          e = in.exponent();  // "**" is a power synonym
        } else if (in.peek() != 'x' && in.peek() != 'y') {
          in.fail("expected 'x' or 'y' after '*'");
        }
        // Otherwise the '*' separated this factor from the next one.
      }
      (variable == 'x' ? exponents.x : exponents.y) += e;
      if (exponents.x > kCoordLimit || exponents.x < -kCoordLimit ||
          exponents.y > kCoordLimit || exponents.y < -kCoordLimit)
        throw range_error("exponent exceeds the coordinate limit at position " +
                          std::to_string(in.position()));
      // Consume a '*' separating this factor from the next, if any.
      if (in.peek() == '*') {
        in.consume('*');
        if (in.peek() != 'x' && in.peek() != 'y')
          in.fail("expected 'x' or 'y' after '*'");
      }
    }

    if (!have_coefficient && !have_factor) in.fail("expected a term");
    poly.add_term(exponents, negative ? -coefficient : coefficient);
  }
  if (poly.is_zero())
    throw empty_polynomial_error("all terms cancel; the zero polynomial has no Newton polygon");
  return poly;
}

std::string format_laurent(const LaurentPoly& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    const bool negative = c < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    Rational magnitude = negative ? Rational(-c) : c;
    std::string factors;
    if (p.x != 0) {
      factors += 'x';
      if (p.x != 1) factors += "^" + std::to_string(p.x);
    }
    if (p.y != 0) {
      if (!factors.empty()) factors += '*';
      factors += 'y';
      if (p.y != 1) factors += "^" + std::to_string(p.y);
    }
    if (factors.empty()) {
      out << magnitude;
    } else if (magnitude == 1) {
      out << factors;
    } else {
      out << magnitude << '*' << factors;
    }
  }
  return out.str();
}

Polygon newton_polygon(const LaurentPoly& f) {
  if (f.is_zero())
    throw empty_polynomial_error("the zero polynomial has no Newton polygon");
  return Polygon::hull(f.support());
}

}  // namespace polybn
