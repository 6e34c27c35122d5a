#pragma once

// Exact rational numbers plus a single absorbing +infinity.
// Every quantity in this library that can be fractional goes through Rat;
// floating point is never used for model values.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace anarchy {

using Rat = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", or "p/q" (q > 0, no sign). Anything else throws
// std::invalid_argument. Result is in lowest terms.
Rat parse_rat(const std::string& text);

// Lowest terms, "p/q", or the bare integer when the denominator is 1.
std::string format_rat(const Rat& value);

// Rational extended with +infinity, ordered above every finite value.
// Addition absorbs: inf + x == inf. There is deliberately no subtraction;
// inf - inf has no consistent meaning, so callers rearrange instead.
class ExtRat {
 public:
  ExtRat() : finite_(0) {}
  ExtRat(Rat value) : finite_(std::move(value)) {}
  ExtRat(int value) : finite_(value) {}
  ExtRat(long long value) : finite_(value) {}

  static ExtRat infinity() {
    ExtRat r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }

  // Throws std::domain_error when infinite.
  const Rat& finite() const;

  ExtRat& operator+=(const ExtRat& other);
  friend ExtRat operator+(ExtRat a, const ExtRat& b) {
    a += b;
    return a;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.finite_ == b.finite_;
  }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  // format_rat of the finite value, or "inf".
  std::string str() const;

 private:
  Rat finite_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& value);

}  // namespace anarchy
