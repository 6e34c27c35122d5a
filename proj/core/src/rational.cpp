#include "anarchy/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace anarchy {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::size_t start = 0;
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    start = 1;
  }
  const std::size_t slash = text.find('/', start);
  const auto bad = [&] {
    return std::invalid_argument("not a rational: \"" + text + "\"");
  };
  Rat result;
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size())) throw bad();
    result = Rat(boost::multiprecision::cpp_int(text.substr(start)));
  } else {
    if (!all_digits(text, start, slash)) throw bad();
    if (!all_digits(text, slash + 1, text.size())) throw bad();
    boost::multiprecision::cpp_int num(text.substr(start, slash - start));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
    result = Rat(num, den);
  }
  return negative ? Rat(-result) : result;
}

std::string format_rat(const Rat& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

const Rat& ExtRat::finite() const {
  if (infinite_) throw std::domain_error("value is infinite");
  return finite_;
}

ExtRat& ExtRat::operator+=(const ExtRat& other) {
  if (other.infinite_) {
    infinite_ = true;
    finite_ = 0;
  } else if (!infinite_) {
    finite_ += other.finite_;
  }
  return *this;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  if (a.finite_ < b.finite_) return std::strong_ordering::less;
  if (a.finite_ == b.finite_) return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

std::string ExtRat::str() const {
  return infinite_ ? "inf" : format_rat(finite_);
}

std::ostream& operator<<(std::ostream& os, const ExtRat& value) {
  return os << value.str();
}

}  // namespace anarchy
