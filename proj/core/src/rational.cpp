#include "imaged/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace imaged {

namespace {

using wide = __int128;

Rational from_wide(wide num, wide den) {
  if (den == 0) {
    throw std::domain_error("rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide a = num < 0 ? -num : num;
  wide b = den;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw std::overflow_error("rational: result does not fit in 64 bits");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("rational: malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational: zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) {
    throw std::invalid_argument("rational: denominator must be positive in '" + std::string(text) + "'");
  }
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) {
    ++q;
  }
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw std::domain_error("rational: division by zero");
  }
  return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const wide lhs = wide(a.num_) * b.den_;
  const wide rhs = wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool exceeds(std::uint64_t length, std::uint64_t period, const Rational& bound) {
  return wide(length) * bound.den() > wide(bound.num()) * wide(period);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace imaged
