#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace imaged {

/// Exact fraction with a positive denominator, always kept in lowest terms.
///
/// Comparisons cross-multiply in 128-bit integers, so no rounding ever
/// enters an exponent test.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  /// Accepts "p/q" or a plain integer. Decimal notation is rejected.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }

  /// Smallest integer n with n >= *this.
  [[nodiscard]] std::int64_t ceil() const;
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  [[nodiscard]] std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// True iff length / period > bound, decided in integers.
[[nodiscard]] bool exceeds(std::uint64_t length, std::uint64_t period, const Rational& bound);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace imaged
