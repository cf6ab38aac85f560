#ifndef EXACT_RATIONAL_HPP
#define EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace exact {

using BigInt = mpz_class;

/// Exact fraction with arbitrary-precision numerator and denominator.
/// Always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(long numerator, long denominator);

  /// Reduces p/q. Throws Error(zero_denominator) when q == 0.
  static Rational normalize(const BigInt& p, const BigInt& q);

  /// k / 2^exponent.
  static Rational dyadic(const BigInt& k, std::size_t exponent);

  /// Parses "P", "P/Q", "-P/Q" (an ASCII '-' or U+2212 minus sign).
  /// Throws Error(parse) on malformed text, Error(zero_denominator) on Q == 0.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }

  /// "P/Q", or "P" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws Error(zero_denominator) on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// Exact three-way comparison.
std::strong_ordering compare(const Rational& a, const Rational& b);

Rational abs(const Rational& a);

/// 2^-exponent.
Rational pow2_neg(std::size_t exponent);

/// True when -1 <= a <= 1.
bool in_unit_interval(const Rational& a);

}  // namespace exact

#endif  // EXACT_RATIONAL_HPP
