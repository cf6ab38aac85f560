#include "exact/rational.hpp"

#include <cctype>

#include "exact/error.hpp"

namespace exact {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";  // U+2212

bool all_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  *this = normalize(BigInt(numerator), BigInt(denominator));
}

Rational Rational::normalize(const BigInt& p, const BigInt& q) {
  if (q == 0) throw Error(ErrorKind::zero_denominator, "zero-denominator");
  Rational r;
  r.value_ = mpq_class(p, q);
  r.value_.canonicalize();
  return r;
}

Rational Rational::dyadic(const BigInt& k, std::size_t exponent) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exponent);
  return normalize(k, den);
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with(kUnicodeMinus)) {
    negative = true;
    text.remove_prefix(kUnicodeMinus.size());
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_decimal(num) || !all_decimal(den)) {
    throw Error(ErrorKind::parse, "malformed rational '" + original + "'");
  }
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (negative) p = -p;
  return normalize(p, q);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.value_ == 0) throw Error(ErrorKind::zero_denominator, "zero-denominator");
  value_ /= other.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow2_neg(std::size_t exponent) { return Rational::dyadic(1, exponent); }

bool in_unit_interval(const Rational& a) { return Rational(-1) <= a && a <= Rational(1); }

}  // namespace exact
