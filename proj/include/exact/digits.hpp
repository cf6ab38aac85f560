#ifndef EXACT_DIGITS_HPP
#define EXACT_DIGITS_HPP

#include <cstdint>

#include "exact/error.hpp"

namespace exact {

/// A digit of the signed-digit alphabet {-1, 0, +1}.
class SignedDigit {
 public:
  constexpr SignedDigit() = default;

  static constexpr SignedDigit minus_one() { return SignedDigit(-1); }
  static constexpr SignedDigit zero() { return SignedDigit(0); }
  static constexpr SignedDigit plus_one() { return SignedDigit(1); }

  /// Throws Error(precondition) unless v is -1, 0 or +1.
  static SignedDigit from_int(int v) {
    if (v < -1 || v > 1) {
      throw Error(ErrorKind::precondition, "signed digit out of range");
    }
    return SignedDigit(static_cast<std::int8_t>(v));
  }

  constexpr int value() const { return value_; }
  constexpr SignedDigit operator-() const { return SignedDigit(static_cast<std::int8_t>(-value_)); }

  friend constexpr bool operator==(SignedDigit, SignedDigit) = default;

 private:
  explicit constexpr SignedDigit(std::int8_t v) : value_(v) {}

  std::int8_t value_ = 0;
};

constexpr SignedDigit digit_negate(SignedDigit d) { return -d; }

/// A proper signed digit, i.e. one of {-1, +1}. Carried by the Gray-code
/// constructors Lr and Fin; the boolean `true` corresponds to +1.
class ProperDigit {
 public:
  static constexpr ProperDigit minus_one() { return ProperDigit(false); }
  static constexpr ProperDigit plus_one() { return ProperDigit(true); }
  static constexpr ProperDigit from_bool(bool positive) { return ProperDigit(positive); }

  constexpr bool positive() const { return positive_; }
  constexpr int value() const { return positive_ ? 1 : -1; }
  constexpr SignedDigit as_signed() const {
    return positive_ ? SignedDigit::plus_one() : SignedDigit::minus_one();
  }
  constexpr ProperDigit operator-() const { return ProperDigit(!positive_); }

  friend constexpr bool operator==(ProperDigit, ProperDigit) = default;

 private:
  explicit constexpr ProperDigit(bool positive) : positive_(positive) {}

  bool positive_;
};

}  // namespace exact

#endif  // EXACT_DIGITS_HPP
