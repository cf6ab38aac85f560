#ifndef EXACT_CREAL_HPP
#define EXACT_CREAL_HPP

#include <cstddef>
#include <functional>

#include "exact/rational.hpp"
#include "exact/sd_stream.hpp"

namespace exact {

/// A real number as a Cauchy sequence of rationals with a modulus:
/// |a_n - a_m| <= 2^-p whenever n, m >= modulus(p).
class CReal {
 public:
  using Approx = std::function<Rational(std::size_t)>;
  using Modulus = std::function<std::size_t(std::size_t)>;

  CReal(Approx approx, Modulus modulus) : approx_(std::move(approx)), modulus_(std::move(modulus)) {}

  /// Constant sequence, modulus 0.
  static CReal from_rational(const Rational& a);

  /// a_n = partial decode of u at depth n, modulus p.
  static CReal from_sd(SdStream u);

  Rational approx(std::size_t n) const { return approx_(n); }
  std::size_t modulus(std::size_t p) const { return modulus_(p); }

  /// An approximation within 2^-p of the limit.
  Rational at_precision(std::size_t p) const { return approx_(modulus_(p)); }

  /// Smallest b >= 0 with |a_n| <= 2^b for every n >= modulus(0).
  std::size_t bound_exponent() const;

 private:
  Approx approx_;
  Modulus modulus_;
};

CReal operator+(const CReal& x, const CReal& y);
CReal operator-(const CReal& x, const CReal& y);
CReal operator*(const CReal& x, const CReal& y);
CReal operator-(const CReal& x);
CReal abs(const CReal& x);

/// One-precision check of x <= y: a_{M(p+1)} <= b_{N(p+1)} + 2^-p.
/// x <= y holds iff this passes for every p.
bool leq_up_to(const CReal& x, const CReal& y, std::size_t p);

}  // namespace exact

#endif  // EXACT_CREAL_HPP
