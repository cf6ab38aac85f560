#include "exact/creal.hpp"

#include <algorithm>

#include "exact/sd_ops.hpp"

namespace exact {

CReal CReal::from_rational(const Rational& a) {
  return CReal([a](std::size_t) { return a; }, [](std::size_t) { return std::size_t{0}; });
}

CReal CReal::from_sd(SdStream u) {
  return CReal([u = std::move(u)](std::size_t n) { return sd::decode(u, n); }, [](std::size_t p) { return p; });
}

std::size_t CReal::bound_exponent() const {
  const Rational limit = abs(approx(modulus(0))) + Rational(1);
  std::size_t b = 0;
  Rational power(1);
  while (power < limit) {
    power *= Rational(2);
    ++b;
  }
  return b;
}

CReal operator+(const CReal& x, const CReal& y) {
  return CReal([x, y](std::size_t n) { return x.approx(n) + y.approx(n); },
               [x, y](std::size_t p) { return std::max(x.modulus(p + 1), y.modulus(p + 1)); });
}

CReal operator-(const CReal& x, const CReal& y) {
  return CReal([x, y](std::size_t n) { return x.approx(n) - y.approx(n); },
               [x, y](std::size_t p) { return std::max(x.modulus(p + 1), y.modulus(p + 1)); });
}

// |a_n b_n - a_m b_m| <= |a_n| |b_n - b_m| + |b_m| |a_n - a_m|, with the
// factors bounded by 2^B past index M(0).
CReal operator*(const CReal& x, const CReal& y) {
  const std::size_t bx = x.bound_exponent();
  const std::size_t by = y.bound_exponent();
  return CReal([x, y](std::size_t n) { return x.approx(n) * y.approx(n); },
               [x, y, bx, by](std::size_t p) {
                 return std::max({x.modulus(p + 1 + by), y.modulus(p + 1 + bx), x.modulus(0), y.modulus(0)});
               });
}

CReal operator-(const CReal& x) {
  return CReal([x](std::size_t n) { return -x.approx(n); }, [x](std::size_t p) { return x.modulus(p); });
}

CReal abs(const CReal& x) {
  return CReal([x](std::size_t n) { return abs(x.approx(n)); }, [x](std::size_t p) { return x.modulus(p); });
}

bool leq_up_to(const CReal& x, const CReal& y, std::size_t p) {
  return x.approx(x.modulus(p + 1)) <= y.approx(y.modulus(p + 1)) + pow2_neg(p);
}

}  // namespace exact
