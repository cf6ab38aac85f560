// Test-side oracles and random inputs. Everything here works on raw mpq_class
// values so that it does not share code paths with the library under test.
#ifndef EXACT_TESTS_SUPPORT_HPP
#define EXACT_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "exact/digits.hpp"
#include "exact/gray.hpp"
#include "exact/rational.hpp"

namespace oracle {

inline mpq_class q(const exact::Rational& r) {
  mpq_class out(r.numerator(), r.denominator());
  out.canonicalize();
  return out;
}

inline exact::Rational r(const mpq_class& v) { return exact::Rational::normalize(v.get_num(), v.get_den()); }

inline mpq_class two_pow_neg(std::size_t n) {
  mpz_class den = 1;
  den <<= n;
  return mpq_class(mpz_class(1), den);
}

inline mpq_class absq(const mpq_class& v) { return v < 0 ? mpq_class(-v) : v; }

/// sum d_k 2^-k, accumulated from the last digit inward.
inline mpq_class decode_sd(const std::vector<exact::SignedDigit>& digits) {
  mpq_class acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = (acc + it->value()) / 2;
  return acc;
}

/// Canonical encoder rule, recomputed: +1 if a >= 1/4, -1 if a <= -1/4, else 0.
inline std::vector<int> encode_sd(mpq_class a, std::size_t n) {
  std::vector<int> out;
  const mpq_class quarter(1, 4);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = a >= quarter ? 1 : (a <= -quarter ? -1 : 0);
    out.push_back(d);
    a = 2 * a - d;
  }
  return out;
}

/// Applies the constructor maps right to left to the centre 0 of [-1, 1].
inline mpq_class decode_gray(const std::vector<exact::GrayToken>& tokens) {
  using exact::GrayToken;
  mpq_class x = 0;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    switch (*it) {
      case GrayToken::r:  // Lr(+1): -(x - 1) / 2
        x = (1 - x) / 2;
        break;
      case GrayToken::l:  // Lr(-1): (x - 1) / 2
        x = (x - 1) / 2;
        break;
      case GrayToken::fr:  // Fin(+1): (x + 1) / 2
        x = (x + 1) / 2;
        break;
      case GrayToken::fl:  // Fin(-1): -(x + 1) / 2
        x = -(x + 1) / 2;
        break;
      case GrayToken::u:
      case GrayToken::d:
        x = x / 2;
        break;
    }
  }
  return x;
}

inline bool within(const mpq_class& a, const mpq_class& b, std::size_t n) { return absq(a - b) <= two_pow_neg(n); }

/// Uniform-ish rationals in [lo, hi]: a random denominator (small, dyadic or
/// large) and a numerator drawn from the admissible range.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  mpq_class in(const mpq_class& lo, const mpq_class& hi) {
    mpz_class den;
    switch (pick(0, 3)) {
      case 0:
        den = pick(1, 64);
        break;
      case 1:
        den = mpz_class(1) << pick(0, 20);
        break;
      case 2:
        den = pick(1, 100000);
        break;
      default:
        den = mpz_class(pick(1, 1000000000)) * pick(1, 1000000000) + 1;
        break;
    }
    mpz_class low, high;
    mpz_class t = lo.get_num() * den;
    mpz_cdiv_q(low.get_mpz_t(), t.get_mpz_t(), lo.get_den().get_mpz_t());
    t = hi.get_num() * den;
    mpz_fdiv_q(high.get_mpz_t(), t.get_mpz_t(), hi.get_den().get_mpz_t());
    if (high < low) return lo;
    mpz_class span = high - low + 1;
    mpz_class offset;
    // 64 random bits are plenty for the spans used here
    offset = mpz_class(std::to_string(rng_()));
    offset %= span;
    mpq_class out(low + offset, den);
    out.canonicalize();
    return out;
  }

  mpq_class unit() { return in(-1, 1); }

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // EXACT_TESTS_SUPPORT_HPP
