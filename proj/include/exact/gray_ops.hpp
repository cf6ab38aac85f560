#ifndef EXACT_GRAY_OPS_HPP
#define EXACT_GRAY_OPS_HPP

#include <cstddef>
#include <utility>

#include "exact/gray.hpp"
#include "exact/rational.hpp"
#include "exact/sd_stream.hpp"

namespace exact::gray {

/// Composes the affine maps of the first n constructors and returns the
/// midpoint of the image of [-1, 1]; within 2^-n of the denoted value.
Rational decode(GrayG g, std::size_t n);

/// Same midpoint for an already materialized constructor prefix.
Rational decode_tokens(const std::vector<GrayToken>& tokens);

/// Gray code of a rational in [-1, 1] (conversion of the canonical
/// signed-digit code). Throws Error(not_in_unit_interval).
GrayG encode(const Rational& a);

/// Lr(+1, Lr(-1, Lr(-1, ...))).
GrayG one();
/// Lr(-1, Lr(-1, ...)).
GrayG minus_one();
/// U(D(D(...))).
GrayG zero();

/// Negation: flips the sign of the first Lr or Fin, after any delays.
GrayG minus(GrayG g);
GrayH minus(GrayH h);

/// Same value, other mode; rewrites only the outermost constructor.
GrayH to_h(GrayG g);
GrayG to_g(GrayH h);

/// For x_g <= 0: x_g + 1 when `plus` is true, -(x_g + 1) otherwise.
GrayG shift_g(GrayG g, bool plus);
GrayH shift_h(GrayH h, bool plus);

/// 2 x_g, for |x_g| <= 1/2.
GrayG twice(GrayG g);

/// U(to_h(g)), denoting x_g / 2.
GrayG half(GrayG g);

/// (x_a + x_b) / 2, computed through the signed-digit average.
GrayG average(GrayG a, GrayG b);

/// 2 x_a - x_b and 2 x_a + x_b, under the same preconditions as sd::aux_r
/// and sd::aux_l.
GrayG aux_r(GrayG a, GrayG b);
GrayG aux_l(GrayG a, GrayG b);

struct DivStep {
  SignedDigit digit;
  GrayG remainder;  // x' with |x'| <= y and x / y = (x' / y + digit) / 2
};

/// One division step: classifies the sign of x from at most three
/// constructors and returns (d, 2x - d y).
DivStep div_step(GrayG x, GrayG y);

/// x / y for 1/4 <= x_y and |x_x| <= x_y.
GrayG div(GrayG x, GrayG y);

/// Denotation-preserving conversions between the two codings; one output
/// constructor per input digit and vice versa.
GrayG from_sd(SdStream u);
SdStream to_sd(GrayG g);

}  // namespace exact::gray

#endif  // EXACT_GRAY_OPS_HPP
