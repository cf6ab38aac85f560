#ifndef EXACT_SD_OPS_HPP
#define EXACT_SD_OPS_HPP

#include <cstddef>

#include "exact/rational.hpp"
#include "exact/sd_stream.hpp"

// Signed-digit stream arithmetic on [-1, 1].
//
// Semantic preconditions (x_u <= 0 for add1 and so on) are the caller's
// responsibility: they are undecidable on streams. Violating one still yields
// a well-formed digit stream, but it no longer denotes the stated value.
namespace exact::sd {

/// Canonical code of a rational in [-1, 1]: digit +1 when a >= 1/4, -1 when
/// a <= -1/4, 0 otherwise; then continue with 2a - d.
/// Throws Error(not_in_unit_interval) for |a| > 1.
SdStream encode(const Rational& a);

/// Partial sum d1/2 + ... + dn/2^n; within 2^-n of the denoted value.
Rational decode(SdStream u, std::size_t n);

/// Same sum over an already materialized prefix.
Rational decode_digits(const std::vector<SignedDigit>& digits);

/// Constant stream of zeros (denotes 0).
SdStream zero();

/// Constant stream of +1 (denotes 1).
SdStream one();

/// Digitwise negation.
SdStream negate(SdStream u);

/// 0 :: u, denoting x_u / 2.
SdStream half(SdStream u);

/// x_u + 1, for x_u <= 0.
SdStream add1(SdStream u);

/// x_u - 1, for x_u >= 0.
SdStream sub1(SdStream u);

/// 2 x_u, for |x_u| <= 1/2.
SdStream twice(SdStream u);

/// (x_u + x_v) / 2 by a carry automaton. n output digits read n+1 digits of
/// each input.
SdStream average(SdStream u, SdStream v);

/// 2 x_u - x_v, for 1/4 <= x_v, |x_u| <= x_v, 0 <= x_u.
SdStream aux_r(SdStream u, SdStream v);

/// 2 x_u + x_v, for 1/4 <= x_v, |x_u| <= x_v, x_u <= 0.
SdStream aux_l(SdStream u, SdStream v);

/// x_u / x_v, for 1/4 <= x_v and |x_u| <= x_v.
///
/// Each output digit is chosen from the first three digits of the current
/// numerator: patterns 1.., 01., 001 emit +1 and continue with aux_r; 000
/// emits 0 and continues with twice; -1.., 0-1., 00-1 emit -1 and continue
/// with aux_l. The first n digits read at most 3n digits of u and 3n-1 of v.
SdStream div(SdStream u, SdStream v);

}  // namespace exact::sd

#endif  // EXACT_SD_OPS_HPP
