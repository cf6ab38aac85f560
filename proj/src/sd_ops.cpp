#include "exact/sd_ops.hpp"

#include <utility>

#include "exact/error.hpp"

namespace exact::sd {

namespace {

struct Cursor {
  SdStream rest;
};

struct Constant {};

struct Carry {
  int carry;  // in [-2, 2]; the state denotes (carry + x_u + x_v) / 4
  SdStream u;
  SdStream v;
};

struct Quotient {
  SdStream num;
  SdStream den;
};

SignedDigit canonical_digit(const Rational& a) {
  static const Rational quarter(1, 4);
  if (a >= quarter) return SignedDigit::plus_one();
  if (a <= -quarter) return SignedDigit::minus_one();
  return SignedDigit::zero();
}

SdStream constant(SignedDigit d) {
  return unfold_sd(Constant{}, [d](Constant) { return SdStep<Constant>{d, Constant{}}; });
}

}  // namespace

SdStream encode(const Rational& a) {
  if (!in_unit_interval(a)) throw Error(ErrorKind::not_in_unit_interval, "not-in-unit-interval");
  return unfold_sd(a, [](const Rational& r) {
    const SignedDigit d = canonical_digit(r);
    return SdStep<Rational>{d, r * Rational(2) - Rational(d.value())};
  });
}

Rational decode_digits(const std::vector<SignedDigit>& digits) {
  BigInt num = 0;
  for (SignedDigit d : digits) num = 2 * num + d.value();
  return Rational::dyadic(num, digits.size());
}

Rational decode(SdStream u, std::size_t n) { return decode_digits(take_prefix(std::move(u), n)); }

SdStream zero() { return constant(SignedDigit::zero()); }

SdStream one() { return constant(SignedDigit::plus_one()); }

SdStream negate(SdStream u) {
  return unfold_sd(Cursor{std::move(u)},
                   [](const Cursor& c) { return SdStep<Cursor>{-c.rest.head(), Cursor{c.rest.tail()}}; });
}

SdStream half(SdStream u) { return SdStream::cons(SignedDigit::zero(), std::move(u)); }

// add1(+1::u) = 1,1,1,...   add1(0::u) = +1 :: add1(u)   add1(-1::u) = +1 :: u
SdStream add1(SdStream u) {
  return unfold_sd(Cursor{std::move(u)}, [](const Cursor& c) -> SdStep<Cursor> {
    switch (c.rest.head().value()) {
      case 1:
        return {SignedDigit::plus_one(), one()};
      case 0:
        return {SignedDigit::plus_one(), Cursor{c.rest.tail()}};
      default:
        return {SignedDigit::plus_one(), c.rest.tail()};
    }
  });
}

// sub1(+1::u) = -1 :: u   sub1(0::u) = -1 :: sub1(u)   sub1(-1::u) = -1,-1,...
SdStream sub1(SdStream u) {
  return unfold_sd(Cursor{std::move(u)}, [](const Cursor& c) -> SdStep<Cursor> {
    switch (c.rest.head().value()) {
      case 1:
        return {SignedDigit::minus_one(), c.rest.tail()};
      case 0:
        return {SignedDigit::minus_one(), Cursor{c.rest.tail()}};
      default:
        return {SignedDigit::minus_one(), constant(SignedDigit::minus_one())};
    }
  });
}

SdStream twice(SdStream u) {
  return SdStream::defer([u = std::move(u)] {
    switch (u.head().value()) {
      case 1:
        return add1(u.tail());
      case 0:
        return u.tail();
      default:
        return sub1(u.tail());
    }
  });
}

SdStream average(SdStream u, SdStream v) {
  return SdStream::defer([u = std::move(u), v = std::move(v)] {
    Carry seed{u.head().value() + v.head().value(), u.tail(), v.tail()};
    return unfold_sd(std::move(seed), [](const Carry& s) {
      const int k = 2 * s.carry + s.u.head().value() + s.v.head().value();
      const int d = k >= 2 ? 1 : (k <= -2 ? -1 : 0);
      return SdStep<Carry>{SignedDigit::from_int(d), Carry{k - 4 * d, s.u.tail(), s.v.tail()}};
    });
  });
}

SdStream aux_r(SdStream u, SdStream v) {
  return twice(twice(average(std::move(u), half(negate(std::move(v))))));
}

SdStream aux_l(SdStream u, SdStream v) {
  return twice(twice(average(std::move(u), half(std::move(v)))));
}

SdStream div(SdStream u, SdStream v) {
  return unfold_sd(Quotient{std::move(u), std::move(v)}, [](const Quotient& q) -> SdStep<Quotient> {
    // Sign of the numerator from at most three leading digits.
    SdStream probe = q.num;
    int sign = 0;
    for (int i = 0; i < 3 && sign == 0; ++i) {
      sign = probe.head().value();
      if (sign == 0 && i < 2) probe = probe.tail();
    }
    if (sign > 0) return {SignedDigit::plus_one(), Quotient{aux_r(q.num, q.den), q.den}};
    if (sign < 0) return {SignedDigit::minus_one(), Quotient{aux_l(q.num, q.den), q.den}};
    return {SignedDigit::zero(), Quotient{twice(q.num), q.den}};
  });
}

}  // namespace exact::sd
