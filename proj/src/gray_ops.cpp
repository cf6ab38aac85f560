#include "exact/gray_ops.hpp"

#include <optional>
#include <variant>

#include "exact/sd_ops.hpp"

namespace exact::gray {

namespace {

struct AtG {
  GrayG code;
};
struct AtH {
  GrayH code;
};

struct Forever {};

struct Shift {
  GrayG code;
  bool plus;
};
struct ShiftHSeed {
  GrayH code;
  bool plus;
};

struct FromDigits {
  SdStream rest;
  bool negated;
};

struct FromGray {
  std::variant<GrayG, GrayH> at;
  bool negated;
};

struct Division {
  GrayG num;
  GrayG den;
};

// Negation flips the first signed constructor and keeps its continuation:
// -(-d (x - 1) / 2) = d (x - 1) / 2, same x. Delays pass the sign inward.
auto minus_step_g = [](const AtG& s) -> GrayStep<AtG, AtH> {
  if (s.code.is_lr()) return EmitSigned<AtG>{-s.code.sign(), s.code.lr_rest()};
  return EmitDelay<AtH>{AtH{s.code.u_rest()}};
};

auto minus_step_h = [](const AtH& s) -> GrayStep<AtG, AtH> {
  if (s.code.is_fin()) return EmitSigned<AtG>{-s.code.sign(), s.code.fin_rest()};
  return EmitDelay<AtH>{AtH{s.code.d_rest()}};
};

// Image of a constructor's affine map t -> alpha t + beta, tracked with the
// running map x = (sign t + num) / 2^k.
void compose(GrayToken token, int& sign, BigInt& num) {
  switch (token) {
    case GrayToken::r:  // t -> (1 - t) / 2
      num = 2 * num + sign;
      sign = -sign;
      break;
    case GrayToken::l:  // t -> (t - 1) / 2
      num = 2 * num - sign;
      break;
    case GrayToken::fr:  // t -> (t + 1) / 2
      num = 2 * num + sign;
      break;
    case GrayToken::fl:  // t -> -(t + 1) / 2
      num = 2 * num - sign;
      sign = -sign;
      break;
    case GrayToken::u:
    case GrayToken::d:
      num = 2 * num;
      break;
  }
}

}  // namespace

Rational decode_tokens(const std::vector<GrayToken>& tokens) {
  int sign = 1;
  BigInt num = 0;
  for (GrayToken t : tokens) compose(t, sign, num);
  return Rational::dyadic(num, tokens.size());
}

Rational decode(GrayG g, std::size_t n) { return decode_tokens(take_gray_prefix(std::move(g), n)); }

GrayG encode(const Rational& a) { return from_sd(sd::encode(a)); }

GrayG minus_one() {
  auto step = [](Forever) -> GrayStep<Forever, Forever> {
    return EmitSigned<Forever>{ProperDigit::minus_one(), Forever{}};
  };
  return unfold_gray_g<Forever, Forever>(Forever{}, step, step);
}

GrayG one() { return GrayG::lr(ProperDigit::plus_one(), minus_one()); }

GrayG zero() {
  auto step = [](Forever) -> GrayStep<Forever, Forever> { return EmitDelay<Forever>{Forever{}}; };
  return unfold_gray_g<Forever, Forever>(Forever{}, step, step);
}

GrayG minus(GrayG g) { return unfold_gray_g<AtG, AtH>(AtG{std::move(g)}, minus_step_g, minus_step_h); }

GrayH minus(GrayH h) { return unfold_gray_h<AtG, AtH>(AtH{std::move(h)}, minus_step_g, minus_step_h); }

GrayH to_h(GrayG g) {
  return GrayH::defer([g = std::move(g)] {
    if (g.is_lr()) return GrayH::fin(g.sign(), minus(g.lr_rest()));
    return GrayH::d(g.u_rest());
  });
}

GrayG to_g(GrayH h) {
  return GrayG::defer([h = std::move(h)] {
    if (h.is_fin()) return GrayG::lr(h.sign(), minus(h.fin_rest()));
    return GrayG::u(h.d_rest());
  });
}

namespace {

// The delay cases recurse in mode G on the converted continuation: the
// result of shifting a mode-H code is needed under Lr/Fin, which both take
// a mode-G argument.
auto shift_step_g = [](const Shift& s) -> GrayStep<Shift, ShiftHSeed> {
  const ProperDigit out = ProperDigit::from_bool(s.plus);
  if (!s.code.is_lr()) return EmitSigned<Shift>{out, Shift{to_g(s.code.u_rest()), false}};
  if (s.code.sign().positive()) return EmitSigned<Shift>{out, minus_one()};
  return EmitSigned<Shift>{out, minus(s.code.lr_rest())};
};

auto shift_step_h = [](const ShiftHSeed& s) -> GrayStep<Shift, ShiftHSeed> {
  const ProperDigit out = ProperDigit::from_bool(s.plus);
  if (!s.code.is_fin()) return EmitSigned<Shift>{out, Shift{to_g(s.code.d_rest()), true}};
  if (s.code.sign().positive()) return EmitSigned<Shift>{out, one()};
  return EmitSigned<Shift>{out, minus(s.code.fin_rest())};
};

}  // namespace

GrayG shift_g(GrayG g, bool plus) {
  return unfold_gray_g<Shift, ShiftHSeed>(Shift{std::move(g), plus}, shift_step_g, shift_step_h);
}

GrayH shift_h(GrayH h, bool plus) {
  return unfold_gray_h<Shift, ShiftHSeed>(ShiftHSeed{std::move(h), plus}, shift_step_g, shift_step_h);
}

GrayG twice(GrayG g) {
  return GrayG::defer([g = std::move(g)] {
    if (!g.is_lr()) return to_g(g.u_rest());
    return shift_g(minus(g.lr_rest()), g.sign().positive());
  });
}

GrayG half(GrayG g) { return GrayG::u(to_h(std::move(g))); }

GrayG average(GrayG a, GrayG b) { return from_sd(sd::average(to_sd(std::move(a)), to_sd(std::move(b)))); }

GrayG aux_r(GrayG a, GrayG b) { return twice(twice(average(std::move(a), half(minus(std::move(b)))))); }

GrayG aux_l(GrayG a, GrayG b) { return twice(twice(average(std::move(a), half(std::move(b))))); }

DivStep div_step(GrayG x, GrayG y) {
  const auto by_sign = [&](ProperDigit s) {
    if (s.positive()) return DivStep{SignedDigit::plus_one(), aux_r(x, y)};
    return DivStep{SignedDigit::minus_one(), aux_l(x, y)};
  };
  if (x.is_lr()) return by_sign(x.sign());
  const GrayH v = x.u_rest();  // x = v / 2
  if (v.is_fin()) return by_sign(v.sign());
  const GrayH w = v.d_rest();  // x = w / 4
  if (w.is_fin()) return by_sign(w.sign());
  // x = U(D(D(r))) = r / 8, so 2x = r / 4 = U(D(r)).
  return DivStep{SignedDigit::zero(), GrayG::u(GrayH::d(w.d_rest()))};
}

namespace {

// Emitted digit d with remainder quotient z' = x'/y, z = (z' + d) / 2:
//   mode G: +1 -> Lr(+1, -z')   -1 -> Lr(-1, z')    0 -> U(z')
//   mode H: +1 -> Fin(+1, z')   -1 -> Fin(-1, -z')  0 -> D(z')
GrayStep<Division, Division> division_step(const Division& s, bool mode_h) {
  DivStep r = div_step(s.num, s.den);
  switch (r.digit.value()) {
    case 1: {
      GrayG rest = mode_h ? r.remainder : minus(r.remainder);
      return EmitSigned<Division>{ProperDigit::plus_one(), Division{std::move(rest), s.den}};
    }
    case -1: {
      GrayG rest = mode_h ? minus(r.remainder) : r.remainder;
      return EmitSigned<Division>{ProperDigit::minus_one(), Division{std::move(rest), s.den}};
    }
    default:
      return EmitDelay<Division>{Division{std::move(r.remainder), s.den}};
  }
}

}  // namespace

GrayG div(GrayG x, GrayG y) {
  auto step_g = [](const Division& s) { return division_step(s, false); };
  auto step_h = [](const Division& s) { return division_step(s, true); };
  return unfold_gray_g<Division, Division>(Division{std::move(x), std::move(y)}, step_g, step_h);
}

// Digit d with remainder r, value s (d + r) / 2 where s is the pending sign:
//   mode G: effective +1 -> Lr(+1, -r)   -1 -> Lr(-1, r)    0 -> U(r)
//   mode H: effective +1 -> Fin(+1, r)   -1 -> Fin(-1, -r)  0 -> D(r)
GrayG from_sd(SdStream u) {
  auto step = [](const FromDigits& s, bool mode_h) -> GrayStep<FromDigits, FromDigits> {
    int d = s.rest.head().value();
    if (s.negated) d = -d;
    if (d == 0) return EmitDelay<FromDigits>{FromDigits{s.rest.tail(), s.negated}};
    const bool flip = (d > 0) != mode_h;
    return EmitSigned<FromDigits>{ProperDigit::from_bool(d > 0), FromDigits{s.rest.tail(), s.negated != flip}};
  };
  auto step_g = [step](const FromDigits& s) { return step(s, false); };
  auto step_h = [step](const FromDigits& s) { return step(s, true); };
  return unfold_gray_g<FromDigits, FromDigits>(FromDigits{std::move(u), false}, step_g, step_h);
}

// Inverse of from_sd: Lr(+1, g) = (1 + (-x_g)) / 2, Lr(-1, g) = (-1 + x_g) / 2,
// Fin(+1, g) = (1 + x_g) / 2, Fin(-1, g) = (-1 + (-x_g)) / 2, U/D = (0 + x) / 2.
SdStream to_sd(GrayG g) {
  return unfold_sd(FromGray{std::move(g), false}, [](const FromGray& s) -> SdStep<FromGray> {
    const int outer = s.negated ? -1 : 1;
    if (const auto* g = std::get_if<GrayG>(&s.at)) {
      if (!g->is_lr()) return {SignedDigit::zero(), FromGray{g->u_rest(), s.negated}};
      const int d = g->sign().value();
      return {SignedDigit::from_int(outer * d), FromGray{g->lr_rest(), s.negated != (d > 0)}};
    }
    const auto& h = std::get<GrayH>(s.at);
    if (!h.is_fin()) return {SignedDigit::zero(), FromGray{h.d_rest(), s.negated}};
    const int d = h.sign().value();
    return {SignedDigit::from_int(outer * d), FromGray{h.fin_rest(), s.negated != (d < 0)}};
  });
}

}  // namespace exact::gray
