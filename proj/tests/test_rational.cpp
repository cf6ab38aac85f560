#include <doctest.h>

#include "exact/digits.hpp"
#include "exact/error.hpp"
#include "exact/rational.hpp"
#include "support.hpp"

using exact::ErrorKind;
using exact::Rational;
using exact::SignedDigit;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const exact::Error& e) {
    return e.kind();
  }
  FAIL("expected an exact::Error");
  return ErrorKind::precondition;
}

}  // namespace

TEST_CASE("digit negation") {
  CHECK(exact::digit_negate(SignedDigit::plus_one()) == SignedDigit::minus_one());
  CHECK(exact::digit_negate(SignedDigit::zero()) == SignedDigit::zero());
  CHECK(exact::digit_negate(SignedDigit::minus_one()) == SignedDigit::plus_one());
  for (int v = -1; v <= 1; ++v) {
    const auto d = SignedDigit::from_int(v);
    CHECK(exact::digit_negate(exact::digit_negate(d)) == d);
  }
  CHECK(kind_of([] { SignedDigit::from_int(2); }) == ErrorKind::precondition);
}

TEST_CASE("proper digits are distinct from signed digits") {
  using exact::ProperDigit;
  CHECK(ProperDigit::from_bool(true) == ProperDigit::plus_one());
  CHECK(ProperDigit::from_bool(false).value() == -1);
  CHECK(-ProperDigit::plus_one() == ProperDigit::minus_one());
  CHECK(ProperDigit::minus_one().as_signed() == SignedDigit::minus_one());
}

TEST_CASE("normalization") {
  CHECK(Rational::normalize(2, 4) == Rational(1, 2));
  CHECK(Rational::normalize(-3, -6) == Rational(1, 2));
  const Rational z = Rational::normalize(0, 7);
  CHECK(z.numerator() == 0);
  CHECK(z.denominator() == 1);
  CHECK(Rational::normalize(3, -9).to_string() == "-1/3");
  CHECK(kind_of([] { Rational::normalize(1, 0); }) == ErrorKind::zero_denominator);
}

TEST_CASE("comparison") {
  CHECK(exact::compare(Rational(1, 3), Rational(1, 2)) == std::strong_ordering::less);
  CHECK(exact::compare(Rational(1, 2), Rational(1, 2)) == std::strong_ordering::equal);
  CHECK(exact::compare(Rational(-1, 4), Rational(-1, 2)) == std::strong_ordering::greater);
}

TEST_CASE("parsing and printing") {
  CHECK(Rational::parse("1001/3001") == Rational(1001, 3001));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("\xE2\x88\x92" "3/4") == Rational(-3, 4));
  CHECK(Rational::parse("4/8").to_string() == "1/2");
  CHECK(Rational(5).to_string() == "5");
  for (const char* bad : {"", "/", "1/", "/2", "1/2/3", "a", "1.5", "+1", "1 /2", "--1"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { Rational::parse(bad); }) == ErrorKind::parse);
  }
  CHECK(kind_of([] { Rational::parse("1/0"); }) == ErrorKind::zero_denominator);
  CHECK(kind_of([] { Rational::parse("1/-2"); }) == ErrorKind::parse);
}

TEST_CASE("exact arithmetic identities on random fractions") {
  oracle::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a(gen.pick(-50, 50), gen.pick(1, 50));
    const Rational b(gen.pick(-50, 50), gen.pick(1, 50));
    CHECK((a + b) - b == a);
    if (b.sign() != 0) CHECK((a * b) / b == a);
    CHECK(oracle::q(a + b) == oracle::q(a) + oracle::q(b));
    CHECK(oracle::q(a * b) == oracle::q(a) * oracle::q(b));
  }
  CHECK(kind_of([] { Rational(1) / Rational(0); }) == ErrorKind::zero_denominator);
}

TEST_CASE("dyadics and helpers") {
  CHECK(exact::pow2_neg(0) == Rational(1));
  CHECK(exact::pow2_neg(10) == Rational(1, 1024));
  CHECK(Rational::dyadic(3, 3) == Rational(3, 8));
  CHECK(exact::pow2_neg(200) * Rational::dyadic(exact::BigInt(1) << 200, 0) == Rational(1));
  CHECK(exact::abs(Rational(-2, 3)) == Rational(2, 3));
  CHECK(exact::in_unit_interval(Rational(-1)));
  CHECK(exact::in_unit_interval(Rational(1)));
  CHECK_FALSE(exact::in_unit_interval(Rational(1001, 1000)));
}
