// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All tolerances and sample sizes are fixed below.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "exact/commands.hpp"
#include "exact/creal.hpp"
#include "exact/gray_ops.hpp"
#include "exact/sd_ops.hpp"
#include "exact/stack.hpp"
#include "support.hpp"

using exact::CReal;
using exact::GrayG;
using exact::SdStream;
namespace sd = exact::sd;
namespace gray = exact::gray;
using oracle::Gen;
using oracle::q;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("%s %d %s: %s%s%s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              o.pass ? "" : "; first failure: ", o.pass ? "" : o.first_failure.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SdStream enc_sd(const mpq_class& a) { return sd::encode(oracle::r(a)); }
GrayG enc_gray(const mpq_class& a) { return gray::encode(oracle::r(a)); }

// y in [1/4, 1], x in [-y, y]
std::pair<mpq_class, mpq_class> division_inputs(Gen& gen) {
  const mpq_class y = gen.in(mpq_class(1, 4), 1);
  return {gen.in(-y, y), y};
}

// 1. encode/decode soundness
void criterion1() {
  constexpr int kSamples = 1000;
  constexpr std::size_t kMaxN = 64;
  constexpr double kLimitSeconds = 10.0;
  Gen gen(1001);
  Outcome o;
  const auto start = Clock::now();
  for (int i = 0; i < kSamples; ++i) {
    const mpq_class a = gen.unit();
    const SdStream u = enc_sd(a);
    for (std::size_t n = 1; n <= kMaxN; ++n) {
      if (!oracle::within(q(sd::decode(u, n)), a, n)) o.fail(fmt("a=%s n=%zu", a.get_str().c_str(), n));
    }
  }
  const double t = seconds_since(start);
  if (t >= kLimitSeconds) o.fail(fmt("took %.2f s", t));
  o.detail = fmt("%d rationals x n=1..%zu within 2^-n, %.3f s (limit %.0f s)", kSamples, kMaxN, t, kLimitSeconds);
  report(1, "encoder/decoder soundness", o);
}

// 2. every operation against the exact oracle
void criterion2() {
  constexpr int kSamples = 200;
  constexpr std::size_t kN = 100;
  constexpr double kLimitSeconds = 60.0;
  using Inputs = std::function<std::pair<mpq_class, mpq_class>(Gen&)>;
  using Sem = std::function<mpq_class(const mpq_class&, const mpq_class&)>;
  struct Op {
    const char* name;
    Inputs inputs;
    Sem f;
    std::function<SdStream(SdStream, SdStream)> on_sd;
    std::function<GrayG(GrayG, GrayG)> on_gray;
  };
  const Inputs any1 = [](Gen& g) { return std::pair{g.unit(), mpq_class(0)}; };
  const Inputs aux_r_in = [](Gen& g) {
    const mpq_class y = g.in(mpq_class(1, 4), 1);
    return std::pair{g.in(0, y), y};
  };
  const Inputs aux_l_in = [](Gen& g) {
    const mpq_class y = g.in(mpq_class(1, 4), 1);
    return std::pair{g.in(-y, 0), y};
  };
  const std::vector<Op> ops = {
      {"negate", any1, [](auto& x, auto&) { return mpq_class(-x); }, [](SdStream u, SdStream) { return sd::negate(u); },
       [](GrayG a, GrayG) { return gray::minus(a); }},
      {"half", any1, [](auto& x, auto&) { return mpq_class(x / 2); }, [](SdStream u, SdStream) { return sd::half(u); },
       [](GrayG a, GrayG) { return gray::half(a); }},
      {"add1", [](Gen& g) { return std::pair{g.in(-1, 0), mpq_class(0)}; }, [](auto& x, auto&) { return mpq_class(x + 1); },
       [](SdStream u, SdStream) { return sd::add1(u); }, [](GrayG a, GrayG) { return gray::shift_g(a, true); }},
      {"sub1", [](Gen& g) { return std::pair{g.in(0, 1), mpq_class(0)}; }, [](auto& x, auto&) { return mpq_class(x - 1); },
       [](SdStream u, SdStream) { return sd::sub1(u); },
       [](GrayG a, GrayG) { return gray::shift_g(gray::minus(a), false); }},
      {"double", [](Gen& g) { return std::pair{g.in(mpq_class(-1, 2), mpq_class(1, 2)), mpq_class(0)}; },
       [](auto& x, auto&) { return mpq_class(2 * x); }, [](SdStream u, SdStream) { return sd::twice(u); },
       [](GrayG a, GrayG) { return gray::twice(a); }},
      {"average", [](Gen& g) { return std::pair{g.unit(), g.unit()}; },
       [](auto& x, auto& y) { return mpq_class((x + y) / 2); }, sd::average, gray::average},
      {"auxR", aux_r_in, [](auto& x, auto& y) { return mpq_class(2 * x - y); }, sd::aux_r, gray::aux_r},
      {"auxL", aux_l_in, [](auto& x, auto& y) { return mpq_class(2 * x + y); }, sd::aux_l, gray::aux_l},
  };
  Gen gen(2002);
  Outcome o;
  const auto start = Clock::now();
  int checks = 0;
  for (const Op& op : ops) {
    for (int i = 0; i < kSamples; ++i) {
      const auto [x, y] = op.inputs(gen);
      const mpq_class expect = op.f(x, y);
      const mpq_class got_sd = q(sd::decode(op.on_sd(enc_sd(x), enc_sd(y)), kN));
      const mpq_class got_gray = q(gray::decode(op.on_gray(enc_gray(x), enc_gray(y)), kN));
      if (!oracle::within(got_sd, expect, kN)) o.fail(fmt("%s (sd) x=%s y=%s", op.name, x.get_str().c_str(), y.get_str().c_str()));
      if (!oracle::within(got_gray, expect, kN))
        o.fail(fmt("%s (gray) x=%s y=%s", op.name, x.get_str().c_str(), y.get_str().c_str()));
      checks += 2;
    }
  }
  const double t = seconds_since(start);
  if (t >= kLimitSeconds) o.fail(fmt("took %.2f s", t));
  o.detail = fmt("%d checks (8 ops x 2 codings x %d inputs) within 2^-%zu, %.3f s (limit %.0f s)", checks, kSamples, kN, t,
                 kLimitSeconds);
  report(2, "operation oracle suite", o);
}

// 3. division, the 19-digit case and random inputs
void criterion3() {
  constexpr std::size_t kShortDigits = 19;
  constexpr int kSamples = 200;
  constexpr std::size_t kN = 200;
  Outcome o;
  const mpq_class x0(1001, 3001), y0(10001, 20001);
  const mpq_class quotient = x0 / y0;
  const auto start = Clock::now();
  const mpq_class d_sd = oracle::decode_sd(exact::take_prefix(sd::div(enc_sd(x0), enc_sd(y0)), kShortDigits));
  const mpq_class d_gray = oracle::decode_gray(exact::take_gray_prefix(gray::div(enc_gray(x0), enc_gray(y0)), kShortDigits));
  const double t19 = seconds_since(start);
  if (!oracle::within(d_sd, quotient, kShortDigits)) o.fail("sd 19-digit case");
  if (!oracle::within(d_gray, quotient, kShortDigits)) o.fail("gray 19-digit case");
  Gen gen(3003);
  for (int i = 0; i < kSamples; ++i) {
    const auto [x, y] = division_inputs(gen);
    if (!oracle::within(q(sd::decode(sd::div(enc_sd(x), enc_sd(y)), kN)), x / y, kN))
      o.fail(fmt("sd x=%s y=%s", x.get_str().c_str(), y.get_str().c_str()));
    if (!oracle::within(q(gray::decode(gray::div(enc_gray(x), enc_gray(y)), kN)), x / y, kN))
      o.fail(fmt("gray x=%s y=%s", x.get_str().c_str(), y.get_str().c_str()));
  }
  o.detail = fmt("1001/3001 / 10001/20001 to %zu symbols in both codings (%.4f s), %d random pairs at n=%zu in both codings",
                 kShortDigits, t19, kSamples, kN);
  report(3, "division correctness", o);
}

// 4. look-ahead. Counts after forcing n output digits are read off one
// memoized run: forcing digit n+1 never changes what was forced for 1..n.
void criterion4() {
  constexpr int kSamples = 100;
  constexpr std::size_t kMaxN = 50;
  Gen gen(4004);
  Outcome o;
  std::uint64_t worst_div_u = 0;
  const auto check = [&](const char* name, const SdStream& out, const exact::ForceCounter& cu,
                         const exact::ForceCounter& cv, auto bound_u, auto bound_v) {
    SdStream s = out;
    for (std::size_t n = 1; n <= kMaxN; ++n) {
      s.head();
      s = s.tail();
      if (cu.value() > bound_u(n)) o.fail(fmt("%s u: %llu > %zu at n=%zu", name, (unsigned long long)cu.value(), bound_u(n), n));
      if (cv.value() > bound_v(n)) o.fail(fmt("%s v: %llu > %zu at n=%zu", name, (unsigned long long)cv.value(), bound_v(n), n));
    }
  };
  for (int i = 0; i < kSamples; ++i) {
    const auto [x, y] = division_inputs(gen);
    const mpq_class ax = oracle::absq(x);
    {
      auto u = exact::with_counter(enc_sd(gen.unit()));
      auto v = exact::with_counter(enc_sd(gen.unit()));
      check("average", sd::average(u.stream, v.stream), u.counter, v.counter, [](std::size_t n) { return n + 1; },
            [](std::size_t n) { return n + 1; });
    }
    {
      auto u = exact::with_counter(enc_sd(ax));
      auto v = exact::with_counter(enc_sd(y));
      check("auxR", sd::aux_r(u.stream, v.stream), u.counter, v.counter, [](std::size_t n) { return n + 3; },
            [](std::size_t n) { return n + 2; });
    }
    {
      auto u = exact::with_counter(enc_sd(-ax));
      auto v = exact::with_counter(enc_sd(y));
      check("auxL", sd::aux_l(u.stream, v.stream), u.counter, v.counter, [](std::size_t n) { return n + 3; },
            [](std::size_t n) { return n + 2; });
    }
    {
      auto u = exact::with_counter(enc_sd(x));
      auto v = exact::with_counter(enc_sd(y));
      check("div", sd::div(u.stream, v.stream), u.counter, v.counter, [](std::size_t n) { return 3 * n; },
            [](std::size_t n) { return 3 * n - 1; });
      worst_div_u = std::max(worst_div_u, u.counter.value());
    }
  }
  o.detail = fmt("%d inputs, n=1..%zu: average<=n+1, auxR/auxL<=n+3 (u) n+2 (v), div<=3n (u) 3n-1 (v); max div u-forced at n=%zu: %llu",
                 kSamples, kMaxN, kMaxN, (unsigned long long)worst_div_u);
  report(4, "look-ahead bounds", o);
}

// 5. Gray division against signed-digit division
void criterion5() {
  constexpr int kSamples = 200;
  constexpr std::size_t kN = 100;
  Gen gen(5005);
  Outcome o;
  for (int i = 0; i < kSamples; ++i) {
    const auto [x, y] = division_inputs(gen);
    const SdStream u = enc_sd(x), v = enc_sd(y);
    const mpq_class via_gray = q(sd::decode(gray::to_sd(gray::div(gray::from_sd(u), gray::from_sd(v))), kN));
    const mpq_class direct = q(sd::decode(sd::div(u, v), kN));
    if (!oracle::within(via_gray, direct, kN - 1)) o.fail(fmt("x=%s y=%s", x.get_str().c_str(), y.get_str().c_str()));
  }
  o.detail = fmt("%d pairs, decoded values agree within 2^(1-%zu)", kSamples, kN);
  report(5, "cross-coding consistency", o);
}

// 6. quadratic growth of division time
void criterion6() {
  constexpr double kLow = 1.5, kHigh = 2.5;
  Outcome o;
  const auto bench = exact::cli::run_bench({100, 500, 2000}, exact::cli::Coding::sd);
  std::string rows;
  for (const auto& r : bench.rows) rows += fmt("%zu:%.4fs ", r.digits, r.seconds);
  const double e = bench.exponent.value_or(0.0);
  if (!(e >= kLow && e <= kHigh)) o.fail(fmt("exponent %.3f", e));
  o.detail = fmt("%sexponent=%.3f (required [%.1f, %.1f])", rows.c_str(), e, kLow, kHigh);
  report(6, "runtime scaling", o);
}

// 7. involutions, mode round trips, single evaluation
void criterion7() {
  constexpr std::size_t kInvolutionDepth = 200;
  constexpr std::size_t kRoundTripDepth = 50;
  constexpr int kSamples = 50;
  Gen gen(7007);
  Outcome o;
  for (int i = 0; i < kSamples; ++i) {
    const mpq_class a = gen.unit();
    const SdStream u = enc_sd(a);
    if (exact::take_prefix(sd::negate(sd::negate(u)), kInvolutionDepth) != exact::take_prefix(u, kInvolutionDepth))
      o.fail("negate involution");
    const GrayG g = enc_gray(a);
    if (exact::take_gray_prefix(gray::minus(gray::minus(g)), kInvolutionDepth) !=
        exact::take_gray_prefix(g, kInvolutionDepth))
      o.fail("minus involution");
    if (gray::decode(gray::to_g(gray::to_h(g)), kRoundTripDepth) != gray::decode(g, kRoundTripDepth))
      o.fail("to_g after to_h");
    const exact::GrayH h = gray::to_h(g);
    // decode a mode-H code through a U prefix on both sides
    if (gray::decode(GrayG::u(gray::to_h(gray::to_g(h))), kRoundTripDepth + 1) !=
        gray::decode(GrayG::u(h), kRoundTripDepth + 1))
      o.fail("to_h after to_g");
  }
  // single evaluation: re-forcing memoized cells does no new work
  auto c = exact::with_counter(enc_sd(mpq_class(5, 13)));
  const SdStream twice_shared = sd::average(c.stream, c.stream);
  exact::take_prefix(twice_shared, 40);
  const auto after_first = c.counter.value();
  exact::take_prefix(twice_shared, 40);
  exact::take_prefix(c.stream, 20);
  if (c.counter.value() != after_first) o.fail("re-forcing evaluated cells again");
  if (after_first != 41) o.fail(fmt("shared input forced %llu cells, expected 41", (unsigned long long)after_first));
  auto gc = exact::with_counter(enc_gray(mpq_class(-2, 3)));
  exact::take_gray_prefix(gc.code, 30);
  exact::take_gray_prefix(gc.code, 30);
  if (gc.counter.value() != 30) o.fail("gray re-forcing");
  o.detail = fmt("%d codes: involutions to depth %zu, mode round trips to depth %zu, counters confirm single evaluation",
                 kSamples, kInvolutionDepth, kRoundTripDepth);
  report(7, "structural properties", o);
}

// 8. Cauchy reals
void criterion8() {
  constexpr int kTriples = 100;
  constexpr int kOrderSamples = 300;
  Gen gen(8008);
  Outcome o;
  const auto stream_real = [&] { return CReal::from_sd(enc_sd(gen.unit())); };
  std::vector<std::pair<std::string, CReal>> reals;
  for (int i = 0; i < 3; ++i) {
    const CReal x = stream_real(), y = stream_real();
    const CReal c = CReal::from_rational(oracle::r(gen.in(-8, 8)));
    reals.push_back({"stream", x});
    reals.push_back({"constant", c});
    reals.push_back({"sum", x + y});
    reals.push_back({"difference", x - c});
    reals.push_back({"product", x * y});
    reals.push_back({"scaled product", c * x});
    reals.push_back({"negation", -x});
    reals.push_back({"abs", exact::abs(y)});
  }
  reals.push_back({"quotient stream", CReal::from_sd(sd::div(enc_sd(mpq_class(-1, 3)), enc_sd(mpq_class(3, 4))))});
  for (const auto& [name, x] : reals) {
    for (int t = 0; t < kTriples; ++t) {
      const auto p = static_cast<std::size_t>(gen.pick(0, 60));
      const std::size_t m0 = x.modulus(p);
      const std::size_t n = m0 + static_cast<std::size_t>(gen.pick(0, 64));
      const std::size_t m = m0 + static_cast<std::size_t>(gen.pick(0, 64));
      if (oracle::absq(q(x.approx(n)) - q(x.approx(m))) > oracle::two_pow_neg(p))
        o.fail(fmt("%s: n=%zu m=%zu p=%zu", name.c_str(), n, m, p));
    }
  }
  int compared = 0;
  for (int i = 0; i < kOrderSamples; ++i) {
    const mpq_class a = gen.unit(), b = gen.unit();
    const auto p = static_cast<std::size_t>(gen.pick(1, 40));
    if (oracle::absq(a - b) <= 2 * oracle::two_pow_neg(p)) continue;
    ++compared;
    if (exact::leq_up_to(CReal::from_sd(enc_sd(a)), CReal::from_sd(enc_sd(b)), p) != (a <= b))
      o.fail(fmt("a=%s b=%s p=%zu", a.get_str().c_str(), b.get_str().c_str(), p));
  }
  o.detail = fmt("%zu reals x %d (n,m,p) triples satisfy the modulus; %d order checks with gap > 2^(1-p) agree",
                 reals.size(), kTriples, compared);
  report(8, "Cauchy real layer", o);
}

}  // namespace

int main() {
  exact::run_with_stack([] {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
  });
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
