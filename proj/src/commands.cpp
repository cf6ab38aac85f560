#include "exact/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "exact/error.hpp"
#include "exact/gray_ops.hpp"
#include "exact/sd_ops.hpp"
#include "exact/stack.hpp"

namespace exact::cli {

namespace {

using Clock = std::chrono::steady_clock;

const Rational kBenchNumerator(1001, 3001);
const Rational kBenchDenominator(10001, 20001);

Rational parse_unit(std::string_view text) {
  Rational a = Rational::parse(text);
  if (!in_unit_interval(a)) {
    throw Error(ErrorKind::not_in_unit_interval, "not-in-unit-interval: " + a.to_string());
  }
  return a;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::precondition, "precondition violated: " + what);
}

std::string render_sd(const SdStream& u, std::size_t n) { return format_sd(take_prefix(u, n)); }

std::string render_gray(const GrayG& g, std::size_t n) { return format_gray(take_gray_prefix(g, n)); }

std::string format_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

Coding parse_coding(std::string_view text) {
  if (text == "sd") return Coding::sd;
  if (text == "gray") return Coding::gray;
  throw Error(ErrorKind::parse, "unknown coding '" + std::string(text) + "' (expected sd or gray)");
}

std::string format_sd(const std::vector<SignedDigit>& digits) {
  std::string out;
  out.reserve(digits.size());
  for (SignedDigit d : digits) out.push_back(d.value() > 0 ? '+' : (d.value() < 0 ? '-' : '0'));
  return out;
}

std::vector<SignedDigit> parse_sd(std::string_view text) {
  std::vector<SignedDigit> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+':
        out.push_back(SignedDigit::plus_one());
        break;
      case '0':
        out.push_back(SignedDigit::zero());
        break;
      case '-':
        out.push_back(SignedDigit::minus_one());
        break;
      default:
        throw Error(ErrorKind::parse, std::string("bad signed digit '") + c + "'");
    }
  }
  return out;
}

std::string format_gray(const std::vector<GrayToken>& tokens) {
  static constexpr const char* kNames[] = {"R", "L", "U", "Fr", "Fl", "D"};
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += kNames[static_cast<int>(tokens[i])];
  }
  return out;
}

std::vector<GrayToken> parse_gray(std::string_view text) {
  std::vector<GrayToken> out;
  if (text.empty()) return out;
  bool mode_h = false;
  std::size_t pos = 0;
  while (true) {
    const std::size_t space = text.find(' ', pos);
    const std::string_view tok = text.substr(pos, space == std::string_view::npos ? text.size() - pos : space - pos);
    GrayToken t;
    if (tok == "R") t = GrayToken::r;
    else if (tok == "L") t = GrayToken::l;
    else if (tok == "U") t = GrayToken::u;
    else if (tok == "Fr") t = GrayToken::fr;
    else if (tok == "Fl") t = GrayToken::fl;
    else if (tok == "D") t = GrayToken::d;
    else throw Error(ErrorKind::parse, "bad Gray token '" + std::string(tok) + "'");
    const bool h_token = t == GrayToken::fr || t == GrayToken::fl || t == GrayToken::d;
    if (h_token != mode_h) {
      throw Error(ErrorKind::parse, "Gray token '" + std::string(tok) + "' out of mode");
    }
    mode_h = t == GrayToken::u || t == GrayToken::d;
    out.push_back(t);
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return out;
}

std::string RunReport::to_line() const {
  std::ostringstream os;
  os << "digits-produced=" << digits_produced << " u-forced=" << u_forced << " v-forced=" << v_forced
     << " elapsed=" << format_seconds(elapsed_seconds) << " decoded-value=" << decoded_value.to_string()
     << " exact-value=" << exact_value.to_string() << " error-bound-ok=" << (error_bound_ok ? "true" : "false");
  return os.str();
}

DivRun run_div(const Rational& x, const Rational& y, std::size_t n, Coding coding) {
  require(Rational(1, 4) <= y, "1/4 <= y");
  require(y <= Rational(1), "y <= 1");
  require(abs(x) <= y, "|x| <= y");

  DivRun run;
  run_with_stack([&] {
    const auto start = Clock::now();
    if (coding == Coding::sd) {
      CountedSd u = with_counter(sd::encode(x));
      CountedSd v = with_counter(sd::encode(y));
      const std::vector<SignedDigit> digits = take_prefix(sd::div(u.stream, v.stream), n);
      run.report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
      run.symbols = format_sd(digits);
      run.report.decoded_value = sd::decode_digits(digits);
      run.report.u_forced = u.counter.value();
      run.report.v_forced = v.counter.value();
    } else {
      CountedGray u = with_counter(gray::encode(x));
      CountedGray v = with_counter(gray::encode(y));
      const std::vector<GrayToken> tokens = take_gray_prefix(gray::div(u.code, v.code), n);
      run.report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
      run.symbols = format_gray(tokens);
      run.report.decoded_value = gray::decode_tokens(tokens);
      run.report.u_forced = u.counter.value();
      run.report.v_forced = v.counter.value();
    }
  });
  run.report.digits_produced = n;
  run.report.exact_value = x / y;
  run.report.error_bound_ok = abs(run.report.decoded_value - run.report.exact_value) <= pow2_neg(n);
  return run;
}

std::string encode_command(std::string_view rational, std::size_t n, Coding coding) {
  const Rational a = parse_unit(rational);
  std::string out;
  run_with_stack([&] { out = coding == Coding::sd ? render_sd(sd::encode(a), n) : render_gray(gray::encode(a), n); });
  return out + "\n";
}

std::string div_command(std::string_view numerator, std::string_view denominator, std::size_t n, Coding coding,
                        bool stats) {
  const Rational x = Rational::parse(numerator);
  const Rational y = Rational::parse(denominator);
  const DivRun run = run_div(x, y, n, coding);
  std::string out = run.symbols + "\n";
  if (stats) out += run.report.to_line() + "\n";
  return out;
}

std::string op_command(std::string_view op, const std::vector<std::string>& args, std::size_t n, Coding coding) {
  const std::size_t arity = op == "avg" ? 2 : 1;
  static constexpr std::string_view kOps[] = {"neg", "half", "double", "add1", "sub1", "avg", "convert"};
  if (std::find(std::begin(kOps), std::end(kOps), op) == std::end(kOps)) {
    throw Error(ErrorKind::parse, "unknown operation '" + std::string(op) + "'");
  }
  if (args.size() != arity) {
    throw Error(ErrorKind::parse, "operation '" + std::string(op) + "' takes " + std::to_string(arity) +
                                      " rational argument(s)");
  }
  std::vector<Rational> xs;
  for (const auto& a : args) xs.push_back(parse_unit(a));
  const Rational& a = xs[0];
  if (op == "double") require(abs(a) <= Rational(1, 2), "|x| <= 1/2");
  if (op == "add1") require(a <= Rational(0), "x <= 0");
  if (op == "sub1") require(a >= Rational(0), "x >= 0");

  std::string out;
  run_with_stack([&] {
    if (coding == Coding::sd) {
      const SdStream u = sd::encode(a);
      const auto result = [&]() -> SdStream {
        if (op == "neg") return sd::negate(u);
        if (op == "half") return sd::half(u);
        if (op == "double") return sd::twice(u);
        if (op == "add1") return sd::add1(u);
        if (op == "sub1") return sd::sub1(u);
        if (op == "avg") return sd::average(u, sd::encode(xs[1]));
        return gray::to_sd(gray::from_sd(u));  // convert: round trip through Gray code
      };
      out = render_sd(result(), n);
    } else {
      const GrayG g = gray::encode(a);
      const auto result = [&]() -> GrayG {
        if (op == "neg") return gray::minus(g);
        if (op == "half") return gray::half(g);
        if (op == "double") return gray::twice(g);
        if (op == "add1") return gray::shift_g(g, true);
        if (op == "sub1") return gray::shift_g(gray::minus(g), false);
        if (op == "avg") return gray::average(g, gray::encode(xs[1]));
        return g;  // convert: the Gray code of the canonical signed-digit code
      };
      out = render_gray(result(), n);
    }
  });
  return out + "\n";
}

std::string BenchResult::to_text() const {
  std::ostringstream os;
  os << "digits seconds\n";
  for (const auto& row : rows) os << row.digits << ' ' << format_seconds(row.seconds) << '\n';
  if (exponent) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", *exponent);
    os << "exponent=" << buf << '\n';
  }
  return os.str();
}

BenchResult run_bench(const std::vector<std::size_t>& counts, Coding coding) {
  if (counts.empty()) throw Error(ErrorKind::parse, "bench needs at least one digit count");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    require(counts[i] > 0, "digit counts are positive");
    require(i == 0 || counts[i - 1] < counts[i], "digit counts are ascending");
  }
  BenchResult result;
  for (std::size_t n : counts) {
    double seconds = 0.0;
    run_with_stack([&] {
      const auto start = Clock::now();
      if (coding == Coding::sd) {
        take_prefix(sd::div(sd::encode(kBenchNumerator), sd::encode(kBenchDenominator)), n);
      } else {
        take_gray_prefix(gray::div(gray::encode(kBenchNumerator), gray::encode(kBenchDenominator)), n);
      }
      seconds = std::chrono::duration<double>(Clock::now() - start).count();
    });
    result.rows.push_back({n, seconds});
  }
  if (result.rows.size() > 1) {
    const auto& first = result.rows.front();
    const auto& last = result.rows.back();
    result.exponent = std::log(last.seconds / first.seconds) /
                      std::log(static_cast<double>(last.digits) / static_cast<double>(first.digits));
  }
  return result;
}

std::string bench_command(const std::vector<std::size_t>& counts, Coding coding) {
  return run_bench(counts, coding).to_text();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::zero_denominator:
      return 2;
    case ErrorKind::not_in_unit_interval:
    case ErrorKind::precondition:
      return 3;
  }
  return 1;
}

}  // namespace exact::cli
