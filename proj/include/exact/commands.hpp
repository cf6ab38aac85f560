#ifndef EXACT_COMMANDS_HPP
#define EXACT_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exact/digits.hpp"
#include "exact/gray.hpp"
#include "exact/rational.hpp"

// Command layer behind the CLI: text wire formats, precondition checks on the
// exact rational inputs, run reports and the division benchmark.
//
// Signed digits print one character each ('+', '0', '-'). Gray constructors
// print as space-separated tokens R, L, U (mode G) and Fr, Fl, D (mode H).
namespace exact::cli {

enum class Coding { sd, gray };

/// "sd" or "gray"; Error(parse) otherwise.
Coding parse_coding(std::string_view text);

std::string format_sd(const std::vector<SignedDigit>& digits);
std::vector<SignedDigit> parse_sd(std::string_view text);

std::string format_gray(const std::vector<GrayToken>& tokens);
/// Rejects unknown tokens and tokens that do not fit the current mode.
std::vector<GrayToken> parse_gray(std::string_view text);

struct RunReport {
  std::size_t digits_produced = 0;
  std::uint64_t u_forced = 0;
  std::uint64_t v_forced = 0;
  double elapsed_seconds = 0.0;
  Rational decoded_value;
  Rational exact_value;
  bool error_bound_ok = false;

  /// key=value pairs on one line.
  std::string to_line() const;
};

struct DivRun {
  std::string symbols;
  RunReport report;
};

/// Checks 1/4 <= y <= 1 and |x| <= y (Error(precondition) naming the failed
/// inequality), then produces n symbols of x / y with forced-input counts.
DivRun run_div(const Rational& x, const Rational& y, std::size_t n, Coding coding);

std::string encode_command(std::string_view rational, std::size_t n, Coding coding);

std::string div_command(std::string_view numerator, std::string_view denominator, std::size_t n, Coding coding,
                        bool stats);

/// op is one of neg, half, double, add1, sub1, avg, convert.
std::string op_command(std::string_view op, const std::vector<std::string>& args, std::size_t n, Coding coding);

struct BenchRow {
  std::size_t digits;
  double seconds;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// log(t_last / t_first) / log(n_last / n_first); absent for a single row.
  std::optional<double> exponent;

  std::string to_text() const;
};

/// Times n digits of 1001/3001 divided by 10001/20001 for each n.
BenchResult run_bench(const std::vector<std::size_t>& counts, Coding coding);

std::string bench_command(const std::vector<std::size_t>& counts, Coding coding);

/// Exit status for an error kind: 2 for parse failures, 3 for violated
/// preconditions.
int exit_code_for(ErrorKind kind);

}  // namespace exact::cli

#endif  // EXACT_COMMANDS_HPP
