// exactcli: command-line front end over the exactstream C API.
//
//   exactcli encode 1/2 4 sd
//   exactcli op avg 1/2 1/4 --digits 8 --code gray
//   exactcli div 1001/3001 10001/20001 19 sd --stats
//   exactcli bench 100 500 2000
#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string>
#include <vector>

#include "exactstream/exactstream.h"

namespace {

constexpr int kExitParse = 2;

struct Common {
  std::vector<std::string> positional;
  long digits = -1;
  std::string code;
  bool stats = false;
};

bool is_count(const std::string& s) {
  if (s.empty() || s.size() > 12) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

int parse_error(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return kExitParse;
}

// Resolves the trailing "[n] [sd|gray]" positional forms against the flags.
// `fixed` is how many leading positionals belong to the command itself.
bool take_trailing(Common& c, std::size_t fixed, bool need_digits, std::size_t& n, xs_coding& coding,
                   std::string& err) {
  auto& p = c.positional;
  std::string code = c.code;
  if (p.size() > fixed && (p.back() == "sd" || p.back() == "gray")) {
    if (!code.empty() && code != p.back()) {
      err = "conflicting codings '" + code + "' and '" + p.back() + "'";
      return false;
    }
    code = p.back();
    p.pop_back();
  }
  long digits = c.digits;
  if (p.size() > fixed && is_count(p.back())) {
    const long v = std::stol(p.back());
    if (digits >= 0 && digits != v) {
      err = "conflicting digit counts";
      return false;
    }
    digits = v;
    p.pop_back();
  }
  if (code.empty()) code = "sd";
  if (code != "sd" && code != "gray") {
    err = "unknown coding '" + code + "' (expected sd or gray)";
    return false;
  }
  coding = code == "gray" ? XS_CODING_GRAY : XS_CODING_SD;
  if (digits < 0) {
    if (need_digits) {
      err = "missing digit count (give N or --digits N)";
      return false;
    }
    digits = 0;
  }
  n = static_cast<std::size_t>(digits);
  return true;
}

int finish(xs_status st, char** outp) {
  char* out = *outp;
  if (st != XS_OK) {
    std::fprintf(stderr, "error: %s\n", xs_last_error());
    return static_cast<int>(st);
  }
  std::fputs(out, stdout);
  xs_string_free(out);
  return 0;
}

// Negative rationals such as -1/2 look like short options to the parser;
// escape them so they reach the positional list. U+2212 is also accepted
// by the rational parser and needs no escaping.
std::vector<std::string> escape_negatives(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1]))) a = "\x1f" + a;
    out.push_back(std::move(a));
  }
  return out;
}

std::string unescape(std::string s) {
  if (!s.empty() && s[0] == '\x1f') s.erase(0, 1);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real arithmetic on [-1,1] with signed-digit and Gray code streams"};
  app.require_subcommand(1);

  Common enc, op, dv, bn;
  auto add_common = [](CLI::App* sub, Common& c, bool stats) {
    sub->add_option("args", c.positional, "operands, optionally followed by N and sd|gray");
    sub->add_option("--digits,-n", c.digits, "number of output symbols")->check(CLI::NonNegativeNumber);
    sub->add_option("--code,-c", c.code, "coding: sd or gray");
    if (stats) sub->add_flag("--stats", c.stats, "append a run report");
  };
  auto* s_enc = app.add_subcommand("encode", "first N symbols of a rational's code");
  add_common(s_enc, enc, false);
  auto* s_op = app.add_subcommand("op", "run neg|half|double|add1|sub1|avg|convert on rationals");
  add_common(s_op, op, false);
  auto* s_div = app.add_subcommand("div", "divide two rationals as streams");
  add_common(s_div, dv, true);
  auto* s_bench = app.add_subcommand("bench", "time division for ascending digit counts");
  add_common(s_bench, bn, false);

  std::vector<std::string> args = escape_negatives(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }

  for (Common* c : {&enc, &op, &dv, &bn})
    for (auto& s : c->positional) s = unescape(s);

  std::size_t n = 0;
  xs_coding coding = XS_CODING_SD;
  std::string err;
  char* out = nullptr;

  if (*s_enc) {
    if (!take_trailing(enc, 1, true, n, coding, err)) return parse_error(err);
    if (enc.positional.size() != 1) return parse_error("encode takes one rational");
    return finish(xs_cmd_encode(enc.positional[0].c_str(), n, coding, &out), &out);
  }
  if (*s_div) {
    if (!take_trailing(dv, 2, true, n, coding, err)) return parse_error(err);
    if (dv.positional.size() != 2) return parse_error("div takes a numerator and a denominator");
    return finish(
        xs_cmd_div(dv.positional[0].c_str(), dv.positional[1].c_str(), n, coding, dv.stats ? 1 : 0, &out), &out);
  }
  if (*s_op) {
    if (op.positional.empty()) return parse_error("op needs an operation name");
    const std::size_t arity = op.positional[0] == "avg" ? 2 : 1;
    if (!take_trailing(op, 1 + arity, true, n, coding, err)) return parse_error(err);
    std::vector<const char*> operands;
    for (std::size_t i = 1; i < op.positional.size(); ++i) operands.push_back(op.positional[i].c_str());
    return finish(xs_cmd_op(op.positional[0].c_str(), operands.data(), operands.size(), n, coding, &out), &out);
  }
  // bench: every positional is a digit count; a trailing coding is allowed.
  if (bn.digits >= 0) return parse_error("bench takes digit counts as arguments, not --digits");
  if (!take_trailing(bn, bn.positional.size(), false, n, coding, err)) return parse_error(err);
  if (!bn.positional.empty() && (bn.positional.back() == "sd" || bn.positional.back() == "gray")) {
    coding = bn.positional.back() == "gray" ? XS_CODING_GRAY : XS_CODING_SD;
    bn.positional.pop_back();
  }
  std::vector<std::size_t> counts;
  for (const auto& s : bn.positional) {
    // also accept a comma-separated list
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t comma = s.find(',', pos);
      const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!is_count(item)) return parse_error("bad digit count '" + item + "'");
      counts.push_back(std::stoul(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (counts.empty()) counts = {10, 100, 1000};
  return finish(xs_cmd_bench(counts.data(), counts.size(), coding, &out), &out);
}
