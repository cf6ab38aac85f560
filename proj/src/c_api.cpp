#include "exactstream/exactstream.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "exact/commands.hpp"
#include "exact/error.hpp"
#include "exact/gray_ops.hpp"
#include "exact/sd_ops.hpp"
#include "exact/stack.hpp"

struct xs_rational {
  exact::Rational value;
};
struct xs_sd {
  exact::SdStream stream;
};
struct xs_gray {
  exact::GrayG code;
};
struct xs_counter {
  exact::ForceCounter counter;
};

namespace {

thread_local std::string g_last_error;

xs_status fail(xs_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
xs_status guarded(F&& f) {
  try {
    f();
    return XS_OK;
  } catch (const exact::Error& e) {
    return fail(static_cast<xs_status>(exact::cli::exit_code_for(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(XS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(XS_ERR_INTERNAL, e.what());
  }
}

// As guarded, on a thread with a deep stack; for calls that force digits.
template <class F>
xs_status guarded_deep(F&& f) {
  return guarded([&] { exact::run_with_stack(f); });
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

exact::cli::Coding to_coding(xs_coding c) {
  return c == XS_CODING_GRAY ? exact::cli::Coding::gray : exact::cli::Coding::sd;
}

#define XS_REQUIRE(cond)                                                          \
  do {                                                                            \
    if (!(cond)) return fail(XS_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

template <class Op>
xs_status sd_unary(const xs_sd* u, xs_sd** out, Op op) {
  XS_REQUIRE(u && out);
  return guarded([&] { *out = new xs_sd{op(u->stream)}; });
}

template <class Op>
xs_status sd_binary(const xs_sd* u, const xs_sd* v, xs_sd** out, Op op) {
  XS_REQUIRE(u && v && out);
  return guarded([&] { *out = new xs_sd{op(u->stream, v->stream)}; });
}

template <class Op>
xs_status gray_unary(const xs_gray* g, xs_gray** out, Op op) {
  XS_REQUIRE(g && out);
  return guarded([&] { *out = new xs_gray{op(g->code)}; });
}

}  // namespace

extern "C" {

const char* xs_last_error(void) { return g_last_error.c_str(); }

void xs_string_free(char* s) { std::free(s); }

xs_status xs_rational_parse(const char* text, xs_rational** out) {
  XS_REQUIRE(text && out);
  return guarded([&] { *out = new xs_rational{exact::Rational::parse(text)}; });
}

xs_status xs_rational_to_string(const xs_rational* r, char** out) {
  XS_REQUIRE(r && out);
  return guarded([&] { *out = dup_string(r->value.to_string()); });
}

xs_status xs_rational_compare(const xs_rational* a, const xs_rational* b, int* out) {
  XS_REQUIRE(a && b && out);
  const auto c = exact::compare(a->value, b->value);
  *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  return XS_OK;
}

void xs_rational_free(xs_rational* r) { delete r; }

xs_status xs_sd_encode(const xs_rational* a, xs_sd** out) {
  XS_REQUIRE(a && out);
  return guarded([&] { *out = new xs_sd{exact::sd::encode(a->value)}; });
}

xs_status xs_sd_one(xs_sd** out) {
  XS_REQUIRE(out);
  return guarded([&] { *out = new xs_sd{exact::sd::one()}; });
}

xs_status xs_sd_negate(const xs_sd* u, xs_sd** out) { return sd_unary(u, out, exact::sd::negate); }
xs_status xs_sd_half(const xs_sd* u, xs_sd** out) { return sd_unary(u, out, exact::sd::half); }
xs_status xs_sd_add1(const xs_sd* u, xs_sd** out) { return sd_unary(u, out, exact::sd::add1); }
xs_status xs_sd_sub1(const xs_sd* u, xs_sd** out) { return sd_unary(u, out, exact::sd::sub1); }
xs_status xs_sd_double(const xs_sd* u, xs_sd** out) { return sd_unary(u, out, exact::sd::twice); }

xs_status xs_sd_average(const xs_sd* u, const xs_sd* v, xs_sd** out) {
  return sd_binary(u, v, out, exact::sd::average);
}
xs_status xs_sd_aux_r(const xs_sd* u, const xs_sd* v, xs_sd** out) { return sd_binary(u, v, out, exact::sd::aux_r); }
xs_status xs_sd_aux_l(const xs_sd* u, const xs_sd* v, xs_sd** out) { return sd_binary(u, v, out, exact::sd::aux_l); }
xs_status xs_sd_div(const xs_sd* u, const xs_sd* v, xs_sd** out) { return sd_binary(u, v, out, exact::sd::div); }

xs_status xs_sd_take(const xs_sd* u, size_t n, int8_t* digits) {
  XS_REQUIRE(u && (digits || n == 0));
  return guarded_deep([&] {
    const auto prefix = exact::take_prefix(u->stream, n);
    for (size_t i = 0; i < n; ++i) digits[i] = static_cast<int8_t>(prefix[i].value());
  });
}

xs_status xs_sd_decode(const xs_sd* u, size_t n, xs_rational** out) {
  XS_REQUIRE(u && out);
  return guarded_deep([&] { *out = new xs_rational{exact::sd::decode(u->stream, n)}; });
}

xs_status xs_sd_counted(const xs_sd* u, xs_sd** wrapped, xs_counter** counter) {
  XS_REQUIRE(u && wrapped && counter);
  return guarded([&] {
    exact::CountedSd c = exact::with_counter(u->stream);
    auto* w = new xs_sd{c.stream};
    try {
      *counter = new xs_counter{c.counter};
    } catch (...) {
      delete w;
      throw;
    }
    *wrapped = w;
  });
}

void xs_sd_free(xs_sd* u) {
  if (!u) return;
  exact::run_with_stack([u] { delete u; });
}

xs_status xs_gray_encode(const xs_rational* a, xs_gray** out) {
  XS_REQUIRE(a && out);
  return guarded([&] { *out = new xs_gray{exact::gray::encode(a->value)}; });
}

xs_status xs_gray_from_sd(const xs_sd* u, xs_gray** out) {
  XS_REQUIRE(u && out);
  return guarded([&] { *out = new xs_gray{exact::gray::from_sd(u->stream)}; });
}

xs_status xs_gray_to_sd(const xs_gray* g, xs_sd** out) {
  XS_REQUIRE(g && out);
  return guarded([&] { *out = new xs_sd{exact::gray::to_sd(g->code)}; });
}

xs_status xs_gray_minus(const xs_gray* g, xs_gray** out) {
  return gray_unary(g, out, [](const exact::GrayG& c) { return exact::gray::minus(c); });
}
xs_status xs_gray_half(const xs_gray* g, xs_gray** out) { return gray_unary(g, out, exact::gray::half); }
xs_status xs_gray_double(const xs_gray* g, xs_gray** out) { return gray_unary(g, out, exact::gray::twice); }

xs_status xs_gray_average(const xs_gray* a, const xs_gray* b, xs_gray** out) {
  XS_REQUIRE(a && b && out);
  return guarded([&] { *out = new xs_gray{exact::gray::average(a->code, b->code)}; });
}

xs_status xs_gray_div(const xs_gray* x, const xs_gray* y, xs_gray** out) {
  XS_REQUIRE(x && y && out);
  return guarded([&] { *out = new xs_gray{exact::gray::div(x->code, y->code)}; });
}

xs_status xs_gray_take(const xs_gray* g, size_t n, char** out) {
  XS_REQUIRE(g && out);
  return guarded_deep(
      [&] { *out = dup_string(exact::cli::format_gray(exact::take_gray_prefix(g->code, n))); });
}

xs_status xs_gray_decode(const xs_gray* g, size_t n, xs_rational** out) {
  XS_REQUIRE(g && out);
  return guarded_deep([&] { *out = new xs_rational{exact::gray::decode(g->code, n)}; });
}

xs_status xs_gray_counted(const xs_gray* g, xs_gray** wrapped, xs_counter** counter) {
  XS_REQUIRE(g && wrapped && counter);
  return guarded([&] {
    exact::CountedGray c = exact::with_counter(g->code);
    auto* w = new xs_gray{c.code};
    try {
      *counter = new xs_counter{c.counter};
    } catch (...) {
      delete w;
      throw;
    }
    *wrapped = w;
  });
}

void xs_gray_free(xs_gray* g) {
  if (!g) return;
  exact::run_with_stack([g] { delete g; });
}

uint64_t xs_counter_value(const xs_counter* c) { return c ? c->counter.value() : 0; }

void xs_counter_free(xs_counter* c) { delete c; }

xs_status xs_cmd_encode(const char* rational, size_t n, xs_coding coding, char** out) {
  XS_REQUIRE(rational && out);
  return guarded([&] { *out = dup_string(exact::cli::encode_command(rational, n, to_coding(coding))); });
}

xs_status xs_cmd_div(const char* numerator, const char* denominator, size_t n, xs_coding coding, int stats,
                     char** out) {
  XS_REQUIRE(numerator && denominator && out);
  return guarded([&] {
    *out = dup_string(exact::cli::div_command(numerator, denominator, n, to_coding(coding), stats != 0));
  });
}

xs_status xs_cmd_op(const char* op, const char* const* args, size_t nargs, size_t n, xs_coding coding, char** out) {
  XS_REQUIRE(op && out && (args || nargs == 0));
  return guarded([&] {
    std::vector<std::string> argv;
    for (size_t i = 0; i < nargs; ++i) {
      if (!args[i]) throw exact::Error(exact::ErrorKind::parse, "null operand");
      argv.emplace_back(args[i]);
    }
    *out = dup_string(exact::cli::op_command(op, argv, n, to_coding(coding)));
  });
}

xs_status xs_cmd_bench(const size_t* counts, size_t ncounts, xs_coding coding, char** out) {
  XS_REQUIRE(out && (counts || ncounts == 0));
  return guarded([&] {
    std::vector<std::size_t> v(counts, counts + ncounts);
    *out = dup_string(exact::cli::bench_command(v, to_coding(coding)));
  });
}

}  // extern "C"
