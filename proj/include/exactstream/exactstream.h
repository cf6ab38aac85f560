/*
 * C interface to the exact stream arithmetic library.
 *
 * Every function returns an xs_status. Handles are opaque and owned by the
 * caller; release them with the matching *_free function. Strings returned
 * through `char**` out-parameters are released with xs_string_free.
 *
 * On failure the out-parameters are left untouched and xs_last_error()
 * describes the problem (per thread, valid until the next failing call).
 */
#ifndef EXACTSTREAM_H
#define EXACTSTREAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define XS_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define XS_API __attribute__((visibility("default")))
#else
#  define XS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2 and 3 double as the CLI exit codes. */
typedef enum xs_status {
  XS_OK = 0,
  XS_ERR_INVALID_ARGUMENT = 1,
  XS_ERR_PARSE = 2,
  XS_ERR_PRECONDITION = 3,
  XS_ERR_INTERNAL = 4
} xs_status;

typedef enum xs_coding { XS_CODING_SD = 0, XS_CODING_GRAY = 1 } xs_coding;

typedef struct xs_rational xs_rational;
typedef struct xs_sd xs_sd;           /* signed-digit stream */
typedef struct xs_gray xs_gray;       /* Gray code, mode G */
typedef struct xs_counter xs_counter; /* forced-cell tally */

XS_API const char* xs_last_error(void);
XS_API void xs_string_free(char* s);

/* Rationals: text "P", "P/Q" or "-P/Q". */
XS_API xs_status xs_rational_parse(const char* text, xs_rational** out);
XS_API xs_status xs_rational_to_string(const xs_rational* r, char** out);
/* Three-way comparison written to *out as -1, 0 or 1. */
XS_API xs_status xs_rational_compare(const xs_rational* a, const xs_rational* b, int* out);
XS_API void xs_rational_free(xs_rational* r);

/* Signed-digit streams. Digits are written as int8_t in {-1, 0, 1}. */
XS_API xs_status xs_sd_encode(const xs_rational* a, xs_sd** out);
XS_API xs_status xs_sd_one(xs_sd** out);
XS_API xs_status xs_sd_negate(const xs_sd* u, xs_sd** out);
XS_API xs_status xs_sd_half(const xs_sd* u, xs_sd** out);
XS_API xs_status xs_sd_add1(const xs_sd* u, xs_sd** out);
XS_API xs_status xs_sd_sub1(const xs_sd* u, xs_sd** out);
XS_API xs_status xs_sd_double(const xs_sd* u, xs_sd** out);
XS_API xs_status xs_sd_average(const xs_sd* u, const xs_sd* v, xs_sd** out);
XS_API xs_status xs_sd_aux_r(const xs_sd* u, const xs_sd* v, xs_sd** out);
XS_API xs_status xs_sd_aux_l(const xs_sd* u, const xs_sd* v, xs_sd** out);
XS_API xs_status xs_sd_div(const xs_sd* u, const xs_sd* v, xs_sd** out);
XS_API xs_status xs_sd_take(const xs_sd* u, size_t n, int8_t* digits);
XS_API xs_status xs_sd_decode(const xs_sd* u, size_t n, xs_rational** out);
/* Wraps u; the counter reports how many cells were forced through the wrapper. */
XS_API xs_status xs_sd_counted(const xs_sd* u, xs_sd** wrapped, xs_counter** counter);
XS_API void xs_sd_free(xs_sd* u);

/* Gray codes. xs_gray_take writes n tokens as characters of the wire format
 * joined by spaces ("R L U Fr Fl D"). */
XS_API xs_status xs_gray_encode(const xs_rational* a, xs_gray** out);
XS_API xs_status xs_gray_from_sd(const xs_sd* u, xs_gray** out);
XS_API xs_status xs_gray_to_sd(const xs_gray* g, xs_sd** out);
XS_API xs_status xs_gray_minus(const xs_gray* g, xs_gray** out);
XS_API xs_status xs_gray_half(const xs_gray* g, xs_gray** out);
XS_API xs_status xs_gray_double(const xs_gray* g, xs_gray** out);
XS_API xs_status xs_gray_average(const xs_gray* a, const xs_gray* b, xs_gray** out);
XS_API xs_status xs_gray_div(const xs_gray* x, const xs_gray* y, xs_gray** out);
XS_API xs_status xs_gray_take(const xs_gray* g, size_t n, char** out);
XS_API xs_status xs_gray_decode(const xs_gray* g, size_t n, xs_rational** out);
XS_API xs_status xs_gray_counted(const xs_gray* g, xs_gray** wrapped, xs_counter** counter);
XS_API void xs_gray_free(xs_gray* g);

XS_API uint64_t xs_counter_value(const xs_counter* c);
XS_API void xs_counter_free(xs_counter* c);

/* Command layer: each writes the complete standard-output text to *out. */
XS_API xs_status xs_cmd_encode(const char* rational, size_t n, xs_coding coding, char** out);
XS_API xs_status xs_cmd_div(const char* numerator, const char* denominator, size_t n, xs_coding coding,
                            int stats, char** out);
XS_API xs_status xs_cmd_op(const char* op, const char* const* args, size_t nargs, size_t n, xs_coding coding,
                           char** out);
XS_API xs_status xs_cmd_bench(const size_t* counts, size_t ncounts, xs_coding coding, char** out);

#ifdef __cplusplus
}
#endif

#endif /* EXACTSTREAM_H */
