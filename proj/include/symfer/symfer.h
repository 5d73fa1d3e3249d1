/* Copyright 2026 The symfer Authors
 * SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface to the symfer library.
 *
 * Objects are opaque handles created by *_parse or *_new functions and released
 * with the matching *_free function. Every fallible call returns an
 * sf_status; on failure sf_last_error() describes the most recent error on the
 * calling thread.
 */

#ifndef SYMFER_SYMFER_H
#define SYMFER_SYMFER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SYMFER_BUILDING)
#    define SF_API __declspec(dllexport)
#  else
#    define SF_API __declspec(dllimport)
#  endif
#else
#  define SF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_PARSE = 1,
  SF_ERR_INVALID_ARGUMENT = 2,
  SF_ERR_DOMAIN = 3,
  SF_ERR_NUMERIC = 4,
  SF_ERR_INTERNAL = 5
} sf_status;

typedef enum sf_mode { SF_MODE_CHIRAL = 0, SF_MODE_NONCHIRAL = 1 } sf_mode;

typedef struct sf_state sf_state;
typedef struct sf_query sf_query;

/* Message of the last error on this thread; empty string when none. */
SF_API const char* sf_last_error(void);
/* Byte offset of the last parse error on this thread, or -1. */
SF_API long sf_last_error_offset(void);

SF_API const char* sf_version(void);

/* Strings returned through char** out-parameters are released with sf_string_free. */
SF_API void sf_string_free(char* s);

/* ---- states ---- */

SF_API sf_status sf_state_parse(const char* text, sf_mode mode, sf_state** out);
SF_API void sf_state_free(sf_state* s);
SF_API sf_status sf_state_render(const sf_state* s, char** out);
SF_API size_t sf_state_term_count(const sf_state* s);
SF_API int sf_state_is_zero(const sf_state* s);

/* Applies L_n (anti = 0) or the antiholomorphic L̄_n (anti = 1) and returns a new state. */
SF_API sf_status sf_state_virasoro(const sf_state* s, int n, int anti, sf_state** out);
/* Applies the mode named by a generator literal such as "chibar(-2)". */
SF_API sf_status sf_state_apply(const sf_state* s, const char* generator, sf_state** out);

/* ---- correlators ---- */

typedef struct sf_quadrature {
  int nodes;           /* trapezoid nodes per contour */
  double radius_scale; /* depth-0 radius factor */
} sf_quadrature;

SF_API sf_quadrature sf_quadrature_default(void);

SF_API sf_status sf_query_parse(const char* text, sf_query** out);
SF_API void sf_query_free(sf_query* q);
SF_API sf_status sf_query_render(const sf_query* q, char** out);
SF_API size_t sf_query_insertion_count(const sf_query* q);
SF_API sf_status sf_query_set_point(sf_query* q, size_t index, double re, double im);
SF_API sf_status sf_query_set_alpha(sf_query* q, double re, double im);

typedef struct sf_value {
  double re;
  double im;
  double abs_err_estimate;
} sf_value;

SF_API sf_status sf_query_eval(const sf_query* q, const sf_quadrature* opts, sf_value* out);

/* ---- Green's function ---- */

typedef struct sf_green_value {
  double total;
  double regular;
  double singular;
} sf_green_value;

SF_API sf_status sf_green(const char* domain, double z_re, double z_im, double w_re, double w_im,
                          sf_green_value* out);
/* Parses a point literal "a+bi". */
SF_API sf_status sf_parse_point(const char* text, double* re, double* im);

/* ---- verification suites ---- */

typedef enum sf_suite {
  SF_SUITE_ALGEBRA = 0,
  SF_SUITE_VIRASORO = 1,
  SF_SUITE_STAGGERED = 2
} sf_suite;

typedef struct sf_verify_config {
  int max_degree;    /* basis words with delta + deltabar <= max_degree */
  int max_mode;      /* mode indices |n| <= max_mode */
  uint64_t seed;     /* randomized states */
} sf_verify_config;

SF_API sf_verify_config sf_verify_config_default(void);

typedef struct sf_report {
  const char* check;
  const char* input;
  const char* const* residual_terms; /* rendered terms of the residual */
  size_t residual_term_count;
  int passed;
} sf_report;

typedef void (*sf_report_callback)(const sf_report* report, void* user);

/* Runs a suite, calling back once per report in a deterministic order. */
SF_API sf_status sf_verify(sf_suite suite, const sf_verify_config* config, sf_report_callback cb, void* user,
                           size_t* failed);

#ifdef __cplusplus
}
#endif

#endif /* SYMFER_SYMFER_H */
