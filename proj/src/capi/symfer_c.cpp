// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include "symfer/symfer.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "symfer/correlators.hpp"
#include "symfer/exprdsl.hpp"
#include "symfer/suites.hpp"
#include "symfer/virasoro.hpp"

struct sf_state {
  symfer::FockSpace space;
  symfer::State value;
};

struct sf_query {
  symfer::CorrelatorQuery value;
};

namespace {

thread_local std::string g_error;
thread_local long g_error_offset = -1;

void clear_error() {
  g_error.clear();
  g_error_offset = -1;
}

sf_status set_error(sf_status status, const std::string& message, long offset = -1) {
  g_error = message;
  g_error_offset = offset;
  return status;
}

// Maps library exceptions onto status codes.
template <typename F>
sf_status guarded(F&& body) {
  clear_error();
  try {
    body();
    return SF_OK;
  } catch (const symfer::ParseError& e) {
    return set_error(SF_ERR_PARSE, e.what(), static_cast<long>(e.offset()));
  } catch (const symfer::ContourError& e) {
    return set_error(SF_ERR_NUMERIC, e.what());
  } catch (const symfer::GeometryError& e) {
    return set_error(SF_ERR_DOMAIN, e.what());
  } catch (const symfer::CorrelatorError& e) {
    return set_error(SF_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(SF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(SF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SF_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sf_status null_argument() { return set_error(SF_ERR_INVALID_ARGUMENT, "null argument"); }

symfer::Mode to_mode(sf_mode m) { return m == SF_MODE_CHIRAL ? symfer::Mode::Chiral : symfer::Mode::NonChiral; }

}  // namespace

extern "C" {

const char* sf_last_error(void) { return g_error.c_str(); }

long sf_last_error_offset(void) { return g_error_offset; }

const char* sf_version(void) { return "0.1.0"; }

void sf_string_free(char* s) { std::free(s); }

sf_status sf_state_parse(const char* text, sf_mode mode, sf_state** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    symfer::FockSpace space(to_mode(mode));
    symfer::State value = symfer::parse_state(text, space);
    *out = new sf_state{space, std::move(value)};
  });
}

void sf_state_free(sf_state* s) { delete s; }

sf_status sf_state_render(const sf_state* s, char** out) {
  if (!s || !out) return null_argument();
  return guarded([&] { *out = copy_string(symfer::render(s->value)); });
}

size_t sf_state_term_count(const sf_state* s) { return s ? s->value.size() : 0; }

int sf_state_is_zero(const sf_state* s) { return s ? s->value.is_zero() : 1; }

sf_status sf_state_virasoro(const sf_state* s, int n, int anti, sf_state** out) {
  if (!s || !out) return null_argument();
  return guarded([&] {
    const symfer::VirasoroMode m{anti ? symfer::Chirality::Anti : symfer::Chirality::Holo, n};
    symfer::State value = symfer::sugawara(s->space, m, s->value);
    *out = new sf_state{s->space, std::move(value)};
  });
}

sf_status sf_state_apply(const sf_state* s, const char* generator, sf_state** out) {
  if (!s || !generator || !out) return null_argument();
  return guarded([&] {
    const symfer::Generator g = symfer::parse_generator(generator);
    symfer::State value = s->space.apply(g, s->value);
    *out = new sf_state{s->space, std::move(value)};
  });
}

sf_quadrature sf_quadrature_default(void) {
  const symfer::QuadratureOptions d;
  return {d.nodes, d.radius_scale};
}

sf_status sf_query_parse(const char* text, sf_query** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new sf_query{symfer::parse_query(text)}; });
}

void sf_query_free(sf_query* q) { delete q; }

sf_status sf_query_render(const sf_query* q, char** out) {
  if (!q || !out) return null_argument();
  return guarded([&] { *out = copy_string(symfer::render(q->value)); });
}

size_t sf_query_insertion_count(const sf_query* q) { return q ? q->value.insertions.size() : 0; }

sf_status sf_query_set_point(sf_query* q, size_t index, double re, double im) {
  if (!q) return null_argument();
  if (index >= q->value.insertions.size()) return set_error(SF_ERR_INVALID_ARGUMENT, "insertion index out of range");
  clear_error();
  q->value.insertions[index].point = {re, im};
  return SF_OK;
}

sf_status sf_query_set_alpha(sf_query* q, double re, double im) {
  if (!q) return null_argument();
  clear_error();
  q->value.alpha = {re, im};
  return SF_OK;
}

sf_status sf_query_eval(const sf_query* q, const sf_quadrature* opts, sf_value* out) {
  if (!q || !out) return null_argument();
  return guarded([&] {
    symfer::QuadratureOptions o;
    if (opts) {
      o.nodes = opts->nodes;
      o.radius_scale = opts->radius_scale;
    }
    const symfer::Evaluation e = symfer::evaluate(q->value, o);
    *out = {e.value.real(), e.value.imag(), e.abs_err_estimate};
  });
}

sf_status sf_green(const char* domain, double z_re, double z_im, double w_re, double w_im, sf_green_value* out) {
  if (!domain || !out) return null_argument();
  return guarded([&] {
    const symfer::Domain d = symfer::parse_domain(domain);
    const symfer::GreenValue g = symfer::green(d, {z_re, z_im}, {w_re, w_im});
    *out = {g.total, g.regular, g.singular};
  });
}

sf_status sf_parse_point(const char* text, double* re, double* im) {
  if (!text || !re || !im) return null_argument();
  return guarded([&] {
    const symfer::Complex z = symfer::parse_complex(text);
    *re = z.real();
    *im = z.imag();
  });
}

sf_verify_config sf_verify_config_default(void) {
  const symfer::SuiteConfig d;
  return {d.max_degree, d.max_mode, d.seed};
}

sf_status sf_verify(sf_suite suite, const sf_verify_config* config, sf_report_callback cb, void* user,
                    size_t* failed) {
  if (!config || !cb) return null_argument();
  if (config->max_degree < 0 || config->max_mode < 0)
    return set_error(SF_ERR_INVALID_ARGUMENT, "bounds must be non-negative");
  if (config->max_mode > symfer::kMaxIndex / 2)
    return set_error(SF_ERR_INVALID_ARGUMENT, "max mode too large");
  return guarded([&] {
    const symfer::SuiteConfig c{config->max_degree, config->max_mode, config->seed};
    size_t bad = 0;
    auto sink = [&](const symfer::DefectReport& r) {
      std::vector<std::string> terms;
      for (const auto& [w, coeff] : r.residual) terms.push_back(symfer::render(symfer::State(w, coeff)));
      std::vector<const char*> ptrs;
      for (const auto& t : terms) ptrs.push_back(t.c_str());
      const bool passed = r.passed();
      if (!passed) ++bad;
      const sf_report report{r.check.c_str(), r.input.c_str(), ptrs.data(), ptrs.size(), passed ? 1 : 0};
      cb(&report, user);
    };
    switch (suite) {
      case SF_SUITE_ALGEBRA:
        symfer::run_algebra_suite(c, sink);
        break;
      case SF_SUITE_VIRASORO:
        symfer::run_virasoro_suite(c, sink);
        break;
      case SF_SUITE_STAGGERED:
        symfer::run_staggered_suite(c, sink);
        break;
      default:
        throw std::invalid_argument("unknown suite");
    }
    if (failed) *failed = bad;
  });
}

}  // extern "C"
