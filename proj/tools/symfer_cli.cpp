// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: verification suites and correlator evaluation.
// Reports go to stdout (JSON lines or CSV); summaries go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "symfer/symfer.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int max_degree = 6;
  int max_mode = 4;
  int nodes = 128;
  double radius_scale = 0.5;
  std::string output = "json";
  std::uint64_t seed = 0;
  std::string alpha;

  std::string query;
  std::string domain;
  std::string z, w;
  std::size_t index = 0;
  double x_min = -0.9, x_max = 0.9, y_min = -0.9, y_max = 0.9, step = 0.1;
};

struct QueryDeleter {
  void operator()(sf_query* q) const { sf_query_free(q); }
};
using QueryPtr = std::unique_ptr<sf_query, QueryDeleter>;

bool csv(const RunConfig& c) { return c.output == "csv"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string num15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

int exit_for(sf_status s) {
  return (s == SF_ERR_PARSE || s == SF_ERR_INVALID_ARGUMENT || s == SF_ERR_DOMAIN) ? kExitUsage
                                                                                   : kExitCheckFailed;
}

int report_error(const char* what, sf_status s) {
  std::cerr << "symfer: " << what << ": " << sf_last_error();
  if (sf_last_error_offset() >= 0) std::cerr << " (byte offset " << sf_last_error_offset() << ")";
  std::cerr << "\n";
  return exit_for(s);
}

struct VerifyState {
  const RunConfig* config;
  std::size_t total = 0;
};

void emit_report(const sf_report* r, void* user) {
  auto* st = static_cast<VerifyState*>(user);
  ++st->total;
  if (csv(*st->config)) {
    std::string terms;
    for (std::size_t i = 0; i < r->residual_term_count; ++i) terms += (i ? " | " : "") + std::string(r->residual_terms[i]);
    std::cout << csv_field(r->check) << ',' << csv_field(r->input) << ',' << csv_field(terms) << ','
              << (r->passed ? "true" : "false") << '\n';
    return;
  }
  json j;
  j["check"] = r->check;
  j["input"] = r->input;
  j["residual_terms"] = json::array();
  for (std::size_t i = 0; i < r->residual_term_count; ++i) j["residual_terms"].push_back(r->residual_terms[i]);
  j["passed"] = r->passed != 0;
  std::cout << j.dump() << '\n';
}

int run_verify(const RunConfig& c, sf_suite suite, const char* name) {
  sf_verify_config vc{c.max_degree, c.max_mode, c.seed};
  VerifyState st{&c};
  if (csv(c)) std::cout << "check,input,residual_terms,passed\n";
  std::size_t failed = 0;
  const sf_status s = sf_verify(suite, &vc, emit_report, &st, &failed);
  if (s != SF_OK) return report_error(name, s);
  std::cerr << name << ": " << st.total << " checks, " << (st.total - failed) << " passed, " << failed
            << " failed (seed " << c.seed << ")\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

// A query argument of the form @path names a file holding the query text.
bool read_query_text(const std::string& arg, std::string& text) {
  if (arg.empty() || arg[0] != '@') {
    text = arg;
    return true;
  }
  std::ifstream in(arg.substr(1));
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

sf_status load_query(const RunConfig& c, QueryPtr& out) {
  std::string text;
  if (!read_query_text(c.query, text)) {
    std::cerr << "symfer: cannot read " << c.query.substr(1) << "\n";
    return SF_ERR_INVALID_ARGUMENT;
  }
  sf_query* raw = nullptr;
  sf_status s = sf_query_parse(text.c_str(), &raw);
  if (s != SF_OK) return s;
  out.reset(raw);
  if (!c.alpha.empty()) {
    double re = 0, im = 0;
    s = sf_parse_point(c.alpha.c_str(), &re, &im);
    if (s != SF_OK) return s;
    s = sf_query_set_alpha(out.get(), re, im);
  }
  return s;
}

int run_eval(const RunConfig& c) {
  QueryPtr q;
  if (sf_status s = load_query(c, q); s != SF_OK) return report_error("eval", s);
  const sf_quadrature opts{c.nodes, c.radius_scale};
  sf_value v{};
  if (sf_status s = sf_query_eval(q.get(), &opts, &v); s != SF_OK) return report_error("eval", s);
  char* rendered = nullptr;
  sf_query_render(q.get(), &rendered);
  const std::string text = rendered ? rendered : "";
  sf_string_free(rendered);
  if (csv(c)) {
    std::cout << "value_re,value_im,abs_err_estimate\n"
              << num15(v.re) << ',' << num15(v.im) << ',' << num15(v.abs_err_estimate) << '\n';
  } else {
    json j{{"query", text}, {"nodes", c.nodes}, {"value_re", v.re}, {"value_im", v.im},
           {"abs_err_estimate", v.abs_err_estimate}};
    std::cout << j.dump() << '\n';
  }
  std::cerr << "eval: " << text << " = " << num15(v.re) << (v.im < 0 ? " - " : " + ") << num15(std::abs(v.im))
            << "i (err " << num15(v.abs_err_estimate) << ")\n";
  return kExitOk;
}

int run_grid(const RunConfig& c) {
  if (!(c.step > 0) || !(c.x_max >= c.x_min) || !(c.y_max >= c.y_min)) {
    std::cerr << "symfer: grid: step must be positive and ranges non-empty\n";
    return kExitUsage;
  }
  QueryPtr q;
  if (sf_status s = load_query(c, q); s != SF_OK) return report_error("grid", s);
  if (c.index >= sf_query_insertion_count(q.get())) {
    std::cerr << "symfer: grid: insertion index out of range\n";
    return kExitUsage;
  }
  const sf_quadrature opts{c.nodes, c.radius_scale};
  const long nx = std::lround(std::floor((c.x_max - c.x_min) / c.step + 1e-9)) + 1;
  const long ny = std::lround(std::floor((c.y_max - c.y_min) / c.step + 1e-9)) + 1;
  if (csv(c)) std::cout << "x,y,re,im\n";
  long emitted = 0, skipped = 0, failed = 0;
  for (long iy = 0; iy < ny; ++iy) {
    for (long ix = 0; ix < nx; ++ix) {
      const double x = c.x_min + ix * c.step, y = c.y_min + iy * c.step;
      sf_query_set_point(q.get(), c.index, x, y);
      sf_value v{};
      const sf_status s = sf_query_eval(q.get(), &opts, &v);
      if (s == SF_ERR_DOMAIN) {
        ++skipped;
        continue;
      }
      if (s != SF_OK) {
        ++failed;
        v.re = v.im = std::nan("");
      }
      ++emitted;
      if (csv(c)) {
        std::cout << num15(x) << ',' << num15(y) << ',' << num15(v.re) << ',' << num15(v.im) << '\n';
      } else {
        json j{{"x", x}, {"y", y}, {"re", v.re}, {"im", v.im}};
        std::cout << j.dump() << '\n';
      }
    }
  }
  std::cerr << "grid: " << emitted << " points, " << skipped << " outside the domain or coincident, " << failed
            << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_green(const RunConfig& c) {
  double zr, zi, wr, wi;
  if (sf_status s = sf_parse_point(c.z.c_str(), &zr, &zi); s != SF_OK) return report_error("green", s);
  if (sf_status s = sf_parse_point(c.w.c_str(), &wr, &wi); s != SF_OK) return report_error("green", s);
  sf_green_value g{};
  if (sf_status s = sf_green(c.domain.c_str(), zr, zi, wr, wi, &g); s != SF_OK) return report_error("green", s);
  if (csv(c)) {
    std::cout << "total,regular,singular\n" << num15(g.total) << ',' << num15(g.regular) << ',' << num15(g.singular) << '\n';
  } else {
    std::cout << json{{"total", g.total}, {"regular", g.regular}, {"singular", g.singular}}.dump() << '\n';
  }
  std::cerr << "green: G = " << num15(g.total) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic fermions: exact mode algebra checks and correlator evaluation", "symfer"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig c;

  app.add_option("--max-degree", c.max_degree, "Basis words with delta+deltabar up to this bound")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-mode", c.max_mode, "Mode indices |n| up to this bound")->check(CLI::Range(0, 31));
  app.add_option("--nodes", c.nodes, "Trapezoid nodes per contour")->check(CLI::PositiveNumber);
  app.add_option("--radius-scale", c.radius_scale, "Depth-0 contour radius factor")->check(CLI::Range(1e-6, 1.0));
  app.add_option("--output", c.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", c.seed, "Seed for randomized sweeps");
  app.add_option("--alpha", c.alpha, "Override the query parameter alpha (a+bi)");

  auto* va = app.add_subcommand("verify-algebra", "Mode algebra, PBW basis and automorphism checks");
  auto* vv = app.add_subcommand("verify-virasoro", "Sugawara Virasoro relations at c=-2");
  auto* vs = app.add_subcommand("verify-staggered", "Staggered-module identities (a)-(e)");
  auto* ev = app.add_subcommand("eval", "Evaluate a correlator query");
  ev->add_option("query", c.query, "corr(domain; alpha; [state@point, ...]) or @file")->required();
  auto* gr = app.add_subcommand("grid", "Sweep one insertion point over a lattice");
  gr->add_option("query", c.query, "corr(domain; alpha; [state@point, ...]) or @file")->required();
  gr->add_option("--index", c.index, "Insertion to move (0-based)");
  gr->add_option("--x-min", c.x_min);
  gr->add_option("--x-max", c.x_max);
  gr->add_option("--y-min", c.y_min);
  gr->add_option("--y-max", c.y_max);
  gr->add_option("--step", c.step, "Lattice spacing")->check(CLI::PositiveNumber);
  auto* gn = app.add_subcommand("green", "Dirichlet Green's function G(z, w)");
  gn->add_option("domain", c.domain, "disk | halfplane | quadrant | mobius:<domain>:a,b,c,d")->required();
  gn->add_option("z", c.z, "a+bi")->required();
  gn->add_option("w", c.w, "a+bi")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*va) return run_verify(c, SF_SUITE_ALGEBRA, "verify-algebra");
  if (*vv) return run_verify(c, SF_SUITE_VIRASORO, "verify-virasoro");
  if (*vs) return run_verify(c, SF_SUITE_STAGGERED, "verify-staggered");
  if (*ev) return run_eval(c);
  if (*gr) return run_grid(c);
  if (*gn) return run_green(c);
  return kExitUsage;
}
