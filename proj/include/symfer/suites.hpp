// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file suites.hpp
 * @brief Exact verification sweeps over the Fock space, emitted as DefectReports.
 *
 * Checks whose natural residual is a number (basis counts) report it as that
 * multiple of ω.
 */

#pragma once

#include <cstdint>
#include <functional>

#include "symfer/virasoro.hpp"

namespace symfer {

struct SuiteConfig {
  int max_degree = 6;
  int max_mode = 4;
  std::uint64_t seed = 0;
};

using ReportSink = std::function<void(const DefectReport&)>;

void run_algebra_suite(const SuiteConfig& config, const ReportSink& sink);
void run_virasoro_suite(const SuiteConfig& config, const ReportSink& sink);
void run_staggered_suite(const SuiteConfig& config, const ReportSink& sink);

/// Number of chiral basis words at degree Δ, from the generating function 4·Π(1+q^k)².
long chiral_basis_count(int delta);

}  // namespace symfer
