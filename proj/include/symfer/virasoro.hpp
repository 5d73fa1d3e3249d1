// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file virasoro.hpp
 * @brief Sugawara Virasoro modes at c = -2 and the exact algebraic checks built on them.
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symfer/fockspace.hpp"

namespace symfer {

inline constexpr int kCentralCharge = -2;

struct VirasoroMode {
  Chirality chirality = Chirality::Holo;
  int n = 0;
};

/**
 * Applies L_n (or L̄_n) to v.
 *
 * The bilinear mode sum is cut off at D(v) + extra_bound, where D(v) is the
 * largest stored index of v. Any extra_bound >= 0 gives the same result.
 */
State sugawara(const FockSpace& space, VirasoroMode m, const State& v, int extra_bound = 0);

/// [L_n, L_m]v - (n-m)L_{n+m}v - (c/12)(n^3-n)δ_{n+m,0} v.
State commutator_defect(const FockSpace& space, int n, int m, Chirality c, const State& v);

/// [L_n, L̄_m]v; non-chiral mode only.
State mixed_commutator_defect(const FockSpace& space, int n, int m, const State& v);

/// ((L_0 - Δ)w, (L_0 - Δ)^2 w), with L̄_0 and Δ̄ for the antiholomorphic chirality.
std::pair<State, State> jordan_defect(const FockSpace& space, const BasisWord& w, Chirality c);

/// (χ_0η_0 - χ̄_0η̄_0)v; non-chiral mode only.
State gaberdiel_kausch_defect(const FockSpace& space, const State& v);

enum class Expectation { Zero, NonZero };

/// Outcome of one exact identity check; passed() is derived from the residual.
struct DefectReport {
  std::string check;
  std::string input;
  State residual;
  Expectation expect = Expectation::Zero;

  bool passed() const {
    return expect == Expectation::Zero ? residual.is_zero() : !residual.is_zero();
  }
};

/// The five staggered-module identities (a)-(e), one report each.
std::vector<DefectReport> staggered_verify(const FockSpace& space);

}  // namespace symfer
