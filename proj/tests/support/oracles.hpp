// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference evaluations shared by the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "symfer/geometry.hpp"

namespace symfer::oracle {

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return (inversions & 1) ? -1 : 1;
}

// (4π)^n Σ_σ sgn(σ) Π G(z_i, w_σ(i)) by listing all n! permutations.
inline double permutation_sum(const Domain& d, const std::vector<Complex>& z, const std::vector<Complex>& w) {
  const double four_pi = 4 * std::numbers::pi;
  std::vector<int> p(z.size());
  std::iota(p.begin(), p.end(), 0);
  double total = 0;
  do {
    double prod = permutation_sign(p);
    for (std::size_t i = 0; i < z.size(); ++i) prod *= four_pi * green(d, z[i], w[p[i]]).total;
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Ground sector ⟨ξ(z₁)θ(w₁)⋯ξ(z_n)θ(w_n) ω(x₁)⋯ω(x_k)⟩ as an explicit sum over bijections
// from {z, x} onto {w, x}: each fixed x contributes -(4π g(x,x) + α).
inline Complex bijection_sum(const Domain& d, Complex alpha, const std::vector<Complex>& z,
                             const std::vector<Complex>& w, const std::vector<Complex>& x) {
  const double four_pi = 4 * std::numbers::pi;
  const std::size_t n = z.size(), k = x.size();
  std::vector<Complex> sources = z, targets = w;
  sources.insert(sources.end(), x.begin(), x.end());
  targets.insert(targets.end(), x.begin(), x.end());
  std::vector<int> b(n + k);
  std::iota(b.begin(), b.end(), 0);
  Complex total = 0;
  do {
    Complex prod = static_cast<double>(permutation_sign(b));
    int fixed = 0;
    for (std::size_t i = 0; i < n + k; ++i) {
      const std::size_t j = static_cast<std::size_t>(b[i]);
      if (i >= n && i == j) {
        ++fixed;
        const ChartPoint p = d.chart_point(x[i - n]);
        const double g = std::log((1 - std::norm(p.u)) / std::abs(p.du)) / (2 * std::numbers::pi);
        prod *= -(four_pi * g + alpha);
      } else {
        prod *= four_pi * green(d, sources[i], targets[j]).total;
      }
    }
    if (fixed & 1) prod = -prod;
    total += prod;
  } while (std::next_permutation(b.begin(), b.end()));
  return (k & 1) ? -total : total;
}

}  // namespace symfer::oracle
