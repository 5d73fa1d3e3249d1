// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file correlators.hpp
 * @brief Numeric correlation functions of symplectic fermions on charted domains.
 *
 * Ground insertions (ξ, θ, ω, 𝟙) are evaluated in closed form through a
 * determinant of Green's function entries. Descendant fields are reduced to
 * ground insertions by extracting current modes with circular contour
 * integrals, discretized by the trapezoidal rule.
 */

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symfer/fockspace.hpp"
#include "symfer/geometry.hpp"

namespace symfer {

enum class GroundKind : std::uint8_t { Xi, Theta, Omega, One };

struct GroundInsertion {
  GroundKind kind = GroundKind::Omega;
  Complex point;
  bool d_holo = false;
  bool d_anti = false;
};

struct Insertion {
  State state;
  Complex point;
};

struct CorrelatorQuery {
  Domain domain = Domain::disk();
  Complex alpha{0};
  std::vector<Insertion> insertions;
};

/// Invalid correlator input: coincident or exterior points, unsupported decorations.
class CorrelatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A contour would be smaller than QuadratureOptions::min_radius.
class ContourError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  int nodes = 128;
  /// Depth-0 radius is radius_scale * min(half the distance to other points, Koebe clearance).
  double radius_scale = 0.5;
  /// Each nested contour shrinks by this factor.
  double depth_factor = 0.5;
  double min_radius = 1e-9;
  /// Sum every contour node explicitly instead of integrating matrix entries.
  bool nested = false;
  /// Insertion indices in the order their contours are summed (nested mode; empty = natural).
  std::vector<std::size_t> peel_order;
};

/// (4π)^n det[G(z_i, w_j)]; zero for unequal counts.
double fer_correlator(const Domain& d, std::span<const Complex> xi, std::span<const Complex> theta);

Complex ground_correlator(const Domain& d, Complex alpha, std::span<const GroundInsertion> ins);

/**
 * The correlator of q with the target insertion replaced by outer·state.
 *
 * The outer mode is extracted by an explicit trapezoidal sum over a circle
 * around the target point; the remaining fields are evaluated by
 * general_correlator at each node.
 */
Complex mode_extract(const CorrelatorQuery& q, std::size_t target, const Generator& outer,
                     const QuadratureOptions& opts = {});

Complex general_correlator(const CorrelatorQuery& q, const QuadratureOptions& opts = {});

struct Evaluation {
  Complex value;
  /// |value(M) - value(M/2)|, zero when no contour is needed.
  double abs_err_estimate = 0;
};

Evaluation evaluate(const CorrelatorQuery& q, const QuadratureOptions& opts = {});

/// ⟨ω(z)⟩ shifts by -kOmegaLogWeight·log|φ'(z)| under a conformal map φ.
inline constexpr double kOmegaLogWeight = 2.0;

/// (⟨ω(m(z))⟩ on m(Ω), ⟨ω(z)⟩ on Ω - kOmegaLogWeight·log|m'(z)|) for a single-ω query.
std::pair<Complex, Complex> covariance_check(const Mobius& m, const CorrelatorQuery& q,
                                             const QuadratureOptions& opts = {});
/// Same, with the chart of q.domain as the map onto the disk.
std::pair<Complex, Complex> covariance_check_chart(const CorrelatorQuery& q,
                                                   const QuadratureOptions& opts = {});

}  // namespace symfer
