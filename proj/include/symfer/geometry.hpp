// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file geometry.hpp
 * @brief Simply connected domains given by closed-form charts onto the unit disk,
 *        and their Dirichlet Green's functions.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace symfer {

using Complex = std::complex<double>;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// z ↦ (a z + b) / (c z + d).
struct Mobius {
  Complex a{1}, b{0}, c{0}, d{1};

  Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }
  Complex derivative(Complex z) const;
  Complex determinant() const { return a * d - b * c; }
  Mobius inverse() const { return {d, -b, -c, a}; }

  /// Disk automorphism z ↦ e^{it} (z - p) / (1 - conj(p) z), |p| < 1.
  static Mobius disk_automorphism(double t, Complex p);
};

/// Chart value and derivative at one point.
struct ChartPoint {
  Complex u;
  Complex du;
};

class Domain {
 public:
  enum class Base { Disk, HalfPlane, Quadrant };

  static Domain disk() { return Domain(Base::Disk); }
  static Domain half_plane() { return Domain(Base::HalfPlane); }
  static Domain quadrant() { return Domain(Base::Quadrant); }
  /// The image m(base); its chart is the base chart precomposed with m^{-1}.
  static Domain mobius_of(const Domain& base, const Mobius& m);

  Complex chart(Complex z) const { return chart_point(z).u; }
  Complex chart_derivative(Complex z) const { return chart_point(z).du; }
  ChartPoint chart_point(Complex z) const;

  bool contains(Complex z) const;
  /// Koebe lower bound on the distance from z to the boundary.
  double boundary_clearance(Complex z) const;

  Base base() const { return base_; }
  const std::string& descriptor() const { return descriptor_; }

 private:
  explicit Domain(Base b);

  Base base_;
  // Maps applied to a point (in order) to reach the base domain.
  std::vector<Mobius> pullbacks_;
  std::string descriptor_;
};

struct GreenValue {
  double total = 0;
  double regular = 0;
  double singular = 0;
};

/// First-order Wirtinger decoration of one argument of G.
struct Wirtinger {
  bool holo = false;
  bool anti = false;
};

GreenValue green(const Domain& d, Complex z, Complex w);
/// ∂_z G(z, w) and ∂̄_z G(z, w), derivative in the first argument.
Complex green_dz(const Domain& d, Complex z, Complex w);
Complex green_dzbar(const Domain& d, Complex z, Complex w);

/// G or its decorated derivatives from chart data; zero when one argument carries ∂∂̄.
Complex green_kernel(const ChartPoint& z, const ChartPoint& w, Wirtinger dz, Wirtinger dw);

/// Shortest round-trip text "a+bi" used by descriptors and the query language.
std::string format_complex(Complex z);

double green_regular_diagonal(const Domain& d, Complex z);
double conformal_radius(const Domain& d, Complex z);

}  // namespace symfer
