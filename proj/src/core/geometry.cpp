// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include "symfer/geometry.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace symfer {
namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kFourPi = 4 * std::numbers::pi;
const Complex kI{0, 1};

ChartPoint base_chart(Domain::Base b, Complex z) {
  switch (b) {
    case Domain::Base::Disk:
      return {z, 1};
    case Domain::Base::HalfPlane: {
      const Complex s = z + kI;
      return {(z - kI) / s, 2.0 * kI / (s * s)};
    }
    case Domain::Base::Quadrant: {
      const Complex z2 = z * z;
      const Complex s = z2 + kI;
      return {(z2 - kI) / s, 4.0 * kI * z / (s * s)};
    }
  }
  throw GeometryError("unknown base domain");
}

bool base_contains(Domain::Base b, Complex z) {
  switch (b) {
    case Domain::Base::Disk:
      return std::abs(z) < 1;
    case Domain::Base::HalfPlane:
      return z.imag() > 0;
    case Domain::Base::Quadrant:
      return z.real() > 0 && z.imag() > 0;
  }
  return false;
}

const char* base_name(Domain::Base b) {
  switch (b) {
    case Domain::Base::Disk:
      return "disk";
    case Domain::Base::HalfPlane:
      return "halfplane";
    case Domain::Base::Quadrant:
      return "quadrant";
  }
  return "?";
}

void append_double(std::string& out, double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, res.ptr);
}

void require_distinct(Complex z, Complex w) {
  if (z == w) throw GeometryError("coincident points");
}

void require_inside(const Domain& d, Complex z) {
  if (!d.contains(z)) throw GeometryError("point " + format_complex(z) + " is not inside " + d.descriptor());
}

}  // namespace

std::string format_complex(Complex z) {
  std::string out;
  append_double(out, z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  append_double(out, std::abs(z.imag()));
  out += 'i';
  return out;
}

Complex Mobius::derivative(Complex z) const {
  const Complex s = c * z + d;
  return determinant() / (s * s);
}

Mobius Mobius::disk_automorphism(double t, Complex p) {
  const Complex e = std::polar(1.0, t);
  return {e, -e * p, -std::conj(p), 1};
}

Domain::Domain(Base b) : base_(b), descriptor_(base_name(b)) {}

Domain Domain::mobius_of(const Domain& base, const Mobius& m) {
  if (std::abs(m.determinant()) == 0) throw GeometryError("degenerate Mobius map (ad - bc = 0)");
  Domain out = base;
  out.pullbacks_.insert(out.pullbacks_.begin(), m.inverse());
  out.descriptor_ = "mobius:" + base.descriptor_ + ":" + format_complex(m.a) + "," +
                    format_complex(m.b) + "," + format_complex(m.c) + "," + format_complex(m.d);
  return out;
}

ChartPoint Domain::chart_point(Complex z) const {
  Complex dz = 1;
  for (const Mobius& m : pullbacks_) {
    dz *= m.derivative(z);
    z = m(z);
  }
  ChartPoint p = base_chart(base_, z);
  p.du *= dz;
  return p;
}

bool Domain::contains(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  for (const Mobius& m : pullbacks_) {
    const Complex s = m.c * z + m.d;
    if (std::abs(s) == 0) return false;
    z = m(z);
  }
  return base_contains(base_, z);
}

double Domain::boundary_clearance(Complex z) const {
  const ChartPoint p = chart_point(z);
  return 0.25 * (1 - std::norm(p.u)) / std::abs(p.du);
}

Complex green_kernel(const ChartPoint& z, const ChartPoint& w, Wirtinger dz, Wirtinger dw) {
  if ((dz.holo && dz.anti) || (dw.holo && dw.anti)) return 0;
  const Complex u = z.u, v = w.u;
  const bool dz_any = dz.holo || dz.anti;
  const bool dw_any = dw.holo || dw.anti;

  if (!dz_any && !dw_any)
    return std::log(std::abs(1.0 - u * std::conj(v)) / std::abs(u - v)) / kTwoPi;

  if (dz_any && !dw_any) {
    const Complex h = (-std::conj(v) / (1.0 - u * std::conj(v)) - 1.0 / (u - v)) * z.du / kFourPi;
    return dz.holo ? h : std::conj(h);
  }
  if (!dz_any && dw_any) {
    const Complex h = (-std::conj(u) / (1.0 - v * std::conj(u)) - 1.0 / (v - u)) * w.du / kFourPi;
    return dw.holo ? h : std::conj(h);
  }

  // One derivative on each argument.
  if (dz.holo == dw.holo) {
    const Complex s = u - v;
    const Complex h = -z.du * w.du / (s * s) / kFourPi;
    return dz.holo ? h : std::conj(h);
  }
  const Complex s = 1.0 - u * std::conj(v);
  const Complex h = -z.du * std::conj(w.du) / (s * s) / kFourPi;  // ∂_z ∂̄_w
  return dz.holo ? h : std::conj(h);
}

GreenValue green(const Domain& d, Complex z, Complex w) {
  require_distinct(z, w);
  require_inside(d, z);
  require_inside(d, w);
  GreenValue g;
  g.total = green_kernel(d.chart_point(z), d.chart_point(w), {}, {}).real();
  g.singular = -std::log(std::abs(z - w)) / kTwoPi;
  g.regular = g.total - g.singular;
  return g;
}

Complex green_dz(const Domain& d, Complex z, Complex w) {
  require_distinct(z, w);
  return green_kernel(d.chart_point(z), d.chart_point(w), {.holo = true}, {});
}

Complex green_dzbar(const Domain& d, Complex z, Complex w) {
  require_distinct(z, w);
  return green_kernel(d.chart_point(z), d.chart_point(w), {.anti = true}, {});
}

double green_regular_diagonal(const Domain& d, Complex z) {
  require_inside(d, z);
  const ChartPoint p = d.chart_point(z);
  if (std::abs(p.du) == 0) throw GeometryError("chart derivative vanishes at " + format_complex(z));
  return std::log((1 - std::norm(p.u)) / std::abs(p.du)) / kTwoPi;
}

double conformal_radius(const Domain& d, Complex z) {
  return std::exp(kTwoPi * green_regular_diagonal(d, z));
}

}  // namespace symfer
