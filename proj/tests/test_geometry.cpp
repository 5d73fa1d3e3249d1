// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "symfer/geometry.hpp"

using namespace symfer;

namespace {

const Complex kI{0, 1};
constexpr double kPi = std::numbers::pi;

double g(const Domain& d, Complex z, Complex w) { return green(d, z, w).total; }

// Central-difference Wirtinger derivative ∂ = (∂x - i∂y)/2 of a function of z.
template <typename F>
Complex wirtinger_fd(F f, Complex z, double h, bool anti) {
  const Complex fx = (f(z + h) - f(z - h)) / (2 * h);
  const Complex fy = (f(z + h * kI) - f(z - h * kI)) / (2 * h);
  return anti ? 0.5 * (fx + kI * fy) : 0.5 * (fx - kI * fy);
}

bool close_rel(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::vector<Domain> sample_domains() {
  return {Domain::disk(), Domain::half_plane(), Domain::quadrant(),
          Domain::mobius_of(Domain::disk(), Mobius{2.0 + kI, 1.0, 0.5, 1.0 - kI})};
}

// A pair of interior points per domain, well separated from each other and from the boundary.
std::pair<Complex, Complex> sample_points(const Domain& d) {
  switch (d.base()) {
    case Domain::Base::Disk:
      if (d.descriptor() == "disk") return {{0.3, -0.2}, {-0.25, 0.35}};
      break;
    case Domain::Base::HalfPlane:
      return {{0.4, 1.2}, {-0.7, 2.1}};
    case Domain::Base::Quadrant:
      return {{1.1, 0.6}, {0.5, 1.7}};
  }
  const Mobius m{2.0 + kI, 1.0, 0.5, 1.0 - kI};
  return {m(Complex{0.3, -0.2}), m(Complex{-0.25, 0.35})};
}

}  // namespace

TEST_CASE("chart_examples") {
  CHECK(std::abs(Domain::half_plane().chart(kI)) < 1e-15);
  CHECK(std::abs(Domain::quadrant().chart(std::polar(1.0, kPi / 4))) < 1e-15);
  CHECK(std::abs(Domain::disk().chart({0.3, 0.1}) - Complex{0.3, 0.1}) == 0);
  CHECK(Domain::disk().descriptor() == "disk");
  CHECK(Domain::quadrant().descriptor() == "quadrant");
  CHECK(Domain::mobius_of(Domain::half_plane(), Mobius{1.0, 2.0, 0.0, 1.0}).descriptor() ==
        "mobius:halfplane:1+0i,2+0i,0+0i,1+0i");
}

TEST_CASE("chart_derivative_matches_finite_difference") {
  for (const Domain& d : sample_domains()) {
    const auto [z, w] = sample_points(d);
    (void)w;
    const double h = 1e-6;
    const Complex fd = (d.chart(z + h) - d.chart(z - h)) / (2 * h);
    CHECK(close_rel(d.chart_derivative(z), fd, 1e-8));
    CHECK(std::abs(d.chart(z)) < 1);
  }
}

TEST_CASE("disk_green_function_closed_form") {
  const Domain d = Domain::disk();
  for (double r : {0.1, 0.5, 0.9}) CHECK(g(d, 0, r) == doctest::Approx(-std::log(r) / (2 * kPi)).epsilon(1e-14));
  const GreenValue v = green(d, {0.3, 0}, {-0.2, 0.1});
  CHECK(v.total == doctest::Approx(v.regular + v.singular).epsilon(1e-15));
  CHECK(v.singular == doctest::Approx(-std::log(std::abs(Complex{0.5, -0.1})) / (2 * kPi)));
}

TEST_CASE("half_plane_green_is_image_charge") {
  const Domain d = Domain::half_plane();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-3, 3), y(0.05, 4);
  for (int i = 0; i < 200; ++i) {
    const Complex z{x(rng), y(rng)}, w{x(rng), y(rng)};
    const double want = std::log(std::abs(z - std::conj(w)) / std::abs(z - w)) / (2 * kPi);
    CHECK(g(d, z, w) == doctest::Approx(want).epsilon(1e-11));
  }
}

TEST_CASE("green_is_symmetric_and_positive") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  for (const Domain& d : sample_domains()) {
    int tested = 0;
    while (tested < 100) {
      const Complex a{u(rng), u(rng)}, b{u(rng), u(rng)};
      // Sample in the disk chart and push forward to the domain when possible.
      Complex z = a * 2.0 + Complex{0, 2}, w = b * 2.0 + Complex{0, 2};
      if (d.base() == Domain::Base::Disk && d.descriptor() == "disk") z = a, w = b;
      if (d.base() == Domain::Base::Quadrant) z = a + Complex{1, 1}, w = b + Complex{1, 1};
      if (d.descriptor().rfind("mobius", 0) == 0) {
        const Mobius m{2.0 + kI, 1.0, 0.5, 1.0 - kI};
        z = m(a), w = m(b);
      }
      if (!d.contains(z) || !d.contains(w) || z == w) continue;
      ++tested;
      CHECK(g(d, z, w) > 0);
      CHECK(g(d, z, w) == doctest::Approx(g(d, w, z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("green_vanishes_at_the_boundary") {
  const Domain disk = Domain::disk();
  for (double t : {0.0, 1.0, 2.5, 4.0}) CHECK(g(disk, std::polar(1 - 1e-9, t), {0.2, 0.1}) < 1e-9);
  const Domain hp = Domain::half_plane();
  CHECK(g(hp, {3.0, 1e-9}, {0.5, 1.0}) < 1e-9);
  const Domain q = Domain::quadrant();
  CHECK(g(q, {1e-9, 2.0}, {1.0, 1.0}) < 1e-9);
  CHECK(g(q, {2.0, 1e-9}, {1.0, 1.0}) < 1e-9);
}

TEST_CASE("green_is_harmonic_away_from_the_pole") {
  const double h = 1e-3;
  for (const Domain& d : sample_domains()) {
    const auto [z, w] = sample_points(d);
    const double lap =
        (g(d, z + h, w) + g(d, z - h, w) + g(d, z + h * kI, w) + g(d, z - h * kI, w) - 4 * g(d, z, w)) / (h * h);
    CHECK(std::abs(lap) < 1e-4);
  }
}

TEST_CASE("first_derivatives_match_finite_differences") {
  for (const Domain& d : sample_domains()) {
    const auto [z, w] = sample_points(d);
    auto f = [&](Complex x) { return Complex(g(d, x, w)); };
    CHECK(close_rel(green_dz(d, z, w), wirtinger_fd(f, z, 1e-5, false), 1e-8));
    CHECK(close_rel(green_dzbar(d, z, w), wirtinger_fd(f, z, 1e-5, true), 1e-8));
    CHECK(close_rel(green_dzbar(d, z, w), std::conj(green_dz(d, z, w)), 1e-14));
  }
}

TEST_CASE("decorated_kernel_matches_finite_differences") {
  for (const Domain& d : sample_domains()) {
    const auto [z, w] = sample_points(d);
    const ChartPoint pz = d.chart_point(z), pw = d.chart_point(w);
    for (bool za : {false, true}) {
      const Wirtinger dz{!za, za};
      // Derivative in the second argument of the one-sided kernel.
      auto f = [&](Complex x) { return green_kernel(pz, d.chart_point(x), dz, {}); };
      for (bool wa : {false, true}) {
        const Wirtinger dw{!wa, wa};
        CHECK(close_rel(green_kernel(pz, pw, dz, dw), wirtinger_fd(f, w, 1e-5, wa), 1e-7));
      }
      auto f3 = [&](Complex x) { return green_kernel(d.chart_point(x), pw, {}, {}); };
      CHECK(close_rel(green_kernel(pz, pw, dz, {}), wirtinger_fd(f3, z, 1e-5, za), 1e-8));
      CHECK(close_rel(green_kernel(pw, pz, {}, dz), green_kernel(pz, pw, dz, {}), 1e-14));
    }
    CHECK(green_kernel(pz, pw, {true, true}, {}) == Complex(0));
    CHECK(green_kernel(pz, pw, {true, false}, {true, true}) == Complex(0));
  }
}

TEST_CASE("green_is_conformally_invariant") {
  const std::vector<Mobius> maps{Mobius::disk_automorphism(0.7, {0.3, -0.4}), Mobius{1.0, 0.5, 0.0, 1.0},
                                 Mobius{0.0, -1.0, 1.0, 0.0}, Mobius{2.0 + kI, 1.0, 0.5, 1.0 - kI}};
  for (const Domain& d : sample_domains()) {
    const auto [z, w] = sample_points(d);
    for (const Mobius& m : maps) {
      const Domain image = Domain::mobius_of(d, m);
      REQUIRE(image.contains(m(z)));
      CHECK(std::abs(g(image, m(z), m(w)) - g(d, z, w)) < 1e-12);
    }
  }
}

TEST_CASE("disk_automorphism_preserves_the_disk") {
  const Mobius m = Mobius::disk_automorphism(1.3, {0.5, 0.2});
  for (double t : {0.0, 0.9, 2.0, 3.7}) CHECK(std::abs(m(std::polar(1.0, t))) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(m(Complex{0.5, 0.2})) < 1e-15);
}

TEST_CASE("regular_part_limit_on_the_diagonal") {
  for (const Domain& d : sample_domains()) {
    const auto [z, w] = sample_points(d);
    (void)w;
    const double limit = green(d, z + 1e-6 * Complex{0.6, 0.8}, z).regular;
    CHECK(green_regular_diagonal(d, z) == doctest::Approx(limit).epsilon(1e-6));
  }
}

TEST_CASE("conformal_radius_examples") {
  CHECK(conformal_radius(Domain::half_plane(), kI) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(conformal_radius(Domain::half_plane(), 3.0 * kI + 1.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(conformal_radius(Domain::disk(), 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(conformal_radius(Domain::disk(), 0.5) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("koebe_clearance_is_a_lower_bound") {
  CHECK(Domain::disk().boundary_clearance(0.5) <= 0.5);
  CHECK(Domain::half_plane().boundary_clearance({4.0, 2.0}) <= 2.0);
  CHECK(Domain::quadrant().boundary_clearance({1.0, 0.3}) <= 0.3);
  CHECK(Domain::half_plane().boundary_clearance({4.0, 2.0}) >= 0.5);
}

TEST_CASE("invalid_inputs_are_rejected") {
  CHECK_THROWS_AS(Domain::mobius_of(Domain::disk(), Mobius{1.0, 2.0, 2.0, 4.0}), GeometryError);
  CHECK_THROWS_AS(green(Domain::disk(), 0.2, 0.2), GeometryError);
  CHECK_THROWS_AS(green(Domain::disk(), 1.5, 0.2), GeometryError);
  CHECK_THROWS_AS(green(Domain::half_plane(), {0.0, -1.0}, kI), GeometryError);
  CHECK_FALSE(Domain::quadrant().contains({-1.0, 1.0}));
  CHECK_FALSE(Domain::disk().contains({std::nan(""), 0.0}));
}

TEST_CASE("complex_formatting_round_trips") {
  CHECK(format_complex({0.1, -2.0}) == "0.1-2i");
  CHECK(format_complex({-0.0, 0.0}) == "-0+0i");
  const Complex z{1.0 / 3.0, std::sqrt(2.0)};
  CHECK(format_complex(z) == "0.3333333333333333+1.4142135623730951i");
}
