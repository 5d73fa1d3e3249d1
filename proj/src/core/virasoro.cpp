// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include "symfer/virasoro.hpp"

#include <algorithm>
#include <stdexcept>

namespace symfer {
namespace {

int ceil_half(int n) { return n >= 0 ? (n + 1) / 2 : n / 2; }

// c * b * a acting on w, added to out with the given factor.
void add_pair(const FockSpace& space, const Generator& b, const Generator& a, const BasisWord& w,
              const Rational& factor, State& out) {
  auto first = space.act(a, w);
  if (!first) return;
  auto second = space.act(b, first->word);
  if (!second) return;
  out.add(second->word, factor * (first->coefficient * second->coefficient));
}

State L(const FockSpace& space, int n, const State& v, Chirality c = Chirality::Holo) {
  return sugawara(space, {c, n}, v);
}

// The first residual that violates the expectation, or zero when all pass.
struct Aggregate {
  std::vector<std::string> inputs;
  State first_failure;
  bool failed = false;

  void record(std::string input, State residual) {
    if (!failed && !residual.is_zero()) {
      failed = true;
      first_failure = std::move(residual);
      inputs.insert(inputs.begin(), "first failure: " + input);
    }
    inputs.push_back(std::move(input));
  }

  DefectReport report(std::string check) const {
    std::string joined;
    for (const auto& s : inputs) joined += (joined.empty() ? "" : "; ") + s;
    return {std::move(check), joined, first_failure, Expectation::Zero};
  }
};

}  // namespace

State sugawara(const FockSpace& space, VirasoroMode m, const State& v, int extra_bound) {
  space.check_chirality(m.chirality);
  const Chirality c = m.chirality;
  const int n = m.n;
  const int h = ceil_half(n);
  const int d = v.max_index() + std::max(extra_bound, 0);
  const auto eta = [c](int k) { return Generator{Species::Eta, c, k}; };
  const auto chi = [c](int k) { return Generator{Species::Chi, c, k}; };

  State out;
  for (const auto& [w, coeff] : v) {
    for (int k = h; k <= d; ++k) add_pair(space, chi(n - k), eta(k), w, coeff, out);
    const Rational neg = -coeff;
    for (int k = n - d; k < h; ++k) add_pair(space, eta(k), chi(n - k), w, neg, out);
  }
  return out;
}

State commutator_defect(const FockSpace& space, int n, int m, Chirality c, const State& v) {
  State out = L(space, n, L(space, m, v, c), c);
  out -= L(space, m, L(space, n, v, c), c);
  out -= Rational(n - m) * L(space, n + m, v, c);
  if (n + m == 0) out -= Rational(kCentralCharge * (n * n * n - n)) / 12 * v;
  return out;
}

State mixed_commutator_defect(const FockSpace& space, int n, int m, const State& v) {
  if (space.mode() == Mode::Chiral)
    throw ChiralityError("mixed commutators need the non-chiral Fock space");
  State out = L(space, n, L(space, m, v, Chirality::Anti));
  out -= L(space, m, L(space, n, v), Chirality::Anti);
  return out;
}

std::pair<State, State> jordan_defect(const FockSpace& space, const BasisWord& w, Chirality c) {
  space.check_chirality(c);
  const Bidegree deg = bidegree_of(w);
  const Rational weight = c == Chirality::Holo ? deg.delta : deg.deltabar;
  auto shifted = [&](const State& v) { return L(space, 0, v, c) - weight * v; };
  State first = shifted(State(w));
  State second = shifted(first);
  return {std::move(first), std::move(second)};
}

State gaberdiel_kausch_defect(const FockSpace& space, const State& v) {
  if (space.mode() == Mode::Chiral)
    throw ChiralityError("the Gaberdiel-Kausch check needs the non-chiral Fock space");
  State holo = space.apply(Generator::chi(0), space.apply(Generator::eta(0), v));
  State anti = space.apply(Generator::chibar(0), space.apply(Generator::etabar(0), v));
  return holo - anti;
}

std::vector<DefectReport> staggered_verify(const FockSpace& space) {
  const State omega = space.ground_state(GroundName::Omega);
  const State one = space.ground_state(GroundName::One);
  std::vector<DefectReport> out;

  out.push_back({"staggered.a", "L(-1) one", L(space, -1, one), Expectation::Zero});

  const State l1_omega = L(space, -1, omega);
  out.push_back({"staggered.b", "L(-1) omega", l1_omega, Expectation::NonZero});

  State c = L(space, -1, L(space, -1, l1_omega)) - Rational(2) * L(space, -2, l1_omega);
  c += L(space, -3, one);
  out.push_back({"staggered.c", "(L(-1)^2 - 2 L(-2)) L(-1) omega + L(-3) one", c,
                 Expectation::Zero});

  Aggregate primaries;
  for (const char* name : {"one", "xi", "theta"}) {
    const State s = space.ground_state(name);
    for (int n = 0; n <= 6; ++n)
      primaries.record("L(" + std::to_string(n) + ") " + name, L(space, n, s));
  }
  out.push_back(primaries.report("staggered.d"));

  Aggregate currents;
  for (const char* name : {"chi_cur", "eta_cur"}) {
    const State s = space.ground_state(name);
    for (int n = 1; n <= 6; ++n)
      currents.record("L(" + std::to_string(n) + ") " + name, L(space, n, s));
    currents.record(std::string("L(0) ") + name + " - " + name, L(space, 0, s) - s);
  }
  out.push_back(currents.report("staggered.e"));
  return out;
}

}  // namespace symfer
