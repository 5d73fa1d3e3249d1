// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <vector>

#include "symfer/virasoro.hpp"

using namespace symfer;

namespace {

Generator with_index(Generator g, int k) {
  g.index = k;
  return g;
}

// L_n ω read off directly from the mode sum: only finitely many terms survive on ω.
State virasoro_on_omega(const FockSpace& space, int n, Chirality c) {
  const auto eta = [c](int k) { return Generator{Species::Eta, c, k}; };
  const auto chi = [c](int k) { return Generator{Species::Chi, c, k}; };
  State out;
  if (n > 0) return out;
  const int h = n >= 0 ? (n + 1) / 2 : n / 2;
  for (int k = h; k <= 0; ++k) out += space.normal_order(std::vector{chi(n - k), eta(k)});
  for (int k = n; k < h; ++k) out -= space.normal_order(std::vector{eta(k), chi(n - k)});
  return out;
}

State apply_word(const FockSpace& space, const std::vector<Generator>& gens, State v) {
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) v = space.apply(*it, v);
  return v;
}

// L_n on a word through [L_n, X_k] = -k X_{n+k} for every weight-one mode.
State virasoro_by_commutators(const FockSpace& space, int n, Chirality c, const BasisWord& w) {
  const std::vector<Generator> gens = w.generators();
  State out = apply_word(space, gens, virasoro_on_omega(space, n, c));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Generator& g = gens[i];
    if (g.index == 0 || g.chirality != c) continue;
    std::vector<Generator> raw = gens;
    raw[i] = with_index(g, n + g.index);
    out += Rational(-g.index) * space.normal_order(raw);
  }
  return out;
}

std::vector<BasisWord> sample_words(const FockSpace& space, int total) { return space.enumerate_up_to(total); }

State random_state(const FockSpace& space, std::mt19937_64& rng, int total, int terms) {
  const auto words = sample_words(space, total);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  State v;
  for (int t = 0; t < terms; ++t) v.add(words[pick(rng)], Rational(num(rng)) / den(rng));
  return v;
}

}  // namespace

TEST_CASE("virasoro_on_ground_states") {
  FockSpace space(Mode::NonChiral);
  const State omega = State::omega();
  const State one = space.ground_state("one");
  CHECK(sugawara(space, {Chirality::Holo, 0}, omega) == one);
  CHECK(sugawara(space, {Chirality::Anti, 0}, omega) == one);
  CHECK(sugawara(space, {Chirality::Holo, -1}, one).is_zero());
  CHECK(sugawara(space, {Chirality::Holo, -1}, space.ground_state("xi")) == space.ground_state("chi_cur"));
  CHECK(sugawara(space, {Chirality::Anti, -1}, space.ground_state("theta")) == space.ground_state("etabar_cur"));
  for (int n = 1; n <= 4; ++n) CHECK(sugawara(space, {Chirality::Holo, n}, omega).is_zero());
}

TEST_CASE("l_minus_one_on_omega_has_two_terms") {
  FockSpace space(Mode::Chiral);
  const State got = sugawara(space, {Chirality::Holo, -1}, State::omega());
  const State want = -space.normal_order(std::vector{Generator::eta(-1), Generator::chi(0)}) +
                     space.normal_order(std::vector{Generator::chi(-1), Generator::eta(0)});
  CHECK(got == want);
  CHECK(got.size() == 2);
}

TEST_CASE("sugawara_matches_commutator_expansion") {
  FockSpace space(Mode::NonChiral);
  for (const auto& w : sample_words(space, 4))
    for (Chirality c : {Chirality::Holo, Chirality::Anti})
      for (int n = -3; n <= 3; ++n)
        REQUIRE_MESSAGE(sugawara(space, {c, n}, State(w)) == virasoro_by_commutators(space, n, c, w), "n=" << n);
}

TEST_CASE("truncation_bound_does_not_matter") {
  FockSpace space(Mode::NonChiral);
  for (const auto& w : sample_words(space, 4))
    for (Chirality c : {Chirality::Holo, Chirality::Anti})
      for (int n = -4; n <= 4; ++n)
        REQUIRE(sugawara(space, {c, n}, State(w)) == sugawara(space, {c, n}, State(w), 3));
}

TEST_CASE("virasoro_relations_hold_on_small_words") {
  FockSpace space(Mode::NonChiral);
  for (const auto& w : sample_words(space, 3))
    for (int n = -2; n <= 2; ++n)
      for (int m = -2; m <= 2; ++m) {
        REQUIRE(commutator_defect(space, n, m, Chirality::Holo, State(w)).is_zero());
        REQUIRE(commutator_defect(space, n, m, Chirality::Anti, State(w)).is_zero());
        REQUIRE(mixed_commutator_defect(space, n, m, State(w)).is_zero());
      }
}

TEST_CASE("central_term_is_visible_without_correction") {
  FockSpace space(Mode::Chiral);
  const State v = space.ground_state("one");
  State raw = sugawara(space, {Chirality::Holo, 2}, sugawara(space, {Chirality::Holo, -2}, v));
  raw -= sugawara(space, {Chirality::Holo, -2}, sugawara(space, {Chirality::Holo, 2}, v));
  raw -= Rational(4) * sugawara(space, {Chirality::Holo, 0}, v);
  CHECK(raw == Rational(kCentralCharge * 6) / 12 * v);
}

TEST_CASE("mixed_commutator_needs_non_chiral_space") {
  FockSpace space(Mode::Chiral);
  CHECK_THROWS_AS(mixed_commutator_defect(space, 1, 1, State::omega()), ChiralityError);
  CHECK_THROWS_AS(sugawara(space, {Chirality::Anti, 0}, State::omega()), ChiralityError);
}

TEST_CASE("zero_mode_is_rank_two_at_omega") {
  FockSpace space(Mode::NonChiral);
  for (Chirality c : {Chirality::Holo, Chirality::Anti}) {
    const auto [first, second] = jordan_defect(space, BasisWord{}, c);
    CHECK(first == space.ground_state("one"));
    CHECK(second.is_zero());
  }
}

TEST_CASE("zero_mode_squared_defect_vanishes") {
  FockSpace space(Mode::NonChiral);
  for (const auto& w : sample_words(space, 6))
    for (Chirality c : {Chirality::Holo, Chirality::Anti}) {
      const auto defect = jordan_defect(space, w, c);
      REQUIRE(defect.second.is_zero());
    }
}

TEST_CASE("zero_mode_preserves_bidegree") {
  FockSpace space(Mode::NonChiral);
  for (const auto& w : sample_words(space, 5))
    for (Chirality c : {Chirality::Holo, Chirality::Anti})
      for (const auto& [x, coeff] : sugawara(space, {c, 0}, State(w))) REQUIRE(bidegree_of(x) == bidegree_of(w));
}

TEST_CASE("staggered_identities_hold") {
  FockSpace space(Mode::Chiral);
  const auto reports = staggered_verify(space);
  REQUIRE(reports.size() == 5);
  const char* names[] = {"staggered.a", "staggered.b", "staggered.c", "staggered.d", "staggered.e"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].check == names[i]);
    CHECK_MESSAGE(reports[i].passed(), reports[i].input);
  }
  CHECK(reports[1].expect == Expectation::NonZero);
  CHECK(reports[1].residual == sugawara(space, {Chirality::Holo, -1}, State::omega()));
}

TEST_CASE("derivative_of_omega_is_minus_the_current_combination") {
  FockSpace space(Mode::Chiral);
  // -(η_{-1}χ_0 - χ_{-1}η_0)ω
  const State combo = space.normal_order(std::vector{Generator::eta(-1), Generator::chi(0)}) -
                      space.normal_order(std::vector{Generator::chi(-1), Generator::eta(0)});
  CHECK(sugawara(space, {Chirality::Holo, -1}, State::omega()) == -combo);
}

TEST_CASE("zero_mode_pairings_cancel_on_random_states") {
  FockSpace space(Mode::NonChiral);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial)
    REQUIRE(gaberdiel_kausch_defect(space, random_state(space, rng, 5, 6)).is_zero());
  FockSpace chiral(Mode::Chiral);
  CHECK_THROWS_AS(gaberdiel_kausch_defect(chiral, State::omega()), ChiralityError);
}

TEST_CASE("virasoro_is_linear") {
  FockSpace space(Mode::NonChiral);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const State a = random_state(space, rng, 4, 5), b = random_state(space, rng, 4, 5);
    const Rational s(3, 11);
    for (int n = -2; n <= 2; ++n) {
      const VirasoroMode m{Chirality::Holo, n};
      REQUIRE(sugawara(space, m, a + s * b) == sugawara(space, m, a) + s * sugawara(space, m, b));
    }
  }
}
