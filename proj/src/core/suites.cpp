// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include "symfer/suites.hpp"

#include "symfer/exprdsl.hpp"

#include <random>
#include <string>
#include <vector>

namespace symfer {
namespace {

std::string describe_words(const SuiteConfig& c) {
  return "words with delta+deltabar<=" + std::to_string(c.max_degree);
}

// Collects per-input residuals and reports the first nonzero one.
class Sweep {
 public:
  explicit Sweep(std::string check, std::string input) : check_(std::move(check)), input_(std::move(input)) {}

  void record(const State& residual, const std::string& where) {
    if (failed_ || residual.is_zero()) return;
    failed_ = true;
    residual_ = residual;
    where_ = where;
  }

  DefectReport report() const {
    std::string input = input_;
    if (failed_) input += "; first failure at " + where_;
    return {check_, input, residual_, Expectation::Zero};
  }

 private:
  std::string check_, input_, where_;
  State residual_;
  bool failed_ = false;
};

std::vector<Generator> generators_up_to(const FockSpace& space, int max_mode) {
  std::vector<Generator> out;
  for (int k = -max_mode; k <= max_mode; ++k) {
    out.push_back(Generator::eta(k));
    out.push_back(Generator::chi(k));
    if (space.mode() == Mode::NonChiral) {
      out.push_back(Generator::etabar(k));
      out.push_back(Generator::chibar(k));
    }
  }
  return out;
}

std::vector<BasisWord> words_within(const FockSpace& space, Bidegree cap) {
  std::vector<BasisWord> out;
  for (int d = 0; d <= cap.delta; ++d)
    for (int db = 0; db <= cap.deltabar; ++db) {
      auto part = space.enumerate_basis({d, db});
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

State random_state(std::mt19937_64& rng, const std::vector<BasisWord>& pool, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  State s;
  for (int i = 0; i < terms; ++i) s.add(pool[pick(rng)], random_rational(rng));
  return s;
}

std::string seed_tag(const SuiteConfig& c) { return "seed=" + std::to_string(c.seed); }

std::string chirality_name(Chirality c) { return c == Chirality::Holo ? "holo" : "anti"; }

}  // namespace

long chiral_basis_count(int delta) {
  if (delta < 0) return 0;
  std::vector<long> poly(delta + 1, 0);
  poly[0] = 4;
  for (int k = 1; k <= delta; ++k)
    for (int rep = 0; rep < 2; ++rep)
      for (int d = delta; d >= k; --d) poly[d] += poly[d - k];
  return poly[delta];
}

void run_algebra_suite(const SuiteConfig& config, const ReportSink& sink) {
  const FockSpace space(Mode::NonChiral);
  const FockSpace chiral(Mode::Chiral);
  const std::vector<BasisWord> words = space.enumerate_up_to(config.max_degree);
  const std::vector<Generator> gens = generators_up_to(space, config.max_mode);

  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      const Generator& u = gens[i];
      const Generator& v = gens[j];
      Sweep sweep("algebra.anticommutator", "{" + to_string(u) + ", " + to_string(v) + "} on " + describe_words(config));
      const Rational scalar = anticommutator(u, v);
      for (const BasisWord& w : words) {
        const State s(w);
        State r = space.apply(u, space.apply(v, s)) + space.apply(v, space.apply(u, s));
        r -= scalar * s;
        sweep.record(r, render(w));
      }
      sink(sweep.report());
    }
  }

  Sweep idem("algebra.idempotence", "normal_order of canonical words on " + describe_words(config));
  Sweep grading("algebra.grading", "creation modes raise the bidegree on " + describe_words(config));
  Sweep parity("algebra.parity", "generators flip parity on " + describe_words(config));
  for (const BasisWord& w : words) {
    idem.record(space.normal_order(w.generators()) - State(w), render(w));
    const Bidegree d0 = bidegree_of(w);
    for (const Generator& g : gens) {
      const State image = space.apply(g, State(w));
      State bad_grade, bad_parity;
      for (const auto& [x, c] : image) {
        const Bidegree d1 = bidegree_of(x);
        const int shift = -g.index;
        const bool anti = g.chirality == Chirality::Anti && g.index != 0;
        const Bidegree want = anti ? Bidegree{d0.delta, d0.deltabar + shift} : Bidegree{d0.delta + shift, d0.deltabar};
        if (d1 != want) bad_grade.add(x, c);
        if (parity_of(x) == parity_of(w)) bad_parity.add(x, c);
      }
      grading.record(bad_grade, to_string(g) + " on " + render(w));
      parity.record(bad_parity, to_string(g) + " on " + render(w));
    }
  }
  sink(idem.report());
  sink(grading.report());
  sink(parity.report());

  for (int d = 0; d <= config.max_degree; ++d) {
    const long got = static_cast<long>(chiral.enumerate_basis({d, 0}).size());
    const long want = chiral_basis_count(d);
    State residual;
    residual.add(BasisWord{}, Rational(got - want));
    sink({"algebra.basis_count", "chiral degree " + std::to_string(d) + ": " + std::to_string(got) +
                                     " words, generating function " + std::to_string(want),
          residual, Expectation::Zero});
  }

  std::mt19937_64 rng(config.seed);
  const int cap = std::min(3, config.max_degree);
  const std::vector<BasisWord> small = words_within(space, {cap, cap});
  Sweep compose("algebra.automorphism_composition",
                "alpha_a(alpha_b(v)) = alpha_{a+b}(v) on bidegree<=(" + std::to_string(cap) + "," +
                    std::to_string(cap) + "); " + seed_tag(config));
  for (int trial = 0; trial < 8; ++trial) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    for (const BasisWord& w : small) {
      const State v(w);
      compose.record(space.automorphism_alpha(a, space.automorphism_alpha(b, v)) - space.automorphism_alpha(a + b, v),
                     "a=" + a.get_str() + " b=" + b.get_str() + " v=" + render(w));
    }
  }
  sink(compose.report());
}

void run_virasoro_suite(const SuiteConfig& config, const ReportSink& sink) {
  const FockSpace space(Mode::NonChiral);
  const std::vector<BasisWord> words = space.enumerate_up_to(config.max_degree);
  const int nm = config.max_mode;

  for (Chirality c : {Chirality::Holo, Chirality::Anti}) {
    for (int n = -nm; n <= nm; ++n) {
      for (int m = -nm; m <= nm; ++m) {
        Sweep s("virasoro.commutator", "[L(" + std::to_string(n) + "), L(" + std::to_string(m) + ")] " +
                                           chirality_name(c) + ", c=-2, on " + describe_words(config));
        for (const BasisWord& w : words) s.record(commutator_defect(space, n, m, c, State(w)), render(w));
        sink(s.report());
      }
    }
  }

  for (int n = -nm; n <= nm; ++n) {
    for (int m = -nm; m <= nm; ++m) {
      Sweep s("virasoro.mixed_commutator", "[L(" + std::to_string(n) + "), Lbar(" + std::to_string(m) + ")] on " +
                                               describe_words(config));
      for (const BasisWord& w : words) s.record(mixed_commutator_defect(space, n, m, State(w)), render(w));
      sink(s.report());
    }
  }

  for (Chirality c : {Chirality::Holo, Chirality::Anti}) {
    Sweep s("virasoro.jordan", std::string(c == Chirality::Holo ? "(L0 - delta)^2" : "(Lbar0 - deltabar)^2") +
                                   " on " + describe_words(config));
    for (const BasisWord& w : words) s.record(jordan_defect(space, w, c).second, render(w));
    sink(s.report());
  }
  sink({"virasoro.jordan_rank2", "(L0 - 0) omega", jordan_defect(space, BasisWord{}, Chirality::Holo).first,
        Expectation::NonZero});

  Sweep trunc("virasoro.truncation", "L(n) with cutoff D(v) vs D(v)+3, |n|<=" + std::to_string(nm) + ", on " +
                                         describe_words(config));
  for (Chirality c : {Chirality::Holo, Chirality::Anti})
    for (int n = -nm; n <= nm; ++n)
      for (const BasisWord& w : words)
        trunc.record(sugawara(space, {c, n}, State(w)) - sugawara(space, {c, n}, State(w), 3),
                     "L(" + std::to_string(n) + ") " + chirality_name(c) + " on " + render(w));
  sink(trunc.report());

  const State xi = space.ground_state(GroundName::Xi), theta = space.ground_state(GroundName::Theta);
  sink({"virasoro.current_derivative", "L(-1) xi - chi",
        sugawara(space, {Chirality::Holo, -1}, xi) - space.ground_state(GroundName::ChiCurrent), Expectation::Zero});
  sink({"virasoro.current_derivative", "L(-1) theta - eta",
        sugawara(space, {Chirality::Holo, -1}, theta) - space.ground_state(GroundName::EtaCurrent), Expectation::Zero});
  sink({"virasoro.current_derivative", "Lbar(-1) xi - chibar",
        sugawara(space, {Chirality::Anti, -1}, xi) - space.ground_state(GroundName::ChibarCurrent), Expectation::Zero});
  sink({"virasoro.current_derivative", "Lbar(-1) theta - etabar",
        sugawara(space, {Chirality::Anti, -1}, theta) - space.ground_state(GroundName::EtabarCurrent),
        Expectation::Zero});

  Sweep gk("virasoro.gaberdiel_kausch", "(chi0 eta0 - chibar0 etabar0) on " + describe_words(config));
  for (const BasisWord& w : words) gk.record(gaberdiel_kausch_defect(space, State(w)), render(w));
  sink(gk.report());

  std::mt19937_64 rng(config.seed);
  const std::vector<BasisWord> pool = words_within(space, {4, 4});
  Sweep gk_random("virasoro.gaberdiel_kausch", "random states of bidegree<=(4,4); " + seed_tag(config));
  for (int trial = 0; trial < 32; ++trial) {
    const State v = random_state(rng, pool, 6);
    gk_random.record(gaberdiel_kausch_defect(space, v), "trial " + std::to_string(trial));
  }
  sink(gk_random.report());
}

void run_staggered_suite(const SuiteConfig&, const ReportSink& sink) {
  const FockSpace space(Mode::Chiral);
  for (const DefectReport& r : staggered_verify(space)) sink(r);
}

}  // namespace symfer
