// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include "symfer/fockspace.hpp"

#include <algorithm>
#include <bit>

namespace symfer {
namespace {

using u64 = std::uint64_t;

constexpr u64 bit(int k) { return u64{1} << k; }

// Bits strictly above k.
constexpr u64 above(int k) { return k >= kMaxIndex ? 0 : ~((bit(k) << 1) - 1); }

int pc(u64 m) { return std::popcount(m); }

long signed_count(int transpositions, long magnitude) {
  return (transpositions & 1) ? -magnitude : magnitude;
}

std::vector<int> indices_of(u64 m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

u64 mask_of(std::span<const int> ks, int lowest, const char* what) {
  u64 m = 0;
  for (int k : ks) {
    if (k < lowest) throw std::invalid_argument(std::string("invalid ") + what + " index");
    if (k > kMaxIndex) throw IndexOverflow(std::string(what) + " index exceeds the word capacity");
    if (m & bit(k)) throw std::invalid_argument(std::string("repeated ") + what + " index");
    m |= bit(k);
  }
  return m;
}

// All subsets of {lowest, lowest+1, ...} with the given sum, as masks.
void subsets_with_sum(int remaining, int next, u64 acc, std::vector<u64>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int k = next; k <= remaining && k <= kMaxIndex; ++k)
    subsets_with_sum(remaining - k, k + 1, acc | bit(k), out);
}

std::vector<u64> subsets(int sum, bool allow_zero) {
  std::vector<u64> base;
  subsets_with_sum(sum, 1, 0, base);
  if (!allow_zero) return base;
  std::vector<u64> out;
  out.reserve(2 * base.size());
  for (u64 m : base) {
    out.push_back(m);
    out.push_back(m | 1);
  }
  return out;
}

}  // namespace

int anticommutator(const Generator& u, const Generator& v) {
  if (u.species == v.species) return 0;
  if (u.chirality != v.chirality) return 0;
  if (u.index + v.index != 0) return 0;
  return u.species == Species::Eta ? u.index : -u.index;
}

std::string to_string(const Generator& g) {
  std::string name = g.species == Species::Eta ? "eta" : "chi";
  if (g.chirality == Chirality::Anti) name += "bar";
  return name + "(" + std::to_string(g.index) + ")";
}

BasisWord BasisWord::from_indices(std::span<const int> eta, std::span<const int> chi,
                                  std::span<const int> etabar, std::span<const int> chibar) {
  return {mask_of(eta, 0, "eta"), mask_of(chi, 0, "chi"), mask_of(etabar, 1, "etabar"),
          mask_of(chibar, 1, "chibar")};
}

std::vector<int> BasisWord::eta_indices() const { return indices_of(eta); }
std::vector<int> BasisWord::chi_indices() const { return indices_of(chi); }
std::vector<int> BasisWord::etabar_indices() const { return indices_of(etabar); }
std::vector<int> BasisWord::chibar_indices() const { return indices_of(chibar); }

std::vector<Generator> BasisWord::generators() const {
  std::vector<Generator> out;
  out.reserve(length());
  auto block = [&out](u64 m, Species s, Chirality c) {
    std::vector<int> ks = indices_of(m);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) out.push_back({s, c, -*it});
  };
  block(eta, Species::Eta, Chirality::Holo);
  block(chi, Species::Chi, Chirality::Holo);
  block(etabar, Species::Eta, Chirality::Anti);
  block(chibar, Species::Chi, Chirality::Anti);
  return out;
}

int BasisWord::length() const { return pc(eta) + pc(chi) + pc(etabar) + pc(chibar); }

int BasisWord::max_index() const {
  const u64 all = eta | chi | etabar | chibar;
  return all == 0 ? 0 : 63 - std::countl_zero(all);
}

Parity parity_of(const BasisWord& w) { return (w.length() & 1) ? Parity::Fer : Parity::Bos; }

Bidegree bidegree_of(const BasisWord& w) {
  auto sum = [](u64 m) {
    int s = 0;
    for (int k : indices_of(m)) s += k;
    return s;
  };
  return {sum(w.eta) + sum(w.chi), sum(w.etabar) + sum(w.chibar)};
}

State::State(const BasisWord& w, const Rational& c) { add(w, c); }

Rational State::coefficient(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int State::max_index() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.max_index());
  return d;
}

bool State::has_barred() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.has_barred(); });
}

void State::add(const BasisWord& w, const Rational& c) {
  if (c == 0) return;
  Rational value = c;
  value.canonicalize();
  auto [it, inserted] = terms_.try_emplace(w, value);
  if (inserted) return;
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

State& State::operator+=(const State& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

State& State::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

GroundName ground_name_from_string(std::string_view name) {
  static const std::pair<std::string_view, GroundName> table[] = {
      {"one", GroundName::One},
      {"omega", GroundName::Omega},
      {"xi", GroundName::Xi},
      {"theta", GroundName::Theta},
      {"chi_cur", GroundName::ChiCurrent},
      {"eta_cur", GroundName::EtaCurrent},
      {"chibar_cur", GroundName::ChibarCurrent},
      {"etabar_cur", GroundName::EtabarCurrent},
  };
  for (const auto& [key, value] : table)
    if (key == name) return value;
  throw std::invalid_argument("unknown ground state '" + std::string(name) + "'");
}

void FockSpace::check_chirality(Chirality c) const {
  if (c == Chirality::Anti && mode_ == Mode::Chiral)
    throw ChiralityError("antiholomorphic mode used in the chiral Fock space");
}

void FockSpace::check_generator(const Generator& g) const { check_chirality(g.chirality); }

std::optional<WordImage> FockSpace::act(const Generator& g, const BasisWord& w) const {
  check_generator(g);
  // Barred zero modes coincide with the unbarred ones.
  const bool anti = g.chirality == Chirality::Anti && g.index != 0;
  const int n_eta = pc(w.eta), n_chi = pc(w.chi), n_etabar = pc(w.etabar);

  if (g.index <= 0) {
    const int k = -g.index;
    if (k > kMaxIndex) throw IndexOverflow("creation mode " + to_string(g) + " exceeds the word capacity");
    BasisWord out = w;
    u64* mask = nullptr;
    int before = 0;
    if (!anti && g.species == Species::Eta) {
      mask = &out.eta;
      before = pc(w.eta & above(k));
    } else if (!anti) {
      mask = &out.chi;
      before = n_eta + pc(w.chi & above(k));
    } else if (g.species == Species::Eta) {
      mask = &out.etabar;
      before = n_eta + n_chi + pc(w.etabar & above(k));
    } else {
      mask = &out.chibar;
      before = n_eta + n_chi + n_etabar + pc(w.chibar & above(k));
    }
    if (*mask & bit(k)) return std::nullopt;
    *mask |= bit(k);
    return WordImage{signed_count(before, 1), out};
  }

  const int k = g.index;
  if (k > kMaxIndex) return std::nullopt;
  BasisWord out = w;
  u64* partner = nullptr;
  int before = 0;
  long magnitude = 0;
  if (!anti && g.species == Species::Eta) {
    partner = &out.chi;
    before = n_eta + pc(w.chi & above(k));
    magnitude = k;
  } else if (!anti) {
    partner = &out.eta;
    before = pc(w.eta & above(k));
    magnitude = -k;
  } else if (g.species == Species::Eta) {
    partner = &out.chibar;
    before = n_eta + n_chi + n_etabar + pc(w.chibar & above(k));
    magnitude = k;
  } else {
    partner = &out.etabar;
    before = n_eta + n_chi + pc(w.etabar & above(k));
    magnitude = -k;
  }
  if (!(*partner & bit(k))) return std::nullopt;
  *partner &= ~bit(k);
  return WordImage{signed_count(before, magnitude), out};
}

State FockSpace::apply(const Generator& g, const State& v) const {
  check_generator(g);
  State out;
  for (const auto& [w, c] : v) {
    if (auto img = act(g, w)) out.add(img->word, c * img->coefficient);
  }
  return out;
}

State FockSpace::normal_order(std::span<const Generator> raw) const {
  for (const Generator& g : raw) check_generator(g);
  long coefficient = 1;
  BasisWord w;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    auto img = act(*it, w);
    if (!img) return {};
    coefficient *= img->coefficient;
    w = img->word;
  }
  return State(w, coefficient);
}

State FockSpace::ground_state(GroundName name) const {
  const State one = normal_order(std::vector{Generator::chi(0), Generator::eta(0)});
  switch (name) {
    case GroundName::Omega:
      return State::omega();
    case GroundName::One:
      return one;
    case GroundName::Xi:
      return -apply(Generator::chi(0), State::omega());
    case GroundName::Theta:
      return -apply(Generator::eta(0), State::omega());
    case GroundName::ChiCurrent:
      return apply(Generator::chi(-1), one);
    case GroundName::EtaCurrent:
      return apply(Generator::eta(-1), one);
    case GroundName::ChibarCurrent:
      return apply(Generator::chibar(-1), one);
    case GroundName::EtabarCurrent:
      return apply(Generator::etabar(-1), one);
  }
  throw std::invalid_argument("unknown ground state");
}

State FockSpace::ground_state(std::string_view name) const {
  return ground_state(ground_name_from_string(name));
}

std::vector<BasisWord> FockSpace::enumerate_basis(Bidegree d) const {
  std::vector<BasisWord> out;
  if (d.delta < 0 || d.deltabar < 0) return out;
  if (mode_ == Mode::Chiral && d.deltabar != 0) return out;
  std::vector<std::pair<u64, u64>> holo, anti;
  for (int s = 0; s <= d.delta; ++s)
    for (u64 a : subsets(s, true))
      for (u64 b : subsets(d.delta - s, true)) holo.emplace_back(a, b);
  for (int s = 0; s <= d.deltabar; ++s)
    for (u64 a : subsets(s, false))
      for (u64 b : subsets(d.deltabar - s, false)) anti.emplace_back(a, b);
  out.reserve(holo.size() * anti.size());
  for (const auto& [e, c] : holo)
    for (const auto& [eb, cb] : anti) out.push_back({e, c, eb, cb});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisWord> FockSpace::enumerate_up_to(int total) const {
  std::vector<BasisWord> out;
  for (int d = 0; d <= total; ++d) {
    const int max_bar = mode_ == Mode::Chiral ? 0 : total - d;
    for (int db = 0; db <= max_bar; ++db) {
      auto part = enumerate_basis({d, db});
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

State FockSpace::automorphism_alpha(const Rational& a, const State& v) const {
  State out = v;
  if (a == 0) return out;
  for (const auto& [w, c] : v) {
    std::vector<Generator> raw = w.generators();
    raw.push_back(Generator::chi(0));
    raw.push_back(Generator::eta(0));
    State shifted = normal_order(raw);
    shifted *= a * c;
    out += shifted;
  }
  return out;
}

}  // namespace symfer
