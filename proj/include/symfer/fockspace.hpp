// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fockspace.hpp
 * @brief Symplectic-fermion mode algebra acting on the logarithmic Fock space.
 *
 * A PBW word is stored as four 64-bit occupation masks, one per mode species.
 * Bit k of `eta` set means η_{-k} is present. The canonical order of a word is
 * the η block, the χ block, the η̄ block, then the χ̄ block; inside a block the
 * most negative mode stands leftmost.
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symfer {

using Rational = mpq_class;

enum class Species : std::uint8_t { Eta, Chi };
enum class Chirality : std::uint8_t { Holo, Anti };
enum class Mode : std::uint8_t { Chiral, NonChiral };
enum class Parity : std::uint8_t { Bos, Fer };

/// Largest mode index a word can store (one bit per index in a 64-bit mask).
inline constexpr int kMaxIndex = 63;

/// Raised when a barred generator or Virasoro mode is used in chiral mode.
class ChiralityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a creation mode exceeds kMaxIndex.
class IndexOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Generator {
  Species species = Species::Eta;
  Chirality chirality = Chirality::Holo;
  int index = 0;

  static constexpr Generator eta(int k) { return {Species::Eta, Chirality::Holo, k}; }
  static constexpr Generator chi(int k) { return {Species::Chi, Chirality::Holo, k}; }
  static constexpr Generator etabar(int k) { return {Species::Eta, Chirality::Anti, k}; }
  static constexpr Generator chibar(int k) { return {Species::Chi, Chirality::Anti, k}; }

  constexpr auto operator<=>(const Generator&) const = default;
};

/// Anticommutator {u, v} as a scalar: k for {η_k, χ_{-k}}, -k for {χ_k, η_{-k}}.
int anticommutator(const Generator& u, const Generator& v);

std::string to_string(const Generator& g);

struct Bidegree {
  int delta = 0;
  int deltabar = 0;
  constexpr auto operator<=>(const Bidegree&) const = default;
};

/// Canonical PBW word applied to ω.
struct BasisWord {
  std::uint64_t eta = 0;
  std::uint64_t chi = 0;
  std::uint64_t etabar = 0;
  std::uint64_t chibar = 0;

  /// Builds a word from the k's of the creation modes; order and repeats are validated.
  static BasisWord from_indices(std::span<const int> eta, std::span<const int> chi,
                                std::span<const int> etabar = {},
                                std::span<const int> chibar = {});

  std::vector<int> eta_indices() const;
  std::vector<int> chi_indices() const;
  std::vector<int> etabar_indices() const;
  std::vector<int> chibar_indices() const;

  /// Generators in canonical left-to-right order.
  std::vector<Generator> generators() const;

  int length() const;
  int max_index() const;
  bool has_barred() const { return (etabar | chibar) != 0; }

  constexpr auto operator<=>(const BasisWord&) const = default;
};

Parity parity_of(const BasisWord& w);
Bidegree bidegree_of(const BasisWord& w);

/// Finite linear combination of basis words with exact rational coefficients.
class State {
 public:
  using Terms = std::map<BasisWord, Rational>;

  State() = default;
  explicit State(const BasisWord& w, const Rational& c = 1);

  static State omega() { return State(BasisWord{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of w (zero when absent).
  Rational coefficient(const BasisWord& w) const;
  /// Largest stored index over all words; 0 for states without generators.
  int max_index() const;
  bool has_barred() const;

  void add(const BasisWord& w, const Rational& c);
  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Rational& c);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Rational& c, State a) { return a *= c; }
  friend State operator-(State a) { return a *= -1; }
  friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Result of one generator acting on one word: a single signed term or zero.
struct WordImage {
  long coefficient = 0;
  BasisWord word;
};

enum class GroundName {
  One, Omega, Xi, Theta, ChiCurrent, EtaCurrent, ChibarCurrent, EtabarCurrent
};

/// Parses a ground-state name such as "omega" or "chibar_cur".
GroundName ground_name_from_string(std::string_view name);

/// The chiral or non-chiral Fock space; the mode is fixed at construction.
class FockSpace {
 public:
  explicit FockSpace(Mode mode = Mode::NonChiral) : mode_(mode) {}

  Mode mode() const { return mode_; }

  /// Acts with g on a single word; std::nullopt means the image is zero.
  std::optional<WordImage> act(const Generator& g, const BasisWord& w) const;

  State apply(const Generator& g, const State& v) const;

  /// Left action of raw (leftmost first) on ω, normal ordered.
  State normal_order(std::span<const Generator> raw) const;

  State ground_state(GroundName name) const;
  State ground_state(std::string_view name) const;

  std::vector<BasisWord> enumerate_basis(Bidegree d) const;
  /// All words with delta + deltabar <= total (chiral mode: delta <= total).
  std::vector<BasisWord> enumerate_up_to(int total) const;

  /// The α-automorphism: (word)ω ↦ (word)ω + a·(word)𝟙, extended linearly.
  State automorphism_alpha(const Rational& a, const State& v) const;

  void check_generator(const Generator& g) const;
  void check_chirality(Chirality c) const;

 private:
  Mode mode_;
};

}  // namespace symfer

template <>
struct std::hash<symfer::BasisWord> {
  std::size_t operator()(const symfer::BasisWord& w) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(w.eta);
    for (std::uint64_t m : {w.chi, w.etabar, w.chibar})
      h ^= std::hash<std::uint64_t>{}(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
