// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include "symfer/correlators.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>

namespace symfer {
namespace {

constexpr double kFourPi = 4 * std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

// One field after peeling: a ground insertion or a current on a contour.
struct Slot {
  GroundKind kind = GroundKind::Omega;
  Complex center;
  Wirtinger flags;
  bool variable = false;
  int power = 0;
  double radius = 0;
  std::size_t insertion = 0;
};

struct Term {
  Complex coeff{1};
  std::vector<Slot> slots;
};

struct Node {
  ChartPoint chart;
  Complex weight;
};

GroundKind current_kind(Species s) { return s == Species::Eta ? GroundKind::Theta : GroundKind::Xi; }

Wirtinger current_flags(Chirality c) {
  return c == Chirality::Holo ? Wirtinger{.holo = true} : Wirtinger{.anti = true};
}

std::vector<Node> nodes_of(const Domain& d, const Slot& s, int m) {
  if (!s.variable) return {{d.chart_point(s.center), 1.0}};
  std::vector<Node> out;
  out.reserve(m);
  const int p = s.power + 1;
  const double scale = std::pow(s.radius, p) / m;
  for (int a = 0; a < m; ++a) {
    const double t = kTwoPi * a / m;
    const Complex zeta = s.center + std::polar(s.radius, t);
    const double phase = s.flags.holo ? p * t : -p * t;
    out.push_back({d.chart_point(zeta), std::polar(scale, phase)});
  }
  return out;
}

// Sign of the permutation bringing the fermions to ξ₁θ₁ξ₂θ₂… order.
int reorder_sign(const std::vector<const Slot*>& fermions) {
  std::vector<int> target;
  int xi = 0, theta = 0;
  for (const Slot* s : fermions) target.push_back(s->kind == GroundKind::Xi ? 2 * xi++ : 2 * theta++ + 1);
  int inversions = 0;
  for (std::size_t i = 0; i < target.size(); ++i)
    for (std::size_t j = i + 1; j < target.size(); ++j) inversions += target[i] > target[j];
  return (inversions & 1) ? -1 : 1;
}

auto slot_key(const Slot* s) {
  return std::tuple(s->center.real(), s->center.imag(), s->radius, s->power, s->kind, s->flags.holo, s->flags.anti);
}

// Sorts slots by position and shape; returns the sign of the applied permutation.
int sort_sign(std::vector<const Slot*>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && slot_key(v[j]) < slot_key(v[j - 1]); --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  return sign;
}

double regular_diagonal(const ChartPoint& p) {
  return std::log((1 - std::norm(p.u)) / std::abs(p.du)) / kTwoPi;
}

// Determinant formula with each variable slot integrated inside its row or column.
Complex determinant_sum(const Domain& d, Complex alpha, const std::vector<Slot>& slots, int m) {
  std::vector<const Slot*> rows, cols, omegas, fermions;
  for (const Slot& s : slots) {
    switch (s.kind) {
      case GroundKind::Xi:
        rows.push_back(&s);
        fermions.push_back(&s);
        break;
      case GroundKind::Theta:
        cols.push_back(&s);
        fermions.push_back(&s);
        break;
      case GroundKind::Omega:
        if (s.variable || s.flags.holo || s.flags.anti)
          throw CorrelatorError("derivative decorations on an omega insertion are not supported");
        omegas.push_back(&s);
        break;
      case GroundKind::One:
        break;
    }
  }
  if (rows.size() != cols.size()) return 0;
  const int sign = reorder_sign(fermions) * ((omegas.size() & 1) ? -1 : 1);
  rows.insert(rows.end(), omegas.begin(), omegas.end());
  cols.insert(cols.end(), omegas.begin(), omegas.end());
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) return static_cast<double>(sign);
  // A fixed row and column order makes relabelled inputs produce bitwise identical matrices.
  const int canonical = sort_sign(rows) * sort_sign(cols);

  std::vector<std::vector<Node>> row_nodes, col_nodes;
  for (const Slot* s : rows) row_nodes.push_back(nodes_of(d, *s, m));
  for (const Slot* s : cols) col_nodes.push_back(nodes_of(d, *s, m));

  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (rows[i] == cols[j]) {
        a(i, j) = kFourPi * regular_diagonal(row_nodes[i][0].chart) + alpha;
        continue;
      }
      Complex sum = 0;
      for (const Node& x : row_nodes[i]) {
        Complex inner = 0;
        for (const Node& y : col_nodes[j])
          inner += y.weight * green_kernel(x.chart, y.chart, rows[i]->flags, cols[j]->flags);
        sum += x.weight * inner;
      }
      a(i, j) = kFourPi * sum;
    }
  }
  return static_cast<double>(sign * canonical) * a.partialPivLu().determinant();
}

// Explicit node-by-node summation over the variable slots listed in order.
Complex nested_sum(const Domain& d, Complex alpha, std::vector<Slot>& slots,
                   const std::vector<std::size_t>& order, std::size_t next, int m) {
  if (next == order.size()) return determinant_sum(d, alpha, slots, m);
  Slot& s = slots[order[next]];
  const Slot saved = s;
  const std::vector<Node> nodes = nodes_of(d, saved, m);
  Complex total = 0;
  for (int a = 0; a < m; ++a) {
    const double t = kTwoPi * a / m;
    s.variable = false;
    s.center = saved.center + std::polar(saved.radius, t);
    total += nodes[a].weight * nested_sum(d, alpha, slots, order, next + 1, m);
  }
  s = saved;
  return total;
}

std::vector<std::size_t> peel_sequence(const std::vector<Slot>& slots,
                                       const std::vector<std::size_t>& peel_order,
                                       std::size_t n_insertions) {
  std::vector<std::size_t> by_insertion(n_insertions);
  for (std::size_t i = 0; i < n_insertions; ++i) by_insertion[i] = i;
  if (!peel_order.empty()) {
    std::vector<std::size_t> sorted = peel_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != by_insertion) throw CorrelatorError("peel order must permute the insertions");
    by_insertion = peel_order;
  }
  std::vector<std::size_t> out;
  for (std::size_t ins : by_insertion)
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (slots[k].variable && slots[k].insertion == ins) out.push_back(k);
  return out;
}

Complex evaluate_term(const Domain& d, Complex alpha, Term term, const QuadratureOptions& opts,
                      std::size_t n_insertions) {
  if (!opts.nested) return determinant_sum(d, alpha, term.slots, opts.nodes);
  const auto order = peel_sequence(term.slots, opts.peel_order, n_insertions);
  return nested_sum(d, alpha, term.slots, order, 0, opts.nodes);
}

void validate(const CorrelatorQuery& q) {
  for (std::size_t i = 0; i < q.insertions.size(); ++i) {
    const Complex z = q.insertions[i].point;
    if (!q.domain.contains(z))
      throw CorrelatorError("insertion point " + format_complex(z) + " is not inside " + q.domain.descriptor());
    for (std::size_t j = 0; j < i; ++j)
      if (q.insertions[j].point == z) throw CorrelatorError("coincident insertion points at " + format_complex(z));
  }
}

void validate_options(const QuadratureOptions& opts) {
  if (opts.nodes < 1) throw CorrelatorError("quadrature needs at least one node");
  if (!(opts.radius_scale > 0 && opts.radius_scale <= 1)) throw CorrelatorError("radius scale must lie in (0, 1]");
  if (!(opts.depth_factor > 0 && opts.depth_factor < 1)) throw CorrelatorError("depth factor must lie in (0, 1)");
}

double base_radius(const CorrelatorQuery& q, std::size_t i, const QuadratureOptions& opts) {
  const Complex z = q.insertions[i].point;
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < q.insertions.size(); ++j)
    if (j != i) sep = std::min(sep, std::abs(z - q.insertions[j].point));
  return opts.radius_scale * std::min(0.5 * sep, q.domain.boundary_clearance(z));
}

double depth_radius(double r0, int depth, const QuadratureOptions& opts) {
  const double r = r0 * std::pow(opts.depth_factor, depth);
  if (!(r >= opts.min_radius)) throw ContourError("contour radius underflow (" + std::to_string(r) + ")");
  return r;
}

// Appends the slots of one basis word at z; returns the scalar from zero-mode reordering.
int word_slots(const BasisWord& w, Complex z, std::size_t ins, double r0, int depth_offset,
               const QuadratureOptions& opts, std::vector<Slot>& out) {
  static const FockSpace space(Mode::NonChiral);
  std::vector<Generator> moving;
  bool has_eta0 = false, has_chi0 = false;
  for (const Generator& g : w.generators()) {
    if (g.index != 0) {
      moving.push_back(g);
    } else if (g.species == Species::Eta) {
      has_eta0 = true;
    } else {
      has_chi0 = true;
    }
  }
  std::vector<Generator> reordered = moving;
  if (has_eta0) reordered.push_back(Generator::eta(0));
  if (has_chi0) reordered.push_back(Generator::chi(0));
  const int sign = static_cast<int>(space.normal_order(reordered).coefficient(w).get_num().get_si());

  int depth = depth_offset;
  for (const Generator& g : moving) {
    Slot s{current_kind(g.species), z, current_flags(g.chirality), true, g.index,
           depth_radius(r0, depth++, opts), ins};
    out.push_back(s);
  }
  GroundKind leaf = GroundKind::Omega;
  int factor = 1;
  if (has_eta0 && has_chi0) {
    leaf = GroundKind::One;
    factor = -1;
  } else if (has_eta0) {
    leaf = GroundKind::Theta;
    factor = -1;
  } else if (has_chi0) {
    leaf = GroundKind::Xi;
    factor = -1;
  }
  if (leaf != GroundKind::One) out.push_back({leaf, z, {}, false, 0, 0, ins});
  return sign * factor;
}

struct Outer {
  std::size_t target;
  Generator generator;
};

// Multilinear expansion of all insertions into peeled terms; odd-parity terms are dropped.
std::vector<Term> expand(const CorrelatorQuery& q, const QuadratureOptions& opts,
                         const std::optional<Outer>& outer) {
  std::vector<Term> terms{Term{}};
  std::vector<int> lengths{outer ? 1 : 0};
  for (std::size_t i = 0; i < q.insertions.size(); ++i) {
    const Insertion& ins = q.insertions[i];
    const bool extracted = outer && outer->target == i;
    const double r0 = base_radius(q, i, opts);
    std::vector<Term> next;
    std::vector<int> next_lengths;
    for (const auto& [w, c] : ins.state) {
      std::vector<Slot> local;
      if (extracted) {
        const Generator& g = outer->generator;
        local.push_back({current_kind(g.species), ins.point, current_flags(g.chirality), true, g.index,
                         depth_radius(r0, 0, opts), i});
      }
      const int scalar = word_slots(w, ins.point, i, r0, extracted ? 1 : 0, opts, local);
      const Complex coeff = c.get_d() * static_cast<double>(scalar);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        Term term = terms[t];
        term.coeff *= coeff;
        term.slots.insert(term.slots.end(), local.begin(), local.end());
        next.push_back(std::move(term));
        next_lengths.push_back(lengths[t] + w.length());
      }
    }
    terms = std::move(next);
    lengths = std::move(next_lengths);
  }
  std::vector<Term> out;
  for (std::size_t t = 0; t < terms.size(); ++t)
    if ((lengths[t] & 1) == 0) out.push_back(std::move(terms[t]));
  return out;
}

Complex sum_terms(const CorrelatorQuery& q, const std::vector<Term>& terms, const QuadratureOptions& opts) {
  Complex total = 0;
  for (const Term& t : terms) total += t.coeff * evaluate_term(q.domain, q.alpha, t, opts, q.insertions.size());
  return total;
}

const Insertion& single_omega(const CorrelatorQuery& q) {
  if (q.insertions.size() != 1 || !(q.insertions[0].state == State::omega()))
    throw CorrelatorError("covariance check needs a single omega insertion");
  return q.insertions[0];
}

}  // namespace

double fer_correlator(const Domain& d, std::span<const Complex> xi, std::span<const Complex> theta) {
  if (xi.size() != theta.size()) return 0;
  std::vector<Complex> all(xi.begin(), xi.end());
  all.insert(all.end(), theta.begin(), theta.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!d.contains(all[i])) throw CorrelatorError("point " + format_complex(all[i]) + " is not inside " + d.descriptor());
    for (std::size_t j = 0; j < i; ++j)
      if (all[i] == all[j]) throw CorrelatorError("coincident points at " + format_complex(all[i]));
  }
  const auto n = static_cast<Eigen::Index>(xi.size());
  if (n == 0) return 1;
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = kFourPi * green(d, xi[i], theta[j]).total;
  return g.partialPivLu().determinant();
}

Complex ground_correlator(const Domain& d, Complex alpha, std::span<const GroundInsertion> ins) {
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < ins.size(); ++i) {
    const GroundInsertion& g = ins[i];
    if (!d.contains(g.point)) throw CorrelatorError("point " + format_complex(g.point) + " is not inside " + d.descriptor());
    for (std::size_t j = 0; j < i; ++j)
      if (ins[j].point == g.point) throw CorrelatorError("coincident points at " + format_complex(g.point));
    if (g.kind == GroundKind::One) continue;
    if (g.kind == GroundKind::Omega && (g.d_holo || g.d_anti))
      throw CorrelatorError("derivative decorations on an omega insertion are not supported");
    slots.push_back({g.kind, g.point, {g.d_holo, g.d_anti}, false, 0, 0, i});
  }
  return determinant_sum(d, alpha, slots, 1);
}

Complex mode_extract(const CorrelatorQuery& q, std::size_t target, const Generator& outer,
                     const QuadratureOptions& opts) {
  validate(q);
  validate_options(opts);
  if (target >= q.insertions.size()) throw CorrelatorError("target insertion out of range");
  const std::vector<Term> terms = expand(q, opts, Outer{target, outer});
  // The extracted current is the first slot contributed by the target insertion.
  Complex total = 0;
  for (const Term& t : terms) {
    auto it = std::find_if(t.slots.begin(), t.slots.end(),
                           [&](const Slot& s) { return s.insertion == target && s.variable; });
    const std::size_t k = static_cast<std::size_t>(it - t.slots.begin());
    const Slot outer_slot = t.slots[k];
    const std::vector<Node> nodes = nodes_of(q.domain, outer_slot, opts.nodes);
    Complex sum = 0;
    for (int a = 0; a < opts.nodes; ++a) {
      Term inner = t;
      inner.slots[k].variable = false;
      inner.slots[k].center = outer_slot.center + std::polar(outer_slot.radius, kTwoPi * a / opts.nodes);
      sum += nodes[a].weight * evaluate_term(q.domain, q.alpha, inner, opts, q.insertions.size());
    }
    total += t.coeff * sum;
  }
  return total;
}

Complex general_correlator(const CorrelatorQuery& q, const QuadratureOptions& opts) {
  validate(q);
  validate_options(opts);
  return sum_terms(q, expand(q, opts, std::nullopt), opts);
}

Evaluation evaluate(const CorrelatorQuery& q, const QuadratureOptions& opts) {
  Evaluation e;
  e.value = general_correlator(q, opts);
  if (opts.nodes >= 2) {
    QuadratureOptions half = opts;
    half.nodes = opts.nodes / 2;
    e.abs_err_estimate = std::abs(e.value - general_correlator(q, half));
  }
  return e;
}

std::pair<Complex, Complex> covariance_check(const Mobius& m, const CorrelatorQuery& q,
                                             const QuadratureOptions& opts) {
  const Insertion& ins = single_omega(q);
  CorrelatorQuery image = q;
  image.domain = Domain::mobius_of(q.domain, m);
  image.insertions[0].point = m(ins.point);
  const Complex lhs = general_correlator(image, opts);
  const Complex rhs = general_correlator(q, opts) - kOmegaLogWeight * std::log(std::abs(m.derivative(ins.point)));
  return {lhs, rhs};
}

std::pair<Complex, Complex> covariance_check_chart(const CorrelatorQuery& q, const QuadratureOptions& opts) {
  const Insertion& ins = single_omega(q);
  const ChartPoint p = q.domain.chart_point(ins.point);
  CorrelatorQuery image = q;
  image.domain = Domain::disk();
  image.insertions[0].point = p.u;
  const Complex lhs = general_correlator(image, opts);
  const Complex rhs = general_correlator(q, opts) - kOmegaLogWeight * std::log(std::abs(p.du));
  return {lhs, rhs};
}

}  // namespace symfer
