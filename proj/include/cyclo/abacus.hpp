// SPDX-License-Identifier: Apache-2.0
//
// Beta-numbers and abacus displays. A display is determined by a partition,
// an integer charge and the number of runners e; bead positions are the
// values beta_i = lambda_i - i + charge, which continue as charge - i below
// the last row of the partition. For finite e the position z sits on runner
// z mod e in row floor(z / e); for e = infinity every position is its own
// runner on a single row.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cyclo/partition.hpp"
#include "cyclo/regime.hpp"

namespace cyclo {

class AbacusDisplay {
 public:
  AbacusDisplay(Partition lambda, Int charge, Int e)
      : lambda_(std::move(lambda)), charge_(charge), e_(e) {
    detail::require(e == infinity || e >= 2,
                    "abacus requires e >= 2 or e = infinity");
  }

  const Partition& partition() const noexcept { return lambda_; }
  Int charge() const noexcept { return charge_; }
  Int e() const noexcept { return e_; }

  // i-th beta-number, 1-based, defined for every i >= 1.
  Int beta(Int i) const {
    detail::require(i >= 1, "beta index must be >= 1");
    return lambda_.row(i) - i + charge_;
  }

  std::vector<Int> beta_head(Int count) const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Int i = 1; i <= count; ++i) out.push_back(beta(i));
    return out;
  }

  bool has_bead(Int z) const {
    Int len = lambda_.rows();
    if (z <= charge_ - len - 1) return true;
    for (Int i = 1; i <= len; ++i)
      if (beta(i) == z) return true;
    return false;
  }

  Int runner_of(Int z) const {
    if (e_ == infinity) return z;
    return ((z % e_) + e_) % e_;
  }

  Int row_of(Int z) const {
    if (e_ == infinity) return 0;
    return (z - runner_of(z)) / e_;
  }

  bool operator==(const AbacusDisplay&) const = default;

 private:
  Partition lambda_;
  Int charge_;
  Int e_;
};

inline AbacusDisplay to_abacus(const Partition& lambda, Int charge, Int e) {
  return AbacusDisplay(lambda, charge, e);
}

inline Partition from_abacus(const AbacusDisplay& d) { return d.partition(); }

// Reconstruct a partition from an explicit head of bead positions. The list
// must be strictly decreasing and consistent with the implicit tail
// charge - i below it; duplicates or a head that would force negative row
// lengths are rejected.
inline Partition partition_from_beta(const std::vector<Int>& head,
                                     Int charge) {
  std::vector<Int> parts;
  parts.reserve(head.size());
  for (std::size_t idx = 0; idx < head.size(); ++idx) {
    if (idx > 0)
      detail::require(head[idx] < head[idx - 1],
                      "beta list must be strictly decreasing (duplicate or "
                      "misordered positions)");
    Int part = head[idx] + static_cast<Int>(idx) + 1 - charge;
    detail::require(part >= 0,
                    "beta list is not cofinite-below: implied row length is "
                    "negative");
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

// Move the bead at position `from` to the empty position `to`. The charge
// and runner count are preserved.
inline AbacusDisplay move_bead(const AbacusDisplay& d, Int from, Int to) {
  detail::require(d.has_bead(from), "move_bead: no bead at source position");
  detail::require(!d.has_bead(to),
                  "move_bead: target position already occupied");
  Int len = d.partition().rows();
  Int lo = std::min({d.charge() - len - 1, from, to}) - 1;
  Int hi = std::max({d.beta(1), d.charge() - 1, from, to});
  std::vector<Int> head;
  for (Int z = hi; z > lo; --z) {
    bool bead = (z == to) || (d.has_bead(z) && z != from);
    if (bead) head.push_back(z);
  }
  return AbacusDisplay(partition_from_beta(head, d.charge()), d.charge(),
                       d.e());
}

namespace detail {

struct CoreLevels {
  std::vector<Int> levels;  // highest occupied row per runner after pushing up
  Int floor_row = 0;        // a row at or below which every runner is solid,
                            // in the original and the pushed display alike
};

// Per-runner top rows of the core display of d (all beads slid up as far as
// they go), together with a row known to be solid on every runner.
inline CoreLevels core_levels(const AbacusDisplay& d) {
  Int e = d.e();
  Int len = d.partition().rows();
  Int c = d.charge();
  // Every position <= c - len - 1 is a bead.
  Int solid = c - len - 1;
  Int top = std::max(d.beta(1), c - 1);
  CoreLevels out;
  out.levels.resize(static_cast<std::size_t>(e));
  out.floor_row = infinity;
  for (Int y = 0; y < e; ++y) {
    // x_low: a row on runner y with every row at or below it occupied.
    // Truncating division rounds toward zero, so pad by 2 to stay under the
    // floor for negative operands.
    Int x_low = (solid - y) / e - 2;
    Int x_high = (top - y) / e + 2;
    Int count = 0;
    for (Int x = x_low + 1; x <= x_high; ++x)
      if (d.has_bead(y + x * e)) ++count;
    out.levels[static_cast<std::size_t>(y)] = x_low + count;
    out.floor_row = std::min(out.floor_row, x_low);
  }
  return out;
}

}  // namespace detail

// The e-core: slide every bead up its runner as far as it goes and read the
// partition back off. For e = infinity the core is the partition itself.
inline Partition e_core(const Partition& lambda, Int charge, Int e) {
  if (e == infinity) return lambda;
  AbacusDisplay d = to_abacus(lambda, charge, e);
  detail::CoreLevels cl = detail::core_levels(d);
  Int max_level = *std::max_element(cl.levels.begin(), cl.levels.end());
  // Below the per-runner solid floor the pushed display agrees with the
  // original one position for position, so bead ranks line up there.
  Int lo = e * cl.floor_row - 1;
  Int hi = e * (max_level + 1) + e;
  std::vector<Int> head;
  for (Int z = hi; z > lo; --z)
    if (d.row_of(z) <= cl.levels[static_cast<std::size_t>(d.runner_of(z))])
      head.push_back(z);
  return partition_from_beta(head, charge);
}

// Number of e-hooks removed on the way to the core.
inline Int e_weight(const Partition& lambda, Int e) {
  if (e == infinity) return 0;
  Partition core = e_core(lambda, 0, e);
  Int diff = lambda.size() - core.size();
  detail::ensure(diff % e == 0, "size defect not divisible by e");
  return diff / e;
}

// Componentwise core and weight.
inline Multipartition multicore(const Multipartition& lambda,
                                const std::vector<Int>& charges, Int e) {
  detail::require(charges.size() == static_cast<std::size_t>(lambda.r()),
                  "multicore: one charge per component required");
  std::vector<Partition> comps;
  comps.reserve(static_cast<std::size_t>(lambda.r()));
  for (Int a = 1; a <= lambda.r(); ++a)
    comps.push_back(
        e_core(lambda.component(a), charges[static_cast<std::size_t>(a - 1)],
               e));
  return Multipartition(std::move(comps));
}

inline Int multiweight(const Multipartition& lambda, Int e) {
  Int w = 0;
  for (Int a = 1; a <= lambda.r(); ++a)
    w += e_weight(lambda.component(a), e);
  return w;
}

inline bool is_multicore(const Multipartition& lambda,
                         const std::vector<Int>& charges, Int e) {
  return multicore(lambda, charges, e) == lambda;
}

// The r abacus displays of a multipartition, one per component.
struct MultiAbacus {
  std::vector<AbacusDisplay> comps;
};

inline MultiAbacus to_multi_abacus(const Multipartition& lambda,
                                   const std::vector<Int>& charges, Int e) {
  detail::require(charges.size() == static_cast<std::size_t>(lambda.r()),
                  "to_multi_abacus: one charge per component required");
  MultiAbacus out;
  out.comps.reserve(static_cast<std::size_t>(lambda.r()));
  for (Int a = 1; a <= lambda.r(); ++a)
    out.comps.emplace_back(lambda.component(a),
                           charges[static_cast<std::size_t>(a - 1)], e);
  return out;
}

// Swap bead/gap structure between runners i and j of two components of a
// multicore: component a sends the top bead of runner i to the first gap of
// runner j, component b does the opposite. For e = infinity the positions i
// and j themselves are swapped, which requires component a to have a bead
// at i and a gap at j and component b the reverse.
inline Multipartition s_move(const Multipartition& lambda,
                             const std::vector<Int>& charges, Int e, Int a,
                             Int b, Int i, Int j) {
  detail::require(a >= 1 && a <= lambda.r() && b >= 1 && b <= lambda.r(),
                  "s_move: component index out of range");
  detail::require(a != b, "s_move: components must differ");
  std::vector<Partition> comps = lambda.components();
  auto charge_of = [&](Int comp) {
    return charges[static_cast<std::size_t>(comp - 1)];
  };
  if (e == infinity) {
    detail::require(i != j, "s_move: positions must differ");
    AbacusDisplay da(lambda.component(a), charge_of(a), e);
    AbacusDisplay db(lambda.component(b), charge_of(b), e);
    detail::require(da.has_bead(i) && !da.has_bead(j),
                    "s_move: component a needs a bead at i and a gap at j");
    detail::require(db.has_bead(j) && !db.has_bead(i),
                    "s_move: component b needs a bead at j and a gap at i");
    comps[static_cast<std::size_t>(a - 1)] = move_bead(da, i, j).partition();
    comps[static_cast<std::size_t>(b - 1)] = move_bead(db, j, i).partition();
    return Multipartition(std::move(comps));
  }
  detail::require(i >= 0 && i < e && j >= 0 && j < e && i != j,
                  "s_move: runners must be distinct and in [0, e)");
  detail::require(is_multicore(lambda, charges, e),
                  "s_move: multipartition must be a multicore");
  auto swap_runners = [&](Int comp, Int from_runner, Int to_runner) {
    AbacusDisplay d(lambda.component(comp), charge_of(comp), e);
    std::vector<Int> levels = detail::core_levels(d).levels;
    Int zfrom =
        from_runner + e * levels[static_cast<std::size_t>(from_runner)];
    Int zto =
        to_runner + e * (levels[static_cast<std::size_t>(to_runner)] + 1);
    return move_bead(d, zfrom, zto).partition();
  };
  comps[static_cast<std::size_t>(a - 1)] = swap_runners(a, i, j);
  comps[static_cast<std::size_t>(b - 1)] = swap_runners(b, j, i);
  Multipartition out(std::move(comps));
  detail::ensure(is_multicore(out, charges, e),
                 "s_move must preserve the multicore property");
  return out;
}

// Slide the top bead of runner i in component a down by w rows, wrapping
// w rim hooks of length e onto that component.
inline Multipartition t_move(const Multipartition& lambda,
                             const std::vector<Int>& charges, Int e, Int a,
                             Int i, Int w) {
  detail::require(e != infinity, "t_move requires finite e");
  detail::require(a >= 1 && a <= lambda.r(),
                  "t_move: component index out of range");
  detail::require(i >= 0 && i < e, "t_move: runner must be in [0, e)");
  detail::require(w >= 0, "t_move: w must be >= 0");
  if (w == 0) return lambda;
  AbacusDisplay d(lambda.component(a),
                  charges[static_cast<std::size_t>(a - 1)], e);
  Int top = std::max(d.beta(1), d.charge() - 1) + e;
  Int z = top;
  while (!(d.has_bead(z) && d.runner_of(z) == i)) --z;
  std::vector<Partition> comps = lambda.components();
  comps[static_cast<std::size_t>(a - 1)] =
      move_bead(d, z, z + w * e).partition();
  return Multipartition(std::move(comps));
}

// ASCII rendering. Finite e: one block per component with runners as
// columns, rows printed from row 2 at the top downward ('-' bead, '.' gap),
// so the untouched lower half of a display is solid. The window spans
// `rows` rows ending at row 2. For e = infinity a component is a single
// line over the positions in the same window.
inline std::string render_ascii(const MultiAbacus& d, Int rows = 7) {
  detail::require(rows >= 1, "render_ascii: need at least one row");
  constexpr Int top_row = 2;
  Int bottom_row = top_row - rows + 1;
  std::string out;
  bool first = true;
  for (const AbacusDisplay& comp : d.comps) {
    if (!first) out += '\n';
    first = false;
    if (comp.e() == infinity) {
      for (Int z = bottom_row; z <= top_row; ++z)
        out += comp.has_bead(z) ? '-' : '.';
      out += '\n';
      continue;
    }
    for (Int x = top_row; x >= bottom_row; --x) {
      for (Int y = 0; y < comp.e(); ++y)
        out += comp.has_bead(y + x * comp.e()) ? '-' : '.';
      out += '\n';
    }
  }
  return out;
}

}  // namespace cyclo
