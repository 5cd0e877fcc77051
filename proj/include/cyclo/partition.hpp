// SPDX-License-Identifier: Apache-2.0
//
// Integer partitions, multipartitions of type G(r,1,n), dominance order,
// rim hooks and hook surgery. Everything here is exact 64-bit integer
// combinatorics; no floating point, no randomness.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo {

using Int = std::int64_t;

// Sentinel for an infinite parameter (quantum characteristic or base
// characteristic). Arithmetic is never performed on it.
inline constexpr Int infinity = std::numeric_limits<Int>::max();

namespace detail {

// Contract violation by the caller (bad argument, unmet precondition).
[[noreturn]] inline void contract_fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) contract_fail(msg);
}

// Internal invariant violation: a bug, not caller error.
inline void ensure(bool ok, const std::string& msg) {
  if (!ok) throw std::logic_error("internal invariant failed: " + msg);
}

}  // namespace detail

// A partition: weakly decreasing positive parts, trailing zeros stripped by
// the constructor. The empty partition has no parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      detail::require(parts_[i] > 0, "partition parts must be positive");
      if (i + 1 < parts_.size())
        detail::require(parts_[i] >= parts_[i + 1],
                        "partition parts must be weakly decreasing");
    }
  }

  const std::vector<Int>& parts() const noexcept { return parts_; }
  Int rows() const noexcept { return static_cast<Int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // Number of cells.
  Int size() const noexcept {
    Int s = 0;
    for (Int p : parts_) s += p;
    return s;
  }

  // Row length with the usual convention lambda_i = 0 for i beyond the last
  // row. Rows are 1-based.
  Int row(Int i) const {
    detail::require(i >= 1, "row index must be >= 1");
    return i <= rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  // Column length: number of rows whose length is at least j.
  Int col(Int j) const {
    detail::require(j >= 1, "column index must be >= 1");
    Int count = 0;
    for (Int p : parts_) {
      if (p >= j) ++count;
      else break;
    }
    return count;
  }

  bool contains(Int i, Int j) const {
    return i >= 1 && j >= 1 && j <= row(i);
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<Int> parts_;
};

inline Partition conjugate(const Partition& sigma) {
  std::vector<Int> cols;
  if (!sigma.empty()) {
    cols.resize(static_cast<std::size_t>(sigma.parts().front()));
    for (Int j = 1; j <= sigma.parts().front(); ++j)
      cols[static_cast<std::size_t>(j - 1)] = sigma.col(j);
  }
  return Partition(std::move(cols));
}

// h(i,j) = lambda_i - j + lambda'_j - i + 1 for a cell of the diagram.
inline Int hook_length(const Partition& sigma, Int i, Int j) {
  detail::require(sigma.contains(i, j), "hook_length: cell not in diagram");
  return sigma.row(i) - j + sigma.col(j) - i + 1;
}

// A cell address. Components, rows and columns are all 1-based.
struct Node {
  Int row = 1;
  Int col = 1;
  Int comp = 1;

  bool operator==(const Node&) const = default;
  auto operator<=>(const Node&) const = default;
};

// An r-tuple of partitions; components may be empty but r >= 1.
class Multipartition {
 public:
  Multipartition() : comps_(1) {}

  explicit Multipartition(std::vector<Partition> comps)
      : comps_(std::move(comps)) {
    detail::require(!comps_.empty(),
                    "multipartition needs at least one component");
  }

  Int r() const noexcept { return static_cast<Int>(comps_.size()); }

  Int size() const noexcept {
    Int s = 0;
    for (const Partition& p : comps_) s += p.size();
    return s;
  }

  // 1-based component access.
  const Partition& component(Int a) const {
    detail::require(a >= 1 && a <= r(),
                    "multipartition component index out of range");
    return comps_[static_cast<std::size_t>(a - 1)];
  }

  const std::vector<Partition>& components() const noexcept { return comps_; }

  bool contains(const Node& x) const {
    if (x.comp < 1 || x.comp > r()) return false;
    return component(x.comp).contains(x.row, x.col);
  }

  // All cells, component by component, row-major inside a component.
  std::vector<Node> cells() const {
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Int a = 1; a <= r(); ++a) {
      const Partition& p = component(a);
      for (Int i = 1; i <= p.rows(); ++i)
        for (Int j = 1; j <= p.row(i); ++j) out.push_back(Node{i, j, a});
    }
    return out;
  }

  bool operator==(const Multipartition&) const = default;
  auto operator<=>(const Multipartition&) const = default;

 private:
  std::vector<Partition> comps_;
};

enum class Dominance { greater, equal, less, incomparable };

// Dominance order on multipartitions of the same total size and the same
// number of components: compare the running prefix sums
//   sum_{t<s} |lambda^(t)| + sum_{i'<=i} lambda^(s)_{i'}
// at every checkpoint (s, i).
inline Dominance dominance_compare(const Multipartition& lhs,
                                   const Multipartition& rhs) {
  detail::require(lhs.r() == rhs.r(),
                  "dominance_compare: component counts differ");
  detail::require(lhs.size() == rhs.size(),
                  "dominance_compare: total sizes differ");
  bool ge = true;
  bool le = true;
  Int suml = 0;
  Int sumr = 0;
  for (Int s = 1; s <= lhs.r(); ++s) {
    const Partition& l = lhs.component(s);
    const Partition& r = rhs.component(s);
    Int depth = std::max(l.rows(), r.rows());
    for (Int i = 1; i <= depth; ++i) {
      suml += l.row(i);
      sumr += r.row(i);
      if (suml > sumr) le = false;
      if (suml < sumr) ge = false;
    }
  }
  if (ge && le) return Dominance::equal;
  if (ge) return Dominance::greater;
  if (le) return Dominance::less;
  return Dominance::incomparable;
}

inline bool dominates(const Multipartition& lhs, const Multipartition& rhs) {
  Dominance d = dominance_compare(lhs, rhs);
  return d == Dominance::greater || d == Dominance::equal;
}

inline bool strictly_dominates(const Multipartition& lhs,
                               const Multipartition& rhs) {
  return dominance_compare(lhs, rhs) == Dominance::greater;
}

// The rim hook rooted at x = (i,j,a): all cells (k,l,a) of the diagram with
// k >= i, l >= j and (k+1,l+1,a) outside the diagram. Cells are listed
// row-major. The hand is the last cell of the origin's row, the foot the
// lowest cell of the origin's column, and leg = foot.row - origin.row.
struct RimHook {
  Node origin;
  Node hand;
  Node foot;
  std::vector<Node> cells;
  Int length = 0;
  Int leg = 0;
};

inline RimHook rim_hook(const Multipartition& lambda, const Node& x) {
  detail::require(lambda.contains(x), "rim_hook: origin cell not in diagram");
  const Partition& p = lambda.component(x.comp);
  RimHook h;
  h.origin = x;
  h.hand = Node{x.row, p.row(x.row), x.comp};
  Int last_row = x.row;
  for (Int k = x.row; k <= p.rows(); ++k) {
    if (p.row(k) < x.col) break;
    Int from = std::max(x.col, p.row(k + 1));
    for (Int l = from; l <= p.row(k); ++l)
      h.cells.push_back(Node{k, l, x.comp});
    last_row = k;
  }
  h.foot = Node{last_row, x.col, x.comp};
  h.length = static_cast<Int>(h.cells.size());
  h.leg = last_row - x.row;
  return h;
}

// Remove the rim hook rooted at x. The result is again a multipartition.
inline Multipartition unwrap(const Multipartition& lambda, const Node& x) {
  RimHook h = rim_hook(lambda, x);
  const Partition& p = lambda.component(x.comp);
  std::vector<Int> parts(p.parts());
  for (Int k = x.row; k <= h.foot.row; ++k)
    parts[static_cast<std::size_t>(k - 1)] = std::max(x.col, p.row(k + 1)) - 1;
  std::vector<Partition> comps = lambda.components();
  comps[static_cast<std::size_t>(x.comp - 1)] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

namespace detail {

// First k beta-numbers lambda_i - i (charge 0) of a partition.
inline std::vector<Int> beta_heads(const Partition& p, Int k) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (Int i = 1; i <= k; ++i) out.push_back(p.row(i) - i);
  return out;
}

// Rebuild a partition from a strictly decreasing list of beta-numbers that
// covers every value >= its last element; entries below continue as -i.
inline Partition partition_from_sorted_betas(const std::vector<Int>& betas) {
  std::vector<Int> parts;
  parts.reserve(betas.size());
  for (std::size_t idx = 0; idx < betas.size(); ++idx) {
    Int part = betas[idx] + static_cast<Int>(idx) + 1;
    ensure(part >= 0, "beta list does not describe a partition");
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace detail

// Add a rim hook of length h to component a of nu so that the hand of the
// added hook lies in column m. At most one such multipartition exists; when
// none does the result is empty.
inline std::optional<Multipartition> wrap_with_hand_in_column(
    const Multipartition& nu, Int a, Int m, Int h) {
  detail::require(a >= 1 && a <= nu.r(),
                  "wrap_with_hand_in_column: component index out of range");
  detail::require(m >= 1, "wrap_with_hand_in_column: column must be >= 1");
  detail::require(h >= 1, "wrap_with_hand_in_column: hook length must be >= 1");
  const Partition& p = nu.component(a);
  // Adding a rim hook is moving one bead down by h on the charge-0 runner
  // line. Sources range over the first rows()+h+1 beta-numbers, which cover
  // every bead whose target could be a gap.
  Int window = p.rows() + h + 1;
  std::vector<Int> betas = detail::beta_heads(p, window);
  std::optional<Multipartition> found;
  for (std::size_t src = 0; src < betas.size(); ++src) {
    Int target = betas[src] + h;
    bool occupied = false;
    for (Int b : betas)
      if (b == target) { occupied = true; break; }
    if (occupied) continue;
    std::vector<Int> moved(betas);
    moved[src] = target;
    std::sort(moved.begin(), moved.end(), std::greater<Int>());
    Partition candidate = detail::partition_from_sorted_betas(moved);
    // Hand column of the added hook: the new row containing the moved bead
    // ends at the hand.
    std::size_t rank = 0;
    while (rank < moved.size() && moved[rank] != target) ++rank;
    Int hand_col = candidate.row(static_cast<Int>(rank) + 1);
    if (hand_col != m) continue;
    detail::ensure(!found.has_value(),
                   "wrap_with_hand_in_column: two candidates for one column");
    std::vector<Partition> comps = nu.components();
    comps[static_cast<std::size_t>(a - 1)] = std::move(candidate);
    found = Multipartition(std::move(comps));
  }
  return found;
}

// Cells whose removal leaves a multipartition, ordered by (component, row).
inline std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (Int a = 1; a <= lambda.r(); ++a) {
    const Partition& p = lambda.component(a);
    for (Int i = 1; i <= p.rows(); ++i)
      if (p.row(i) > p.row(i + 1)) out.push_back(Node{i, p.row(i), a});
  }
  return out;
}

// Cells whose addition gives a multipartition, ordered by (component, row).
inline std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (Int a = 1; a <= lambda.r(); ++a) {
    const Partition& p = lambda.component(a);
    for (Int i = 1; i <= p.rows() + 1; ++i)
      if (i == 1 || p.row(i - 1) > p.row(i))
        out.push_back(Node{i, p.row(i) + 1, a});
  }
  return out;
}

namespace detail {

inline void partitions_of_rec(Int remaining, Int maxpart,
                              std::vector<Int>& prefix,
                              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Int first = std::min(maxpart, remaining); first >= 1; --first) {
    prefix.push_back(first);
    partitions_of_rec(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

// All partitions of n in descending lexicographic order:
// (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(Int n) {
  detail::require(n >= 0, "partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<Int> prefix;
  detail::partitions_of_rec(n, n, prefix, out);
  return out;
}

namespace detail {

inline void compositions_rec(Int remaining, Int slots, std::vector<Int>& acc,
                             std::vector<std::vector<Int>>& out) {
  if (slots == 1) {
    acc.push_back(remaining);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (Int first = remaining; first >= 0; --first) {
    acc.push_back(first);
    compositions_rec(remaining - first, slots - 1, acc, out);
    acc.pop_back();
  }
}

inline void multipartition_product_rec(
    const std::vector<std::vector<Partition>>& lists, std::size_t depth,
    std::vector<Partition>& acc, std::vector<Multipartition>& out) {
  if (depth == lists.size()) {
    out.emplace_back(acc);
    return;
  }
  for (const Partition& p : lists[depth]) {
    acc.push_back(p);
    multipartition_product_rec(lists, depth + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// All multipartitions with r components and n cells in total. The order is
// frozen: compositions of n into r parts in descending lexicographic order,
// partitions inside each component in descending lexicographic order, and
// the component odometer ticking the last component fastest.
inline std::vector<Multipartition> enumerate_multipartitions(Int r, Int n) {
  detail::require(r >= 1, "enumerate_multipartitions: r must be >= 1");
  detail::require(n >= 0, "enumerate_multipartitions: n must be >= 0");
  std::vector<std::vector<Partition>> cache(static_cast<std::size_t>(n) + 1);
  auto parts_for = [&](Int k) -> const std::vector<Partition>& {
    auto& slot = cache[static_cast<std::size_t>(k)];
    if (slot.empty()) slot = partitions_of(k);
    return slot;
  };
  std::vector<std::vector<Int>> comps;
  std::vector<Int> acc;
  detail::compositions_rec(n, r, acc, comps);
  std::vector<Multipartition> out;
  for (const std::vector<Int>& c : comps) {
    std::vector<std::vector<Partition>> lists;
    lists.reserve(c.size());
    for (Int k : c) lists.push_back(parts_for(k));
    std::vector<Partition> tuple;
    detail::multipartition_product_rec(lists, 0, tuple, out);
  }
  return out;
}

}  // namespace cyclo
