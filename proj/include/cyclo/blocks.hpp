// SPDX-License-Identifier: Apache-2.0
//
// Block partitions of an enumeration of multipartitions: once through
// residue equivalence, once through the Jantzen coefficients, plus the
// driver comparing the two and the standard parameter grid it runs over.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/jantzen.hpp"
#include "cyclo/partition.hpp"
#include "cyclo/regime.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

namespace detail {

// Union-find with path compression; the representative of a class is its
// minimum element, which keeps class extraction deterministic.
class DisjointSets {
 public:
  explicit DisjointSets(Int count) : parent_(static_cast<std::size_t>(count)) {
    for (Int i = 0; i < count; ++i)
      parent_[static_cast<std::size_t>(i)] = i;
  }

  Int find(Int x) {
    Int root = x;
    while (parent_[static_cast<std::size_t>(root)] != root)
      root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(x)] != root) {
      Int next = parent_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = root;
      x = next;
    }
    return root;
  }

  void unite(Int a, Int b) {
    Int ra = find(a);
    Int rb = find(b);
    if (ra == rb) return;
    if (ra < rb)
      parent_[static_cast<std::size_t>(rb)] = ra;
    else
      parent_[static_cast<std::size_t>(ra)] = rb;
  }

  Int size() const { return static_cast<Int>(parent_.size()); }

 private:
  std::vector<Int> parent_;
};

}  // namespace detail

// Indices into the frozen enumeration, grouped into classes. Classes are
// ordered by their minimum element and each class lists its members in
// increasing order.
struct BlockPartition {
  std::vector<std::vector<Int>> classes;

  bool operator==(const BlockPartition&) const = default;

  bool same_class(Int i, Int j) const {
    for (const std::vector<Int>& c : classes) {
      bool has_i = false;
      bool has_j = false;
      for (Int m : c) {
        if (m == i) has_i = true;
        if (m == j) has_j = true;
      }
      if (has_i || has_j) return has_i && has_j;
    }
    return false;
  }
};

namespace detail {

inline BlockPartition classes_of(DisjointSets& sets) {
  std::map<Int, std::vector<Int>> grouped;
  for (Int i = 0; i < sets.size(); ++i)
    grouped[sets.find(i)].push_back(i);
  BlockPartition out;
  out.classes.reserve(grouped.size());
  for (auto& [root, members] : grouped)
    out.classes.push_back(std::move(members));
  return out;
}

}  // namespace detail

// Classes of the frozen enumeration under equality of content vectors.
inline BlockPartition blocks_by_residue(const Regime& R, Int n) {
  std::vector<Multipartition> basis = enumerate_multipartitions(R.r, n);
  detail::DisjointSets sets(static_cast<Int>(basis.size()));
  std::map<std::map<Int, Int>, Int> first_seen;
  for (Int i = 0; i < static_cast<Int>(basis.size()); ++i) {
    std::map<Int, Int> cv =
        content_vector(basis[static_cast<std::size_t>(i)], R);
    auto [it, inserted] = first_seen.emplace(std::move(cv), i);
    if (!inserted) sets.unite(it->second, i);
  }
  return detail::classes_of(sets);
}

// Classes of the frozen enumeration generated by nonzero Jantzen
// coefficients in either direction.
inline BlockPartition blocks_by_jantzen(const Regime& R, Int n,
                                        const JantzenAudit& audit = {}) {
  JantzenMatrix m = jantzen_matrix(R, n, audit);
  detail::DisjointSets sets(static_cast<Int>(m.basis.size()));
  for (const auto& [key, value] : m.entries) sets.unite(key.first, key.second);
  return detail::classes_of(sets);
}

struct VerifyReport {
  bool equal = false;
  Int n = 0;
  BlockPartition jantzen;
  BlockPartition residue;
  // First pair (in enumeration order) classified together by exactly one of
  // the two equivalences; empty when they agree.
  std::optional<std::pair<Int, Int>> witness;
};

// Compare the two block partitions for one regime and size.
inline VerifyReport verify_theorem(const Regime& R, Int n) {
  VerifyReport report;
  report.n = n;
  report.jantzen = blocks_by_jantzen(R, n);
  report.residue = blocks_by_residue(R, n);
  report.equal = report.jantzen == report.residue;
  if (!report.equal) {
    Int count = 0;
    for (const auto& c : report.jantzen.classes)
      count += static_cast<Int>(c.size());
    for (Int i = 0; i < count && !report.witness; ++i)
      for (Int j = i + 1; j < count; ++j)
        if (report.jantzen.same_class(i, j) !=
            report.residue.same_class(i, j)) {
          report.witness = {i, j};
          break;
        }
  }
  return report;
}

// One cell of the verification grid.
struct GridCell {
  Regime regime;
  Int n = 0;
};

namespace detail {

inline void charge_tuples_rec(Int r, Int lo, Int hi, std::vector<Int>& acc,
                              std::vector<std::vector<Int>>& out) {
  if (static_cast<Int>(acc.size()) == r) {
    out.push_back(acc);
    return;
  }
  for (Int c = lo; c <= hi; ++c) {
    acc.push_back(c);
    charge_tuples_rec(r, lo, hi, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<Int>> charge_tuples(Int r, Int e) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> acc;
  if (e == infinity)
    charge_tuples_rec(r, -2, 2, acc, out);
  else
    charge_tuples_rec(r, 0, e - 1, acc, out);
  return out;
}

}  // namespace detail

// The standard verification grid: every admissible regime built from the
// given e and p lists, all r up to r_max, all n from 1 to n_max; case 1
// additionally ranges over charge tuples in [0,e)^r, or [-2,2]^r when e is
// infinite. Cells are emitted in a fixed deterministic order.
inline std::vector<GridCell> theorem_grid(Int r_max, Int n_max,
                                          const std::vector<Int>& e_list,
                                          const std::vector<Int>& p_list) {
  std::vector<GridCell> out;
  for (int kase = 1; kase <= 5; ++kase) {
    ParamCase kind = static_cast<ParamCase>(kase);
    Int r_lo = (kind == ParamCase::one || kind == ParamCase::two) ? 1 : 2;
    Int r_hi = (kind == ParamCase::two) ? 1 : r_max;
    for (Int r = r_lo; r <= r_hi; ++r) {
      for (Int n = 1; n <= n_max; ++n) {
        for (Int e : e_list) {
          for (Int p : p_list) {
            switch (kind) {
              case ParamCase::one: {
                if (e != infinity && p != infinity && e % p == 0) continue;
                for (const auto& charges : detail::charge_tuples(r, e))
                  out.push_back(
                      {Regime::make(kind, e, p, r, charges), n});
                break;
              }
              case ParamCase::two:
              case ParamCase::three:
              case ParamCase::four: {
                if (e != p) continue;
                if (kind == ParamCase::two && p == infinity) continue;
                out.push_back({Regime::make(kind, e, p, r), n});
                break;
              }
              case ParamCase::five: {
                if (e != infinity && p != infinity && e % p == 0) continue;
                out.push_back({Regime::make(kind, e, p, r), n});
                break;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

// A cyclotomic parameter: either zero or a point q^exponent on a named
// orbit.
struct Parameter {
  bool zero = false;
  std::string orbit;
  Int exponent = 0;

  bool operator==(const Parameter&) const = default;
};

struct MoritaComponent {
  std::vector<Int> indices;          // 1-based component positions
  std::vector<Parameter> params;     // the sub-parameter-system
  Multipartition part;               // the sub-multipartition
};

// Split a parameter system and a multipartition along parameter orbits:
// all zero parameters form one group, nonzero parameters group by orbit
// label, groups are ordered by first occurrence, and each group keeps its
// components in the original order.
inline std::vector<MoritaComponent> morita_components(
    const std::vector<Parameter>& params, const Multipartition& lambda) {
  detail::require(static_cast<Int>(params.size()) == lambda.r(),
                  "morita_components: one parameter per component required");
  std::vector<std::string> keys;
  std::map<std::string, std::vector<Int>> groups;
  for (Int a = 1; a <= lambda.r(); ++a) {
    const Parameter& q = params[static_cast<std::size_t>(a - 1)];
    std::string key = q.zero ? std::string() : "orbit:" + q.orbit;
    auto [it, inserted] = groups.emplace(key, std::vector<Int>{});
    if (inserted) keys.push_back(key);
    it->second.push_back(a);
  }
  std::vector<MoritaComponent> out;
  out.reserve(keys.size());
  for (const std::string& key : keys) {
    MoritaComponent mc;
    mc.indices = groups[key];
    std::vector<Partition> comps;
    for (Int a : mc.indices) {
      mc.params.push_back(params[static_cast<std::size_t>(a - 1)]);
      comps.push_back(lambda.component(a));
    }
    mc.part = Multipartition(std::move(comps));
    out.push_back(std::move(mc));
  }
  return out;
}

}  // namespace cyclo
