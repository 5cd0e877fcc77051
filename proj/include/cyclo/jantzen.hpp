// SPDX-License-Identifier: Apache-2.0
//
// Jantzen coefficients. jantzen_bruteforce evaluates the defining double
// sum over rim hooks with a common complement; jantzen_fast evaluates the
// same coefficient through bead moves on beta-numbers. jantzen_matrix runs
// the fast path over a whole enumeration and audits it against the defining
// sum on a deterministic sample.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "cyclo/abacus.hpp"
#include "cyclo/partition.hpp"
#include "cyclo/regime.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

namespace detail {

inline bool residue_guard(Int diff, Int e) {
  if (e == infinity) return diff == 0;
  return diff % e == 0;
}

// Valuation of the difference of two local-ring residues, given the
// component offset and the plain/charged foot contents of the two hooks.
// The charged content of a foot cell equals its bead position plus one.
inline Int term_magnitude(const Regime& R, Int n, Int comp_delta,
                          Int plain_diff, Int charged_diff) {
  auto axial = [&]() {
    Int arg = n * comp_delta + plain_diff;
    ensure(arg != 0, "axial distance vanished");
    return arg;
  };
  switch (R.kind) {
    case ParamCase::one:
      if (!residue_guard(charged_diff, R.e)) return 0;
      return nu_p_prime(axial(), R.p);
    case ParamCase::two:
      return nu_p_prime(axial(), R.p);
    case ParamCase::three:
      return nu_p_prime(axial(), R.p);
    case ParamCase::four:
      return nu_p_prime(axial(), R.p) + 1;
    case ParamCase::five:
      if (!residue_guard(plain_diff, R.e)) return 1;
      return 1 + nu_p_prime(axial(), R.p);
  }
  ensure(false, "unhandled parameter case");
  return 0;
}

inline Int foot_plain_content(const RimHook& h) {
  return h.foot.col - h.foot.row;
}

}  // namespace detail

// Valuation of the residue difference attached to a pair of rim hooks with
// equal complements: hook of lambda rooted at x against hook of mu rooted
// at y. Errors when the complements differ.
inline Int nu_pi_difference(const Multipartition& lambda, const Node& x,
                            const Multipartition& mu, const Node& y,
                            const Regime& R) {
  detail::require(lambda.r() == mu.r() && lambda.r() == R.r,
                  "nu_pi_difference: component counts differ");
  detail::require(lambda.size() == mu.size(),
                  "nu_pi_difference: total sizes differ");
  RimHook hx = rim_hook(lambda, x);
  RimHook hy = rim_hook(mu, y);
  detail::require(unwrap(lambda, x) == unwrap(mu, y),
                  "nu_pi_difference: hook complements differ");
  Int n = lambda.size();
  Int c1 = detail::foot_plain_content(hx);
  Int c2 = detail::foot_plain_content(hy);
  Int charged1 = c1;
  Int charged2 = c2;
  if (R.kind == ParamCase::one) {
    charged1 += R.charge(x.comp);
    charged2 += R.charge(y.comp);
  }
  return detail::term_magnitude(R, n, x.comp - y.comp, c1 - c2,
                                charged1 - charged2);
}

// The defining double sum: over all cells x of lambda and y of mu whose rim
// hooks have equal complements, signed by the legs, weighted by the residue
// valuation. Zero unless lambda strictly dominates mu.
inline Int jantzen_bruteforce(const Multipartition& lambda,
                              const Multipartition& mu, const Regime& R) {
  detail::require(lambda.r() == mu.r() && lambda.r() == R.r,
                  "jantzen_bruteforce: component counts differ");
  detail::require(lambda.size() == mu.size(),
                  "jantzen_bruteforce: total sizes differ");
  if (!strictly_dominates(lambda, mu)) return 0;
  struct YEntry {
    Node y;
    Int leg;
  };
  std::map<Multipartition, std::vector<YEntry>> by_complement;
  for (const Node& y : mu.cells()) {
    RimHook hy = rim_hook(mu, y);
    by_complement[unwrap(mu, y)].push_back(YEntry{y, hy.leg});
  }
  Int total = 0;
  for (const Node& x : lambda.cells()) {
    RimHook hx = rim_hook(lambda, x);
    auto it = by_complement.find(unwrap(lambda, x));
    if (it == by_complement.end()) continue;
    for (const YEntry& ye : it->second) {
      Int sign = ((hx.leg + ye.leg) % 2 == 0) ? 1 : -1;
      total += sign * nu_pi_difference(lambda, x, mu, ye.y, R);
    }
  }
  return total;
}

namespace detail {

// Positions held by exactly one of the two displays, both read with the
// same charge. Returned as (only in lhs, only in rhs), descending.
inline std::pair<std::vector<Int>, std::vector<Int>> beta_symdiff(
    const Partition& lhs, const Partition& rhs, Int charge) {
  Int depth = std::max(lhs.rows(), rhs.rows());
  std::vector<Int> lonly;
  std::vector<Int> ronly;
  for (Int i = 1; i <= depth; ++i) {
    Int bl = lhs.row(i) - i + charge;
    Int br = rhs.row(i) - i + charge;
    if (bl != br) {
      lonly.push_back(bl);
      ronly.push_back(br);
    }
  }
  // The rows where the two heads differ need not pair up value by value;
  // reduce to genuine set differences.
  std::vector<Int> l2;
  std::vector<Int> r2;
  for (Int v : lonly) {
    bool shared = false;
    for (Int w : ronly)
      if (w == v) { shared = true; break; }
    if (!shared) l2.push_back(v);
  }
  for (Int v : ronly) {
    bool shared = false;
    for (Int w : lonly)
      if (w == v) { shared = true; break; }
    if (!shared) r2.push_back(v);
  }
  return {std::move(l2), std::move(r2)};
}

inline Int beads_between(const AbacusDisplay& d, Int lo, Int hi) {
  Int count = 0;
  for (Int z = lo + 1; z < hi; ++z)
    if (d.has_bead(z)) ++count;
  return count;
}

}  // namespace detail

// Bead-move evaluation of the Jantzen coefficient. A nonzero value needs
// lambda and mu to share a complement after removing one rim hook each,
// which confines the beta-number symmetric difference to one of two shapes:
// one moved bead in each of two components, or two moved beads in a single
// component. The latter always carries exactly two hook realizations with
// opposite signs.
inline Int jantzen_fast(const Multipartition& lambda, const Multipartition& mu,
                        const Regime& R) {
  detail::require(lambda.r() == mu.r() && lambda.r() == R.r,
                  "jantzen_fast: component counts differ");
  detail::require(lambda.size() == mu.size(),
                  "jantzen_fast: total sizes differ");
  if (!strictly_dominates(lambda, mu)) return 0;
  Int n = lambda.size();
  auto charge_of = [&](Int a) {
    return R.kind == ParamCase::one ? R.charge(a) : Int{0};
  };
  std::vector<Int> diffs;
  for (Int a = 1; a <= lambda.r(); ++a)
    if (lambda.component(a) != mu.component(a)) diffs.push_back(a);
  if (diffs.size() != 1 && diffs.size() != 2) return 0;

  if (diffs.size() == 2) {
    Int a = diffs[0];
    Int b = diffs[1];
    Int ca = charge_of(a);
    Int cb = charge_of(b);
    auto [la, ma] = detail::beta_symdiff(lambda.component(a), mu.component(a),
                                         ca);
    auto [lb, mb] = detail::beta_symdiff(lambda.component(b), mu.component(b),
                                         cb);
    if (la.size() != 1 || ma.size() != 1 || lb.size() != 1 || mb.size() != 1)
      return 0;
    Int s = la[0];  // bead lambda wrapped down in component a
    Int d = ma[0];  // its source in the common complement
    Int w = lb[0];  // source of mu's hook in component b
    Int u = mb[0];  // bead mu wrapped down to
    if (s <= d || u <= w) return 0;
    if (s - d != u - w) return 0;
    AbacusDisplay da(lambda.component(a), ca, R.e);
    AbacusDisplay db(mu.component(b), cb, R.e);
    Int legs = detail::beads_between(da, d, s) +
               detail::beads_between(db, w, u);
    Int sign = (legs % 2 == 0) ? 1 : -1;
    // Foot charged contents are one above the lower bead of each move.
    Int charged_x = d + 1;
    Int charged_y = w + 1;
    Int plain_x = charged_x - ca;
    Int plain_y = charged_y - cb;
    return sign * detail::term_magnitude(R, n, a - b, plain_x - plain_y,
                                         charged_x - charged_y);
  }

  Int a = diffs[0];
  Int ca = charge_of(a);
  auto [lonly, monly] = detail::beta_symdiff(lambda.component(a),
                                             mu.component(a), ca);
  if (lonly.size() != 2 || monly.size() != 2) return 0;
  Int s1 = lonly[0];
  Int s2 = lonly[1];
  if (s1 < s2) std::swap(s1, s2);
  Int d1 = monly[0];
  Int d2 = monly[1];
  if (d1 < d2) std::swap(d1, d2);
  // Strict dominance of lambda forces the interleaving s1 > d1 > d2 > s2.
  detail::ensure(s1 > d1 && d1 > d2 && d2 > s2,
                 "same-component bead pattern out of order");
  AbacusDisplay dl(lambda.component(a), ca, R.e);
  AbacusDisplay dm(mu.component(a), ca, R.e);
  Int total = 0;
  // Realization one: lambda unwraps s1 -> d1, mu unwraps d2 -> s2.
  {
    Int legs = detail::beads_between(dl, d1, s1) +
               detail::beads_between(dm, s2, d2);
    Int sign = (legs % 2 == 0) ? 1 : -1;
    total += sign * detail::term_magnitude(R, n, 0, d1 - s2, d1 - s2);
  }
  // Realization two: lambda unwraps s1 -> d2, mu unwraps d1 -> s2.
  {
    Int legs = detail::beads_between(dl, d2, s1) +
               detail::beads_between(dm, s2, d1);
    Int sign = (legs % 2 == 0) ? 1 : -1;
    total += sign * detail::term_magnitude(R, n, 0, d2 - s2, d2 - s2);
  }
  return total;
}

struct JantzenAudit {
  Int full_upto = 5;       // audit every pair at or below this n
  Int sample_one_in = 100; // above, audit pairs picked at this rate
  std::uint64_t seed = 2718281828ull;
};

struct JantzenMatrix {
  Int n = 0;
  std::vector<Multipartition> basis;  // frozen enumeration order
  std::map<std::pair<Int, Int>, Int> entries;  // nonzero coefficients
};

// All pairwise coefficients over the frozen enumeration, fast path, with a
// deterministic audit against the defining sum: every pair when
// n <= audit.full_upto, a fixed-seed sample of pairs above.
inline JantzenMatrix jantzen_matrix(const Regime& R, Int n,
                                    const JantzenAudit& audit = {}) {
  JantzenMatrix out;
  out.n = n;
  out.basis = enumerate_multipartitions(R.r, n);
  bool audit_all = n <= audit.full_upto;
  std::mt19937_64 rng(audit.seed);
  Int count = static_cast<Int>(out.basis.size());
  for (Int i = 0; i < count; ++i) {
    for (Int j = 0; j < count; ++j) {
      if (i == j) continue;
      const Multipartition& l = out.basis[static_cast<std::size_t>(i)];
      const Multipartition& m = out.basis[static_cast<std::size_t>(j)];
      Int v = jantzen_fast(l, m, R);
      bool check = audit_all;
      if (!audit_all && audit.sample_one_in > 0)
        check = (rng() % static_cast<std::uint64_t>(audit.sample_one_in)) == 0;
      if (check)
        detail::ensure(v == jantzen_bruteforce(l, m, R),
                       "fast path disagrees with the defining sum");
      if (v != 0) out.entries[{i, j}] = v;
    }
  }
  return out;
}

}  // namespace cyclo
