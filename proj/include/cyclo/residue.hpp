// SPDX-License-Identifier: Apache-2.0
//
// Residues of cells, content vectors, residue equivalence and the weight
// invariants attached to a parameter regime.

#pragma once

#include <map>
#include <vector>

#include "cyclo/abacus.hpp"
#include "cyclo/partition.hpp"
#include "cyclo/regime.hpp"

namespace cyclo {

// Largest power of p dividing |h| (a power of p, not an exponent); 1 when
// p is infinite. Zero has no such power.
inline Int nu_p_prime(Int h, Int p) {
  detail::require(h != 0, "nu_p_prime: h must be nonzero");
  if (p == infinity) return 1;
  detail::require(p >= 2, "nu_p_prime: p must be >= 2 or infinity");
  Int v = 1;
  Int m = h < 0 ? -h : h;
  while (m % p == 0) {
    m /= p;
    v *= p;
  }
  return v;
}

// Residue of a cell. Case 1: (col - row + charge) mod e, plain integers when
// e is infinite. Case 2: (col - row) mod p. Cases 3 to 5: a single constant
// residue, represented as 0.
inline Int residue(const Node& x, const Regime& R) {
  detail::require(x.comp >= 1 && x.comp <= R.r,
                  "residue: component index out of range");
  switch (R.kind) {
    case ParamCase::one: {
      Int v = x.col - x.row + R.charge(x.comp);
      if (R.e == infinity) return v;
      return ((v % R.e) + R.e) % R.e;
    }
    case ParamCase::two: {
      Int v = x.col - x.row;
      return ((v % R.p) + R.p) % R.p;
    }
    default:
      return 0;
  }
}

// Multiset of residues of the diagram, as a sparse residue -> count map.
inline std::map<Int, Int> content_vector(const Multipartition& lambda,
                                         const Regime& R) {
  detail::require(lambda.r() == R.r,
                  "content_vector: component count does not match regime");
  std::map<Int, Int> out;
  for (Int a = 1; a <= lambda.r(); ++a) {
    const Partition& p = lambda.component(a);
    for (Int i = 1; i <= p.rows(); ++i)
      for (Int j = 1; j <= p.row(i); ++j) ++out[residue(Node{i, j, a}, R)];
  }
  return out;
}

inline bool residue_equivalent(const Multipartition& lambda,
                               const Multipartition& mu, const Regime& R) {
  detail::require(lambda.r() == mu.r() && lambda.r() == R.r,
                  "residue_equivalent: component counts differ");
  detail::require(lambda.size() == mu.size(),
                  "residue_equivalent: total sizes differ");
  return content_vector(lambda, R) == content_vector(mu, R);
}

// Hub: for each residue f the number of removable f-nodes minus the number
// of addable f-nodes. Defined for case 1 with finite e.
inline std::vector<Int> hub(const Multipartition& lambda, const Regime& R) {
  detail::require(R.kind == ParamCase::one && R.finite_e(),
                  "hub requires case 1 with finite e");
  detail::require(lambda.r() == R.r,
                  "hub: component count does not match regime");
  std::vector<Int> delta(static_cast<std::size_t>(R.e), 0);
  for (const Node& x : removable_nodes(lambda))
    ++delta[static_cast<std::size_t>(residue(x, R))];
  for (const Node& x : addable_nodes(lambda))
    --delta[static_cast<std::size_t>(residue(x, R))];
  return delta;
}

// Weight invariant
//   Wt(lambda) = sum_j C_{c_j} - (1/2) sum_f (C_f - C_{f+1})^2
// with C the content vector over Z/e and indices cyclic. Case 1, finite e.
inline Int weight_invariant(const Multipartition& lambda, const Regime& R) {
  detail::require(R.kind == ParamCase::one && R.finite_e(),
                  "weight_invariant requires case 1 with finite e");
  detail::require(lambda.r() == R.r,
                  "weight_invariant: component count does not match regime");
  std::vector<Int> c(static_cast<std::size_t>(R.e), 0);
  for (const auto& [f, count] : content_vector(lambda, R))
    c[static_cast<std::size_t>(f)] = count;
  Int linear = 0;
  for (Int a = 1; a <= R.r; ++a) {
    Int f = ((R.charge(a) % R.e) + R.e) % R.e;
    linear += c[static_cast<std::size_t>(f)];
  }
  Int quad = 0;
  for (Int f = 0; f < R.e; ++f) {
    Int d = c[static_cast<std::size_t>(f)] -
            c[static_cast<std::size_t>((f + 1) % R.e)];
    quad += d * d;
  }
  detail::ensure(quad % 2 == 0, "cyclic difference square sum must be even");
  return linear - quad / 2;
}

namespace detail {

// All multipartitions of n with the same content vector as lambda. The
// content vector of each candidate is computed once.
inline std::vector<Multipartition> residue_class(const Multipartition& lambda,
                                                 const Regime& R, Int n) {
  require(lambda.size() == n, "residue class: n must equal |lambda|");
  std::map<Int, Int> target = content_vector(lambda, R);
  std::vector<Multipartition> out;
  for (Multipartition& mu : enumerate_multipartitions(R.r, n))
    if (content_vector(mu, R) == target) out.push_back(std::move(mu));
  return out;
}

}  // namespace detail

// Largest componentwise e-hook weight over the residue class of lambda.
// Exhaustive scan by construction; intended for desk-scale n.
inline Int big_weight(const Multipartition& lambda, const Regime& R, Int n) {
  detail::require(R.kind == ParamCase::one && R.finite_e(),
                  "big_weight requires case 1 with finite e");
  Int best = 0;
  for (const Multipartition& mu : detail::residue_class(lambda, R, n))
    best = std::max(best, multiweight(mu, R.e));
  return best;
}

// A multicore is reduced when every member of its residue class is itself a
// multicore. Exhaustive scan; errors when lambda is not a multicore.
inline bool is_reduced_multicore(const Multipartition& lambda, const Regime& R,
                                 Int n) {
  detail::require(R.kind == ParamCase::one,
                  "is_reduced_multicore requires case 1");
  detail::require(is_multicore(lambda, R.charges, R.e),
                  "is_reduced_multicore: multipartition is not a multicore");
  for (const Multipartition& mu : detail::residue_class(lambda, R, n))
    if (!is_multicore(mu, R.charges, R.e)) return false;
  return true;
}

// A partition satisfies the row condition when nu'_p of the hook length is
// constant along every row of the diagram. The runner count e travels with
// the signature but the displayed condition does not consult it.
inline bool is_carter_partition(const Partition& sigma, Int /*e*/, Int p) {
  for (Int i = 1; i <= sigma.rows(); ++i) {
    Int expected = nu_p_prime(hook_length(sigma, i, 1), p);
    for (Int j = 2; j <= sigma.row(i); ++j)
      if (nu_p_prime(hook_length(sigma, i, j), p) != expected) return false;
  }
  return true;
}

}  // namespace cyclo
