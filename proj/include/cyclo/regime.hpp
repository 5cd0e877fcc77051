// SPDX-License-Identifier: Apache-2.0
//
// Parameter regimes for the block combinatorics. A regime bundles the
// quantum characteristic e, the base characteristic p, the number of
// components r and (in the cyclotomic case) the multicharge.

#pragma once

#include <string>
#include <vector>

#include "cyclo/partition.hpp"

namespace cyclo {

// The five parameter cases:
//   1: q != 1 and all cyclotomic parameters are powers of q (multicharge),
//   2: r = 1, q = 1 (linear groups at the base characteristic, e = p),
//   3: r > 1, q = 1, all cyclotomic parameters equal to 1 (e = p),
//   4: r > 1, q = 1, all cyclotomic parameters zero (e = p),
//   5: r > 1, q != 1, all cyclotomic parameters zero.
enum class ParamCase : int { one = 1, two = 2, three = 3, four = 4, five = 5 };

namespace detail {

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

struct Regime {
  ParamCase kind = ParamCase::one;
  Int e = infinity;
  Int p = infinity;
  Int r = 1;
  std::vector<Int> charges;  // one entry per component in case 1, else empty

  bool finite_e() const noexcept { return e != infinity; }
  bool finite_p() const noexcept { return p != infinity; }

  // 1 exactly when the cyclotomic parameters are all zero.
  Int epsilon() const noexcept {
    return (kind == ParamCase::four || kind == ParamCase::five) ? 1 : 0;
  }

  Int charge(Int a) const {
    detail::require(kind == ParamCase::one,
                    "charges exist only in case 1");
    detail::require(a >= 1 && a <= r, "charge index out of range");
    return charges[static_cast<std::size_t>(a - 1)];
  }

  int case_number() const noexcept { return static_cast<int>(kind); }

  // Validating factory. Error messages name the violated constraint.
  static Regime make(ParamCase kind, Int e, Int p, Int r,
                     std::vector<Int> charges = {}) {
    detail::require(r >= 1, "regime requires r >= 1");
    detail::require(e == infinity || e >= 2,
                    "regime requires e >= 2 or e = infinity");
    detail::require(p == infinity || detail::is_prime(p),
                    "regime requires p prime or p = infinity");
    switch (kind) {
      case ParamCase::one:
        detail::require(charges.size() == static_cast<std::size_t>(r),
                        "case 1 requires one charge per component");
        detail::require(e == infinity || p == infinity || e % p != 0,
                        "case 1 requires that p does not divide e when both "
                        "are finite");
        break;
      case ParamCase::two:
        detail::require(r == 1, "case 2 requires r = 1");
        detail::require(p != infinity, "case 2 requires finite p");
        detail::require(e == p, "case 2 requires e = p");
        detail::require(charges.empty(), "case 2 takes no charges");
        break;
      case ParamCase::three:
      case ParamCase::four:
        detail::require(r > 1, "cases 3 and 4 require r > 1");
        detail::require(e == p, "cases 3 and 4 require e = p");
        detail::require(charges.empty(), "cases 3 and 4 take no charges");
        break;
      case ParamCase::five:
        detail::require(r > 1, "case 5 requires r > 1");
        detail::require(e == infinity || p == infinity || e % p != 0,
                        "case 5 requires that p does not divide e when both "
                        "are finite");
        detail::require(charges.empty(), "case 5 takes no charges");
        break;
    }
    Regime out;
    out.kind = kind;
    out.e = e;
    out.p = p;
    out.r = r;
    out.charges = std::move(charges);
    return out;
  }
};

// Derive the case from the raw parameter shape: e = p encodes q = 1, and
// zero_params says whether the cyclotomic parameters vanish.
inline ParamCase derive_case(Int e, Int p, Int r, bool zero_params) {
  if (e == p) {
    if (r == 1) return ParamCase::two;
    return zero_params ? ParamCase::four : ParamCase::three;
  }
  return zero_params ? ParamCase::five : ParamCase::one;
}

}  // namespace cyclo
