// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include "cyclo/jantzen.hpp"

using namespace cyclo;

namespace {
Multipartition mp(std::vector<std::vector<Int>> comps) {
  std::vector<Partition> ps;
  for (auto& c : comps) ps.emplace_back(std::move(c));
  return Multipartition(std::move(ps));
}

Int J(const Multipartition& a, const Multipartition& b, const Regime& R) {
  Int fast = jantzen_fast(a, b, R);
  CHECK(fast == jantzen_bruteforce(a, b, R));
  return fast;
}
}  // namespace

TEST_CASE("valuation of one hook exchange", "[jantzen]") {
  // removing (1,2) from (2) and (2,1) from (1,1) leaves the complement (1)
  // on both sides; the foot contents differ by 2
  Regime e2 = Regime::make(ParamCase::one, 2, infinity, 1, {0});
  Multipartition lam = mp({{2}});
  Multipartition mu = mp({{1, 1}});
  CHECK(nu_pi_difference(lam, Node{1, 2, 1}, mu, Node{2, 1, 1}, e2) == 1);
  Regime e3 = Regime::make(ParamCase::one, 3, infinity, 1, {0});
  CHECK(nu_pi_difference(lam, Node{1, 2, 1}, mu, Node{2, 1, 1}, e3) == 0);
  CHECK_THROWS_AS(
      nu_pi_difference(lam, Node{1, 1, 1}, mu, Node{2, 1, 1}, e2),
      std::invalid_argument);  // complements differ
}

TEST_CASE("coefficients match frozen values", "[jantzen]") {
  Regime e2 = Regime::make(ParamCase::one, 2, infinity, 1, {0});
  CHECK(J(mp({{2}}), mp({{1, 1}}), e2) == 1);

  Regime c2p2 = Regime::make(ParamCase::two, 2, 2, 1);
  CHECK(J(mp({{4}}), mp({{3, 1}}), c2p2) == 3);
  CHECK(J(mp({{3, 1}}), mp({{2, 2}}), c2p2) == 1);
  CHECK(J(mp({{2, 2}}), mp({{2, 1, 1}}), c2p2) == 1);
  CHECK(J(mp({{2, 1, 1}}), mp({{1, 1, 1, 1}}), c2p2) == 3);
  CHECK(J(mp({{2, 2}}), mp({{1, 1, 1, 1}}), c2p2) == -1);

  Regime e3 = Regime::make(ParamCase::one, 3, infinity, 1, {0});
  CHECK(J(mp({{4}}), mp({{1, 1, 1, 1}}), e3) == -1);

  Regime e4p3 = Regime::make(ParamCase::one, 4, 3, 1, {0});
  CHECK(J(mp({{4}}), mp({{3, 1}}), e4p3) == 1);
  CHECK(J(mp({{3, 1}}), mp({{2, 2}}), e4p3) == 0);

  // no strict dominance, no coefficient
  CHECK(J(mp({{2, 1}}), mp({{2, 1}}), e2) == 0);
  CHECK(J(mp({{1, 1, 1}}), mp({{3}}), e2) == 0);
  CHECK(J(mp({{3, 1, 1, 1}}), mp({{2, 2, 2}}), e2) == 0);
}

TEST_CASE("coefficients across components", "[jantzen]") {
  Multipartition a = mp({{1}, {}});
  Multipartition b = mp({{}, {1}});
  Regime r3 = Regime::make(ParamCase::three, 2, 2, 2);
  CHECK(J(a, b, r3) == 1);
  Regime r4 = Regime::make(ParamCase::four, 2, 2, 2);
  CHECK(J(a, b, r4) == 2);
  Regime r5 = Regime::make(ParamCase::five, 2, infinity, 2);
  CHECK(J(a, b, r5) == 2);
  Regime r1 = Regime::make(ParamCase::one, 2, infinity, 2, {0, 0});
  CHECK(J(a, b, r1) == 1);
  // distinct charges put the two cells in different residues: no term
  Regime r1split = Regime::make(ParamCase::one, 2, infinity, 2, {0, 1});
  CHECK(J(a, b, r1split) == 0);
}

TEST_CASE("fast path equals the defining sum on a sweep", "[jantzen]") {
  std::vector<Regime> regimes = {
      Regime::make(ParamCase::one, 2, infinity, 1, {0}),
      Regime::make(ParamCase::one, 3, 2, 1, {1}),
      Regime::make(ParamCase::one, infinity, 3, 1, {0}),
      Regime::make(ParamCase::two, 2, 2, 1),
      Regime::make(ParamCase::two, 3, 3, 1),
  };
  for (const Regime& R : regimes)
    for (Int n = 1; n <= 6; ++n) {
      auto all = enumerate_multipartitions(1, n);
      for (const auto& a : all)
        for (const auto& b : all)
          CHECK(jantzen_fast(a, b, R) == jantzen_bruteforce(a, b, R));
    }
  std::vector<Regime> regimes2 = {
      Regime::make(ParamCase::one, 2, infinity, 2, {0, 1}),
      Regime::make(ParamCase::three, 2, 2, 2),
      Regime::make(ParamCase::four, 3, 3, 2),
      Regime::make(ParamCase::five, 2, 3, 2),
  };
  for (const Regime& R : regimes2)
    for (Int n = 1; n <= 4; ++n) {
      auto all = enumerate_multipartitions(2, n);
      for (const auto& a : all)
        for (const auto& b : all)
          CHECK(jantzen_fast(a, b, R) == jantzen_bruteforce(a, b, R));
    }
}

TEST_CASE("coefficient matrices", "[jantzen]") {
  Regime e2 = Regime::make(ParamCase::one, 2, infinity, 1, {0});
  JantzenMatrix m = jantzen_matrix(e2, 2);
  REQUIRE(m.basis.size() == 2);
  CHECK(m.basis[0] == mp({{2}}));
  CHECK(m.entries == std::map<std::pair<Int, Int>, Int>{{{0, 1}, 1}});
  JantzenMatrix m1 = jantzen_matrix(e2, 1);
  CHECK(m1.entries.empty());
}
