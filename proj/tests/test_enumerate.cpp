// Copyright 2026 The domsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "domsolve/enumerate.hpp"
#include "domsolve/formulas.hpp"

namespace domsolve {
namespace {

std::vector<std::string> strs(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

TEST(Enumerate2xn, MatchesClosedFormsThroughEight) {
  for (int n = 1; n <= kMax2xnEnumeration; ++n) {
    const auto r = enumerate_2xn(n);
    EXPECT_EQ(r.pi, pi_2n(n)) << n;
    const auto di = dist_I_2n(n);
    ASSERT_EQ(r.dist_I.size(), 3u);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(r.dist_I[k], di[k]) << n << " I=" << k + 1;
    EXPECT_EQ(r.dist_U_C, dist_U_C_2n(n)) << n;
    EXPECT_EQ(r.dist_S_C, dist_S_C_2n(n)) << n;
    EXPECT_EQ(r.mean_S_C, mean_S_C_2n(n)) << n;
    EXPECT_EQ(r.var_S_C, var_S_C_2n(n)) << n;
  }
}

TEST(Enumerate2xn, ThreadCountDoesNotChangeResult) {
  const auto a = enumerate_2xn(6, 1), b = enumerate_2xn(6, 4);
  EXPECT_EQ(a.pi, b.pi);
  EXPECT_EQ(a.dist_S_C, b.dist_S_C);
  EXPECT_EQ(a.total_states, b.total_states);
}

TEST(Enumerate2xn, SpotChecks) {
  EXPECT_EQ(enumerate_2xn(2).dist_I[1], BigRational(2, 3));
  EXPECT_EQ(enumerate_2xn(3).dist_I[1], BigRational(2, 3));
  EXPECT_EQ(enumerate_2xn(3).pi, BigRational(5, 8));
}

TEST(Enumerate3xn, TableRows) {
  EXPECT_EQ(strs(enumerate_UC_3xn(1)), (std::vector<std::string>{"1"}));
  EXPECT_EQ(strs(enumerate_UC_3xn(2)), (std::vector<std::string>{"1", "3"}));
  EXPECT_EQ(strs(enumerate_UC_3xn(3)), (std::vector<std::string>{"4", "15", "17"}));
  EXPECT_EQ(strs(enumerate_UC_3xn(4)), (std::vector<std::string>{"36", "147", "242", "151"}));
  EXPECT_EQ(strs(enumerate_UC_3xn(5)),
            (std::vector<std::string>{"576", "2460", "4775", "4690", "1899"}));
  EXPECT_EQ(strs(enumerate_UC_3xn(6, 2)),
            (std::vector<std::string>{"14400", "63228", "134909", "164193", "109959", "31711"}));
}

TEST(Enumerate3xn, RowSumsMeansAndFosd) {
  for (int n = 1; n <= kMax3xnEnumeration; ++n) {
    const auto row = enumerate_UC_3xn(n);
    const BigInt total = factorial(n) * factorial(n);
    BigInt s = 0, weighted = 0;
    for (int k = 1; k <= n; ++k) {
      s += row[k - 1];
      weighted += k * row[k - 1];
    }
    EXPECT_EQ(s, total) << n;
    BigRational mean(weighted, total);
    mean.canonicalize();
    EXPECT_EQ(mean, mean_U_C_recurrence(3, n)) << n;
    // U^C(3, n) first-order stochastically dominates U^C(2, n).
    const auto two = dist_U_C_2n(n);
    BigRational cdf3 = 0, cdf2 = 0;
    for (int k = 1; k <= n; ++k) {
      cdf3 += BigRational(row[k - 1], total);
      cdf2 += two[k - 1];
      EXPECT_LE(cdf3, cdf2) << n << " k=" << k;
    }
    BigRational top(row[n - 1], total);
    top.canonicalize();
    EXPECT_GE(top, bruhat_bounds(n).lower_exact) << n;
  }
}

TEST(Enumerate, CapacityAndArguments) {
  EXPECT_THROW(enumerate_2xn(kMax2xnEnumeration + 1), CapacityError);
  EXPECT_THROW(enumerate_UC_3xn(kMax3xnEnumeration + 1), CapacityError);
  EXPECT_THROW(enumerate_2xn(0), std::invalid_argument);
}

TEST(PointRat2x2, ThreeQuartersAndCycles) {
  EXPECT_EQ(enumerate_point_rat_2x2(), BigRational(3, 4));
  EXPECT_EQ(enumerate_point_rat_2x2(), point_rat_unique_prob(2, 2));
  // The 1/4 without a unique profile splits into cycles and games with two
  // pure equilibria.
  EXPECT_EQ(enumerate_best_response_cycles_2x2(), BigRational(1, 8));
  int two_equilibria = 0;
  detail::for_each_ordinal_2x2([&](const OrdinalBimatrix& g) { two_equilibria += count_pure_nash(g) == 2; });
  EXPECT_EQ(two_equilibria, 2);
  EXPECT_EQ(1 - enumerate_point_rat_2x2(),
            enumerate_best_response_cycles_2x2() + BigRational(two_equilibria, 16));
}

TEST(PointRat2x2, MatchingPenniesIsNotUnique) {
  const auto g = OrdinalBimatrix::from_rows({{2, 1}, {1, 2}}, {{1, 2}, {2, 1}});
  const auto s = point_rationalizable_sets(g);
  EXPECT_EQ(s[kRow].size(), 2u);
  EXPECT_EQ(s[kColumn].size(), 2u);
}

TEST(Class2x2, DistributionsAreProbabilities) {
  for (GameClass c : {GameClass::kBaseline, GameClass::kSymmetric, GameClass::kPotential,
                      GameClass::kConstantSum, GameClass::kStratComplements,
                      GameClass::kStratComplementsSym}) {
    const auto d = enumerate_class_2x2(c);
    BigRational total = 0, outcome_total = 0;
    for (const auto& [k, p] : d.games) total += p;
    for (const auto& [k, p] : d.outcomes) outcome_total += p;
    EXPECT_EQ(total, 1) << to_string(c);
    EXPECT_EQ(outcome_total, 1) << to_string(c);
  }
  EXPECT_EQ(enumerate_class_2x2(GameClass::kBaseline).solvable, pi_2n(2));
  const auto cs = enumerate_class_2x2(GameClass::kConstantSum);
  EXPECT_GT(cs.solvable, 0);
  EXPECT_LT(cs.solvable, 1);
}

TEST(GridOracle, AgreesWithKnownCases) {
  // Row action 2 is beaten by the even mix of 0 and 1 but by neither alone.
  const auto g = CardinalBimatrix::from_rows({{3, 0}, {0, 3}, {1, 1}}, {{1, 2}, {3, 4}, {5, 6}});
  const ActionSet own = full_set(kRow, 3), opp = full_set(kColumn, 2);
  EXPECT_TRUE(grid_mixed_dominance_oracle(g, kRow, 2, own, opp, 10));
  EXPECT_FALSE(grid_mixed_dominance_oracle(g, kRow, 0, own, opp, 10));
  EXPECT_THROW(grid_mixed_dominance_oracle(g, kRow, 2, ActionSet{kRow, {2}}, opp, 10),
               std::invalid_argument);
}

}  // namespace
}  // namespace domsolve
