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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>

#include "domsolve/enumerate.hpp"
#include "domsolve/game.hpp"

namespace domsolve {
namespace {

constexpr GameClass kClasses[] = {GameClass::kBaseline,         GameClass::kSymmetric,
                                  GameClass::kPotential,        GameClass::kConstantSum,
                                  GameClass::kStratComplements, GameClass::kStratComplementsSym};

std::vector<int> row_best_responses(const CardinalBimatrix& g) {
  std::vector<int> b(g.cols());
  for (int j = 0; j < g.cols(); ++j) {
    for (int i = 1; i < g.rows(); ++i) {
      if (g.u_row(i, j) > g.u_row(b[j], j)) b[j] = i;
    }
  }
  return b;
}

std::vector<int> col_best_responses(const CardinalBimatrix& g) {
  std::vector<int> d(g.rows());
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 1; j < g.cols(); ++j) {
      if (g.u_col(i, j) > g.u_col(i, d[i])) d[i] = j;
    }
  }
  return d;
}

TEST(OrdinalBimatrix, ValidatesPermutations) {
  EXPECT_NO_THROW(OrdinalBimatrix::from_rows({{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}));
  EXPECT_THROW(OrdinalBimatrix::from_rows({{1, 1}, {1, 2}}, {{1, 2}, {2, 1}}),
               std::invalid_argument);
  EXPECT_THROW(OrdinalBimatrix::from_rows({{1, 2}, {2, 1}}, {{1, 3}, {2, 1}}),
               std::invalid_argument);
  EXPECT_THROW(OrdinalBimatrix(0, 2, {}, {}), std::invalid_argument);
  EXPECT_THROW(OrdinalBimatrix(1, 2, {1}, {1, 2}), std::invalid_argument);
}

TEST(OrdinalBimatrix, RankAccessorsAgree) {
  const auto g = sample_baseline(3, 4, Seed{1, 2});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(g.rank(kRow, i, j), g.row_rank(i, j));
      EXPECT_EQ(g.rank(kColumn, j, i), g.col_rank(i, j));
    }
  }
}

TEST(CardinalBimatrix, RejectsTiesAndNonFinite) {
  EXPECT_THROW(CardinalBimatrix::from_rows({{1, 2}, {1, 3}}, {{1, 2}, {3, 4}}),
               std::invalid_argument);
  EXPECT_THROW(CardinalBimatrix::from_rows({{1, 2}, {3, 4}}, {{5, 5}, {3, 4}}),
               std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(CardinalBimatrix::from_rows({{nan, 2}, {3, 4}}, {{1, 2}, {3, 4}}),
               std::invalid_argument);
  // Ties across a row of u_row are allowed: Row only compares within a column.
  EXPECT_NO_THROW(CardinalBimatrix::from_rows({{1, 1}, {2, 2}}, {{1, 2}, {1, 2}}));
}

TEST(Sampling, Deterministic) {
  EXPECT_EQ(sample_baseline(5, 7, Seed{3, 1}), sample_baseline(5, 7, Seed{3, 1}));
  EXPECT_NE(sample_baseline(5, 7, Seed{3, 1}), sample_baseline(5, 7, Seed{3, 2}));
  for (GameClass c : kClasses) {
    EXPECT_EQ(sample_class(c, 4, 4, Seed{9, 9}), sample_class(c, 4, 4, Seed{9, 9}));
  }
}

TEST(Sampling, ClassInvariants) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    for (Distribution dist : {Distribution::kUniform01, Distribution::kStdNormal}) {
      const int n = 2 + static_cast<int>(s % 5);
      const Seed seed{s, 77};
      const auto sym = sample_class(GameClass::kSymmetric, n, n, seed, dist);
      const auto pot = sample_class(GameClass::kPotential, n, n, seed, dist);
      const auto cs = sample_class(GameClass::kConstantSum, n, n + 1, seed, dist);
      const auto sc = sample_class(GameClass::kStratComplements, n, n + 2, seed, dist);
      const auto scs = sample_class(GameClass::kStratComplementsSym, n, n, seed, dist);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          EXPECT_EQ(sym.u_col(i, j), sym.u_row(j, i));
          EXPECT_EQ(pot.u_col(i, j), pot.u_row(i, j));
          EXPECT_EQ(scs.u_col(i, j), scs.u_row(j, i));
        }
        for (int j = 0; j <= n; ++j) {
          // Exact on the uniform grid; rounded for normal draws.
          if (dist == Distribution::kUniform01) {
            EXPECT_EQ(cs.u_row(i, j) + cs.u_col(i, j), 1.0);
          } else {
            EXPECT_NEAR(cs.u_row(i, j) + cs.u_col(i, j), 1.0, 1e-12);
          }
        }
      }
      for (const auto* g : {&sc, &scs}) {
        const auto b = row_best_responses(*g), d = col_best_responses(*g);
        EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
        EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
      }
      // All generated games must ordinalize without ties.
      EXPECT_NO_THROW(ordinalize(sc));
      EXPECT_NO_THROW(ordinalize(cs));
    }
  }
  EXPECT_THROW(sample_class(GameClass::kSymmetric, 2, 3, Seed{}), std::invalid_argument);
}

TEST(Sampling, CrraPreservesOrder) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto g = sample_cardinal(4, 5, Distribution::kUniform01, Seed{s, 5});
    for (double alpha : {0.1, 0.41, 1.0}) {
      EXPECT_EQ(ordinalize(apply_crra(g, alpha)), ordinalize(g));
    }
  }
  EXPECT_THROW(apply_crra(sample_cardinal(2, 2, Distribution::kUniform01, Seed{}), 0.0),
               std::invalid_argument);
  const auto neg = CardinalBimatrix::from_rows({{-1, 2}, {3, 4}}, {{1, 2}, {3, 4}});
  EXPECT_THROW(apply_crra(neg, 0.5), std::domain_error);
}

TEST(Sampling, OrdinalizeRanks) {
  const auto g = CardinalBimatrix::from_rows({{0.3, 0.9}, {0.7, 0.1}}, {{5, 6}, {2, -1}});
  const auto o = ordinalize(g);
  EXPECT_EQ(o, OrdinalBimatrix::from_rows({{1, 2}, {2, 1}}, {{1, 2}, {2, 1}}));
}

// Sampled 2 x 2 ordinal games against the exact class distribution.
class ClassDistribution : public ::testing::TestWithParam<GameClass> {};

TEST_P(ClassDistribution, MatchesEnumeration) {
  const GameClass cls = GetParam();
  const auto exact = enumerate_class_2x2(cls);
  std::map<ClassDistribution2x2::Key, std::uint64_t> counts;
  const int draws = 200000;
  for (int t = 0; t < draws; ++t) {
    ++counts[ordinal_key(ordinalize(sample_class(cls, 2, 2, Seed{31, std::uint64_t(t)})))];
  }
  double chi2 = 0;
  for (const auto& [key, p] : exact.games) {
    const double e = draws * to_double(p);
    const double o = static_cast<double>(counts[key]);
    chi2 += (o - e) * (o - e) / e;
  }
  // No sampled game outside the support.
  EXPECT_EQ(counts.size(), exact.games.size()) << to_string(cls);
  const int dof = static_cast<int>(exact.games.size()) - 1;
  if (dof > 0) {
    const double limit = boost::math::quantile(
        boost::math::complement(boost::math::chi_squared(dof), 1e-6));
    EXPECT_LT(chi2, limit) << to_string(cls);
  }
}

INSTANTIATE_TEST_SUITE_P(AllClasses, ClassDistribution, ::testing::ValuesIn(kClasses),
                         [](const auto& info) {
                           std::string s(to_string(info.param));
                           std::erase(s, '-');
                           return s;
                         });

TEST(NPlayer, RanksArePermutationsAndDeterministic) {
  const auto g = sample_nplayer({2, 3, 4}, Seed{4, 4});
  EXPECT_EQ(g.players(), 3);
  EXPECT_EQ(g.profile_count(), 24u);
  const auto h = sample_nplayer({2, 3, 4}, Seed{4, 4});
  for (int k = 0; k < 3; ++k) {
    EXPECT_TRUE(std::equal(g.ranks(k).begin(), g.ranks(k).end(), h.ranks(k).begin()));
  }
  EXPECT_EQ(g.action_of(0, 23), 1);
  EXPECT_EQ(g.action_of(2, 23), 3);
  EXPECT_THROW(sample_nplayer({3}, Seed{}), std::invalid_argument);
  EXPECT_THROW(OrdinalTensorGame({2, 2}, {{1, 2, 1, 1}, {1, 2, 1, 2}}), std::invalid_argument);
}

TEST(Names, RoundTrip) {
  for (GameClass c : kClasses) EXPECT_EQ(parse_game_class(to_string(c)), c);
  EXPECT_EQ(parse_distribution("normal"), Distribution::kStdNormal);
  EXPECT_THROW(parse_game_class("zero-sum"), std::invalid_argument);
}

}  // namespace
}  // namespace domsolve
