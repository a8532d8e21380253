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

// Dominance by mixed strategies, rationalizability and point-rationalizability.

#ifndef DOMSOLVE_RATIONALIZABILITY_HPP_
#define DOMSOLVE_RATIONALIZABILITY_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "domsolve/elimination.hpp"
#include "domsolve/errors.hpp"
#include "domsolve/game.hpp"
#include "domsolve/simplex.hpp"

namespace domsolve {

struct MixedCertificate {
  std::vector<int> actions;     // own actions other than the dominated one
  std::vector<double> weights;  // aligned with actions, sums to 1
  double margin = 0.0;          // LP optimum of the worst-case payoff gap
};

struct RationalizabilityReport {
  std::array<ActionSet, 2> rationalizable;
  std::array<ActionSet, 2> point_rationalizable;
  std::array<ActionSet, 2> pure_survivors;
  bool mixed_solvable = false;
  int mixed_iterations = 0;
};

// 1e-9 times the largest absolute payoff (at least 1).
inline double default_tolerance(const CardinalBimatrix& g) {
  double scale = 1.0;
  for (double x : g.row_payoffs()) scale = std::max(scale, std::abs(x));
  for (double x : g.col_payoffs()) scale = std::max(scale, std::abs(x));
  return 1e-9 * scale;
}

// Smallest payoff gap of the mix over `a` across `opp`, by direct arithmetic.
inline double certificate_margin(const CardinalBimatrix& g, int player, int a,
                                 const MixedCertificate& cert, const ActionSet& opp) {
  double worst = std::numeric_limits<double>::infinity();
  for (int o : opp.members) {
    double mix = 0.0;
    for (std::size_t k = 0; k < cert.actions.size(); ++k) {
      mix += cert.weights[k] * g.payoff(player, cert.actions[k], o);
    }
    worst = std::min(worst, mix - g.payoff(player, a, o));
  }
  return worst;
}

// Pass tol < 0 for default_tolerance(g).
//
// The best mix solves the zero-sum game with payoffs
// D[k][j] = u(k, j) - u(a, j), shifted by c so every entry is >= 1. Its value
// v' comes from maximize sum(y) s.t. D' y <= 1, y >= 0: v' = 1 / optimum, the
// mix is the normalized dual, and the margin is v' - c.
inline std::optional<MixedCertificate> is_mixed_dominated(const CardinalBimatrix& g,
                                                          int player, int a,
                                                          const ActionSet& own,
                                                          const ActionSet& opp,
                                                          double tol = -1.0) {
  detail::check_player(player);
  detail::check_set(own, player, g.action_count(player), "own set");
  detail::check_set(opp, 1 - player, g.action_count(1 - player), "opponent set");
  if (!own.contains(a)) throw std::invalid_argument("action is not in the own set");
  if (own.size() < 2) throw std::invalid_argument("own set needs at least two actions");
  if (tol < 0) tol = default_tolerance(g);

  MixedCertificate cert;
  for (int k : own.members) {
    if (k != a) cert.actions.push_back(k);
  }
  const int rows = static_cast<int>(cert.actions.size());
  const int cols = static_cast<int>(opp.size());
  std::vector<double> d(static_cast<std::size_t>(rows) * cols);
  double lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k < rows; ++k) {
    for (int j = 0; j < cols; ++j) {
      const int o = opp.members[j];
      d[k * cols + j] = g.payoff(player, cert.actions[k], o) - g.payoff(player, a, o);
      lo = std::min(lo, d[k * cols + j]);
    }
  }
  const double shift = 1.0 - lo;
  for (double& x : d) x += shift;

  const auto lp = solve_packing_lp(d, rows, cols, std::vector<double>(rows, 1.0),
                                   std::vector<double>(cols, 1.0));
  auto fail = [&](const std::string& why) {
    std::ostringstream msg;
    msg << "mixed dominance LP failed (" << why << ") for player " << player << ", action "
        << a << ", " << rows << " alternatives x " << cols << " opponent actions, "
        << lp.pivots << " pivots";
    throw NumericalError(msg.str());
  };
  if (lp.status == LpResult::Status::kUnbounded) fail("unbounded");
  if (lp.status == LpResult::Status::kIterationLimit) fail("iteration limit");
  if (!(lp.objective > 0.0)) fail("non-positive optimum");

  const double margin = 1.0 / lp.objective - shift;
  if (margin <= tol) return std::nullopt;

  double total = 0.0;
  for (double x : lp.dual) {
    if (x < -1e-9) fail("negative dual");
    total += std::max(x, 0.0);
  }
  if (!(total > 0.0)) fail("zero dual");
  for (double x : lp.dual) cert.weights.push_back(std::max(x, 0.0) / total);
  cert.margin = margin;

  double sum = 0.0;
  for (double w : cert.weights) sum += w;
  const double checked = certificate_margin(g, player, a, cert, opp);
  if (std::abs(sum - 1.0) > 1e-12 || checked < margin - 1e-9 || !(checked > 0.0)) {
    fail("certificate did not re-verify, direct margin " + std::to_string(checked));
  }
  return cert;
}

// Iterated deletion of never-best responses to surviving pure actions,
// simultaneous rounds.
inline std::array<ActionSet, 2> point_rationalizable_sets(const BimatrixView& g) {
  std::array<std::vector<int>, 2> alive{full_set(kRow, g.m).members,
                                        full_set(kColumn, g.n).members};
  std::array<std::vector<char>, 2> keep;
  for (;;) {
    bool changed = false;
    std::array<std::vector<int>, 2> next;
    for (int p = 0; p < 2; ++p) {
      keep[p].assign(g.action_count(p), 0);
      for (int o : alive[1 - p]) {
        int best = alive[p][0];
        for (int a : alive[p]) {
          if (g.rank(p, a, o) > g.rank(p, best, o)) best = a;
        }
        keep[p][best] = 1;
      }
      for (int a : alive[p]) {
        if (keep[p][a]) next[p].push_back(a);
      }
      changed = changed || next[p].size() != alive[p].size();
    }
    alive = std::move(next);
    if (!changed) break;
  }
  return {ActionSet{kRow, alive[0]}, ActionSet{kColumn, alive[1]}};
}

inline std::array<ActionSet, 2> point_rationalizable_sets(const OrdinalBimatrix& g) {
  return point_rationalizable_sets(g.view());
}

// Pass tol < 0 for default_tolerance(g).
inline RationalizabilityReport rationalizable_sets(const CardinalBimatrix& g,
                                                   double tol = -1.0) {
  if (tol < 0) tol = default_tolerance(g);
  std::array<ActionSet, 2> alive{full_set(kRow, g.rows()), full_set(kColumn, g.cols())};
  RationalizabilityReport report;
  for (;;) {
    std::array<std::vector<int>, 2> removed;
    for (int p = 0; p < 2; ++p) {
      if (alive[p].size() < 2) continue;
      for (int a : alive[p].members) {
        if (is_mixed_dominated(g, p, a, alive[p], alive[1 - p], tol)) removed[p].push_back(a);
      }
    }
    if (removed[0].empty() && removed[1].empty()) break;
    ++report.mixed_iterations;
    for (int p = 0; p < 2; ++p) {
      std::vector<int> kept;
      std::set_difference(alive[p].members.begin(), alive[p].members.end(),
                          removed[p].begin(), removed[p].end(), std::back_inserter(kept));
      alive[p].members = std::move(kept);
    }
  }
  report.rationalizable = alive;
  report.mixed_solvable = alive[0].size() == 1 && alive[1].size() == 1;
  const OrdinalBimatrix ordinal = ordinalize(g);
  const auto trace = iterate(ordinal);
  report.pure_survivors = {trace.surviving[kRow], trace.surviving[kColumn]};
  report.point_rationalizable = point_rationalizable_sets(ordinal);
  return report;
}

}  // namespace domsolve

#endif  // DOMSOLVE_RATIONALIZABILITY_HPP_
