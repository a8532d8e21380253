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

// Exhaustive enumeration over small, equiprobable game spaces.

#ifndef DOMSOLVE_ENUMERATE_HPP_
#define DOMSOLVE_ENUMERATE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "domsolve/elimination.hpp"
#include "domsolve/errors.hpp"
#include "domsolve/game.hpp"
#include "domsolve/parallel.hpp"
#include "domsolve/rational.hpp"
#include "domsolve/rationalizability.hpp"

namespace domsolve {

inline constexpr int kMax2xnEnumeration = 8;
inline constexpr int kMax3xnEnumeration = 6;

struct ExactDistributionReport {
  int m = 2;
  int n = 0;
  BigRational pi;
  std::vector<BigRational> dist_I;    // Pr(I = 1..3 | solvable)
  std::vector<BigRational> dist_S_C;  // Pr(S^C = 1..n)
  std::vector<BigRational> dist_U_C;  // Pr(U^C = 1..n)
  BigRational mean_S_C;
  BigRational var_S_C;
  BigInt total_states;
};

namespace detail {

inline void check_enumeration_n(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (n > cap) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the enumeration limit " + std::to_string(cap));
  }
}

inline std::vector<BigRational> normalize(const std::vector<std::uint64_t>& counts,
                                          std::uint64_t total) {
  std::vector<BigRational> out;
  for (std::uint64_t c : counts) {
    BigRational q(BigInt(std::to_string(c)), BigInt(std::to_string(total)));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace detail

// All 2 x n games with Column's first row fixed to the identity ranking:
// c_2 ranges over S_n and each column of Row's matrix over its two orders.
// The outer permutation is split by its first entry for parallel work.
inline ExactDistributionReport enumerate_2xn(int n, int threads = 1) {
  detail::check_enumeration_n(n, kMax2xnEnumeration, "enumerate_2xn");
  struct Counts {
    std::uint64_t states = 0, solvable = 0;
    std::array<std::uint64_t, 3> iterations{};
    std::vector<std::uint64_t> s_c, u_c;
  };
  std::vector<Counts> parts(n);
  parallel_chunks(n, threads, [&](std::size_t first, std::size_t) {
    Counts& c = parts[first];
    c.s_c.assign(n, 0);
    c.u_c.assign(n, 0);
    std::vector<int> row(2 * n), col(2 * n);
    std::iota(col.begin(), col.begin() + n, 1);
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != static_cast<int>(first) + 1) rest.push_back(v);
    }
    Eliminator elim;
    const BimatrixView view{2, n, row.data(), col.data()};
    do {
      col[n] = static_cast<int>(first) + 1;
      std::copy(rest.begin(), rest.end(), col.begin() + n + 1);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int j = 0; j < n; ++j) {
          const int top_is_first = ((mask >> j) & 1u) == 0;
          row[j] = top_is_first ? 2 : 1;
          row[n + j] = top_is_first ? 1 : 2;
        }
        const auto s = elim.run(view);
        ++c.states;
        ++c.s_c[s.surviving[kColumn] - 1];
        ++c.u_c[s.undominated[kColumn] - 1];
        if (s.solvable) {
          ++c.solvable;
          if (s.iterations < 1 || s.iterations > 3) {
            throw std::logic_error("2 x n game solved in " + std::to_string(s.iterations) +
                                   " rounds");
          }
          ++c.iterations[s.iterations - 1];
        }
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  });

  Counts total;
  total.s_c.assign(n, 0);
  total.u_c.assign(n, 0);
  for (const Counts& c : parts) {
    total.states += c.states;
    total.solvable += c.solvable;
    for (int k = 0; k < 3; ++k) total.iterations[k] += c.iterations[k];
    for (int k = 0; k < n; ++k) {
      total.s_c[k] += c.s_c[k];
      total.u_c[k] += c.u_c[k];
    }
  }
  ExactDistributionReport r;
  r.n = n;
  r.total_states = BigInt(std::to_string(total.states));
  r.pi = detail::normalize({total.solvable}, total.states)[0];
  r.dist_I = detail::normalize({total.iterations.begin(), total.iterations.end()},
                               total.solvable);
  r.dist_S_C = detail::normalize(total.s_c, total.states);
  r.dist_U_C = detail::normalize(total.u_c, total.states);
  BigRational m1 = 0, m2 = 0;
  for (int k = 1; k <= n; ++k) {
    m1 += k * r.dist_S_C[k - 1];
    m2 += k * k * r.dist_S_C[k - 1];
  }
  r.mean_S_C = m1;
  r.var_S_C = m2 - m1 * m1;
  return r;
}

// Counts, for k = 1..n, of Column matrices (3 x n, first row the identity
// ranking) with exactly k undominated Column actions. Total (n!)^2.
inline std::vector<BigInt> enumerate_UC_3xn(int n, int threads = 1) {
  detail::check_enumeration_n(n, kMax3xnEnumeration, "enumerate_UC_3xn");
  std::vector<std::vector<std::uint64_t>> parts(n, std::vector<std::uint64_t>(n, 0));
  parallel_chunks(n, threads, [&](std::size_t first, std::size_t) {
    std::vector<int> col(3 * n), row(3 * n);
    // Row's ranks do not affect Column's first-round dominance.
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < 3; ++i) row[i * n + j] = i + 1;
    }
    std::iota(col.begin(), col.begin() + n, 1);
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != static_cast<int>(first) + 1) rest.push_back(v);
    }
    Eliminator elim;
    const BimatrixView view{3, n, row.data(), col.data()};
    do {
      col[n] = static_cast<int>(first) + 1;
      std::copy(rest.begin(), rest.end(), col.begin() + n + 1);
      std::iota(col.begin() + 2 * n, col.end(), 1);
      do {
        const auto s = elim.run(view);
        ++parts[first][s.undominated[kColumn] - 1];
      } while (std::next_permutation(col.begin() + 2 * n, col.end()));
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  std::vector<BigInt> out(n, 0);
  for (const auto& p : parts) {
    for (int k = 0; k < n; ++k) out[k] += BigInt(std::to_string(p[k]));
  }
  return out;
}

struct Outcome2x2 {
  bool solvable = false;
  int iterations = 0;
  int S_R = 0;
  int S_C = 0;
  auto operator<=>(const Outcome2x2&) const = default;
};

struct ClassDistribution2x2 {
  // Ordinal game as (row_ranks, col_ranks), each row-major.
  using Key = std::array<int, 8>;
  std::map<Key, BigRational> games;
  std::map<Outcome2x2, BigRational> outcomes;
  BigRational solvable = 0;
};

inline ClassDistribution2x2::Key ordinal_key(const OrdinalBimatrix& g) {
  ClassDistribution2x2::Key k{};
  std::copy(g.row_ranks().begin(), g.row_ranks().end(), k.begin());
  std::copy(g.col_ranks().begin(), g.col_ranks().end(), k.begin() + 4);
  return k;
}

// Exact distribution of the ordinal game (and its elimination outcome) drawn
// by sample_class(cls, 2, 2, .). A cardinal matrix matters only through the
// order of its four entries, so each matrix is one of 24 equally likely
// orders; conditioned classes keep the orders whose best responses are
// nondecreasing.
inline ClassDistribution2x2 enumerate_class_2x2(GameClass cls) {
  std::vector<std::vector<double>> orders;
  std::vector<double> v{1, 2, 3, 4};
  do orders.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));

  auto row_br_nondecreasing = [](const std::vector<double>& u) {
    const int b0 = u[0] > u[2] ? 0 : 1, b1 = u[1] > u[3] ? 0 : 1;
    return b0 <= b1;
  };
  auto col_br_nondecreasing = [](const std::vector<double>& u) {
    const int d0 = u[0] > u[1] ? 0 : 1, d1 = u[2] > u[3] ? 0 : 1;
    return d0 <= d1;
  };
  auto transpose = [](const std::vector<double>& u) {
    return std::vector<double>{u[0], u[2], u[1], u[3]};
  };

  std::vector<std::pair<std::vector<double>, std::vector<double>>> games;
  switch (cls) {
    case GameClass::kBaseline:
      for (const auto& r : orders) {
        for (const auto& c : orders) games.emplace_back(r, c);
      }
      break;
    case GameClass::kSymmetric:
      for (const auto& r : orders) games.emplace_back(r, transpose(r));
      break;
    case GameClass::kPotential:
      for (const auto& r : orders) games.emplace_back(r, r);
      break;
    case GameClass::kConstantSum:
      for (const auto& r : orders) {
        std::vector<double> c = r;
        for (double& x : c) x = 5 - x;
        games.emplace_back(r, c);
      }
      break;
    case GameClass::kStratComplements:
      for (const auto& r : orders) {
        if (!row_br_nondecreasing(r)) continue;
        for (const auto& c : orders) {
          if (col_br_nondecreasing(c)) games.emplace_back(r, c);
        }
      }
      break;
    case GameClass::kStratComplementsSym:
      for (const auto& r : orders) {
        if (row_br_nondecreasing(r)) games.emplace_back(r, transpose(r));
      }
      break;
  }

  ClassDistribution2x2 out;
  const BigRational weight(1, static_cast<long>(games.size()));
  for (const auto& [r, c] : games) {
    const OrdinalBimatrix g = ordinalize(CardinalBimatrix(2, 2, r, c));
    const auto t = iterate(g);
    out.games[ordinal_key(g)] += weight;
    const Outcome2x2 o{t.solvable, t.iterations, static_cast<int>(t.surviving[kRow].size()),
                       static_cast<int>(t.surviving[kColumn].size())};
    out.outcomes[o] += weight;
    if (t.solvable) out.solvable += weight;
  }
  return out;
}

// True iff some mix on the simplex grid with the given denominator strictly
// dominates `a`. One-sided: true certifies dominance.
inline bool grid_mixed_dominance_oracle(const CardinalBimatrix& g, int player, int a,
                                        const ActionSet& own, const ActionSet& opp,
                                        int resolution) {
  detail::check_player(player);
  detail::check_set(own, player, g.action_count(player), "own set");
  detail::check_set(opp, 1 - player, g.action_count(1 - player), "opponent set");
  if (!own.contains(a)) throw std::invalid_argument("action is not in the own set");
  if (own.size() < 2 || own.size() > 4) {
    throw std::invalid_argument("grid oracle needs 2 to 4 own actions");
  }
  if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  std::vector<int> others;
  for (int k : own.members) {
    if (k != a) others.push_back(k);
  }
  const int parts = static_cast<int>(others.size());
  std::vector<int> w(parts, 0);
  // Visit every composition of `resolution` into `parts` nonnegative parts.
  auto dominates = [&] {
    for (int o : opp.members) {
      double mix = 0.0;
      for (int k = 0; k < parts; ++k) mix += w[k] * g.payoff(player, others[k], o);
      if (!(mix > resolution * g.payoff(player, a, o))) return false;
    }
    return true;
  };
  if (parts == 1) {
    w[0] = resolution;
    return dominates();
  }
  for (int x = 0; x <= resolution; ++x) {
    if (parts == 2) {
      w = {x, resolution - x};
      if (dominates()) return true;
      continue;
    }
    for (int y = 0; x + y <= resolution; ++y) {
      w = {x, y, resolution - x - y};
      if (dominates()) return true;
    }
  }
  return false;
}

namespace detail {

// Calls fn on each of the 16 ordinal 2 x 2 games.
template <class Fn>
void for_each_ordinal_2x2(Fn&& fn) {
  for (int rmask = 0; rmask < 4; ++rmask) {
    for (int cmask = 0; cmask < 4; ++cmask) {
      const int r0 = (rmask & 1) ? 1 : 2, r1 = (rmask & 2) ? 1 : 2;
      const int c0 = (cmask & 1) ? 1 : 2, c1 = (cmask & 2) ? 1 : 2;
      fn(OrdinalBimatrix(2, 2, {r0, r1, 3 - r0, 3 - r1}, {c0, 3 - c0, c1, 3 - c1}));
    }
  }
}

}  // namespace detail

// Probability that a uniform ordinal 2 x 2 game has a unique
// point-rationalizable profile.
inline BigRational enumerate_point_rat_2x2() {
  int unique = 0, total = 0;
  detail::for_each_ordinal_2x2([&](const OrdinalBimatrix& g) {
    const auto sets = point_rationalizable_sets(g);
    unique += sets[kRow].size() == 1 && sets[kColumn].size() == 1;
    ++total;
  });
  BigRational q(unique, total);
  q.canonicalize();
  return q;
}

// Probability that a uniform ordinal 2 x 2 game is a best-response cycle,
// i.e. has no pure Nash equilibrium.
inline BigRational enumerate_best_response_cycles_2x2() {
  int cycles = 0, total = 0;
  detail::for_each_ordinal_2x2([&](const OrdinalBimatrix& g) {
    cycles += count_pure_nash(g) == 0;
    ++total;
  });
  BigRational q(cycles, total);
  q.canonicalize();
  return q;
}

}  // namespace domsolve

#endif  // DOMSOLVE_ENUMERATE_HPP_
