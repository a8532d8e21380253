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

// Iterated elimination of pure strictly dominated actions.
//
// Rounds are simultaneous: every player deletes all of its actions that are
// dominated relative to the current surviving sets, then the next round
// starts. The iteration count is the number of rounds that deleted something.

#ifndef DOMSOLVE_ELIMINATION_HPP_
#define DOMSOLVE_ELIMINATION_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "domsolve/game.hpp"

namespace domsolve {

struct ActionSet {
  int player = 0;
  std::vector<int> members;  // sorted, 0-based

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(int a) const {
    return std::binary_search(members.begin(), members.end(), a);
  }
  friend bool operator==(const ActionSet&, const ActionSet&) = default;
};

inline ActionSet full_set(int player, int count) {
  ActionSet s{player, std::vector<int>(count)};
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

struct Removal {
  int player = 0;
  std::vector<int> removed;  // sorted
  friend bool operator==(const Removal&, const Removal&) = default;
};

struct EliminationTrace {
  // One entry per round that deleted something; each round lists the players
  // that lost actions in it, in player order.
  std::vector<std::vector<Removal>> rounds;
  std::vector<ActionSet> surviving;     // indexed by player
  std::vector<int> undominated_counts;  // first-round U, indexed by player
  int iterations = 0;
  bool solvable = false;
  friend bool operator==(const EliminationTrace&, const EliminationTrace&) = default;
};

struct Metrics {
  int U_R = 0;
  int U_C = 0;
  int S_R = 0;
  int S_C = 0;
  int I = 0;
  bool solvable = false;
};

namespace detail {

inline void check_player(int player) {
  if (player != kRow && player != kColumn) {
    throw std::invalid_argument("player must be 0 (Row) or 1 (Column)");
  }
}

inline void check_set(const ActionSet& s, int player, int count, const char* what) {
  if (s.player != player) {
    throw std::invalid_argument(std::string(what) + " belongs to the wrong player");
  }
  if (s.members.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  for (std::size_t k = 0; k < s.members.size(); ++k) {
    const int a = s.members[k];
    if (a < 0 || a >= count) {
      throw std::invalid_argument(std::string(what) + " has out-of-range action " +
                                  std::to_string(a));
    }
    if (k > 0 && s.members[k - 1] >= a) {
      throw std::invalid_argument(std::string(what) + " must be sorted and unique");
    }
  }
}

}  // namespace detail

// True iff `a` beats `b` for `player` against every action in `opp`.
inline bool strictly_dominates(const OrdinalBimatrix& g, int player, int a, int b,
                               const ActionSet& opp) {
  detail::check_player(player);
  const int count = g.action_count(player);
  if (a < 0 || a >= count || b < 0 || b >= count) {
    throw std::invalid_argument("action index out of range");
  }
  if (a == b) throw std::invalid_argument("an action cannot dominate itself");
  detail::check_set(opp, 1 - player, g.action_count(1 - player), "opponent set");
  for (int o : opp.members) {
    if (g.rank(player, a, o) <= g.rank(player, b, o)) return false;
  }
  return true;
}

// Actions of `own` not strictly dominated within `own` against `opp`.
inline ActionSet undominated(const OrdinalBimatrix& g, int player, const ActionSet& own,
                             const ActionSet& opp) {
  detail::check_player(player);
  detail::check_set(own, player, g.action_count(player), "own set");
  detail::check_set(opp, 1 - player, g.action_count(1 - player), "opponent set");
  ActionSet out{player, {}};
  for (int b : own.members) {
    bool dominated = false;
    for (int a : own.members) {
      if (a != b && strictly_dominates(g, player, a, b, opp)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.members.push_back(b);
  }
  return out;
}

// Reusable workspace for two-player elimination. Keeps its buffers between
// calls, so simulations can run millions of games without allocating. Not
// thread-safe; use one per thread.
class Eliminator {
 public:
  struct Summary {
    std::array<int, 2> undominated{};
    std::array<int, 2> surviving{};
    int iterations = 0;
    bool solvable = false;
  };

  Summary run(const BimatrixView& g, EliminationTrace* trace = nullptr) {
    for (int p = 0; p < 2; ++p) {
      const int count = g.action_count(p);
      alive_[p].resize(count);
      std::iota(alive_[p].begin(), alive_[p].end(), 0);
      table_ready_[p] = false;
    }
    if (trace != nullptr) *trace = EliminationTrace{};
    Summary s;
    bool first = true;
    for (;;) {
      for (int p = 0; p < 2; ++p) find_dominated(g, p);
      if (first) {
        for (int p = 0; p < 2; ++p) {
          s.undominated[p] = static_cast<int>(alive_[p].size() - dominated_[p].size());
        }
        first = false;
      }
      if (dominated_[0].empty() && dominated_[1].empty()) break;
      ++s.iterations;
      if (trace != nullptr) {
        auto& round = trace->rounds.emplace_back();
        for (int p = 0; p < 2; ++p) {
          if (!dominated_[p].empty()) round.push_back({p, dominated_[p]});
        }
      }
      for (int p = 0; p < 2; ++p) {
        if (dominated_[p].empty()) continue;
        std::vector<int>& a = alive_[p];
        std::size_t w = 0;
        std::size_t d = 0;
        for (std::size_t r = 0; r < a.size(); ++r) {
          if (d < dominated_[p].size() && dominated_[p][d] == a[r]) {
            ++d;
          } else {
            a[w++] = a[r];
          }
        }
        a.resize(w);
      }
    }
    s.surviving = {static_cast<int>(alive_[0].size()), static_cast<int>(alive_[1].size())};
    s.solvable = s.surviving[0] == 1 && s.surviving[1] == 1;
    if (trace != nullptr) {
      trace->iterations = s.iterations;
      trace->solvable = s.solvable;
      trace->undominated_counts = {s.undominated[0], s.undominated[1]};
      trace->surviving = {ActionSet{kRow, alive_[0]}, ActionSet{kColumn, alive_[1]}};
    }
    return s;
  }

 private:
  // Tables above this many 64-bit words fall back to pairwise scans.
  static constexpr std::size_t kMaxTableWords = std::size_t{1} << 21;

  // Fills dominated_[p] (sorted) with p's alive actions that some other alive
  // action strictly dominates against the opponent's alive actions.
  void find_dominated(const BimatrixView& g, int p) {
    std::vector<int>& out = dominated_[p];
    out.clear();
    const std::vector<int>& own = alive_[p];
    const std::vector<int>& opp = alive_[1 - p];
    if (own.size() <= 1) return;

    if (opp.size() == 1) {
      // Everything but the best reply is dominated.
      const int o = opp[0];
      int best = own[0];
      for (int a : own) {
        if (g.rank(p, a, o) > g.rank(p, best, o)) best = a;
      }
      for (int a : own) {
        if (a != best) out.push_back(a);
      }
      return;
    }

    if (own.size() == 2) {
      const int a = own[0], b = own[1];
      bool a_over_b = true, b_over_a = true;
      for (int o : opp) {
        const bool gt = g.rank(p, a, o) > g.rank(p, b, o);
        a_over_b = a_over_b && gt;
        b_over_a = b_over_a && !gt;
        if (!a_over_b && !b_over_a) return;
      }
      out.push_back(a_over_b ? b : a);
      return;
    }

    if (opp.size() == 2) {
      // Walk own actions from best to worst at o1; an action is dominated iff
      // something earlier in the walk also ranks higher at o2.
      const int o1 = opp[0], o2 = opp[1];
      const int count = g.action_count(p);
      by_rank_.assign(count + 1, -1);
      for (int a : own) by_rank_[g.rank(p, a, o1)] = a;
      int best2 = 0;
      for (int r = count; r >= 1; --r) {
        const int a = by_rank_[r];
        if (a < 0) continue;
        const int r2 = g.rank(p, a, o2);
        if (r2 < best2) {
          out.push_back(a);
        } else {
          best2 = r2;
        }
      }
      std::sort(out.begin(), out.end());
      return;
    }

    const int count = g.action_count(p);
    const int opp_count = g.action_count(1 - p);
    const std::size_t words = (static_cast<std::size_t>(count) + 63) / 64;
    const std::size_t table_words = static_cast<std::size_t>(opp_count) * (count + 1) * words;
    if (table_words > kMaxTableWords) {
      pairwise_dominated(g, p, own, opp, out);
      return;
    }
    if (!table_ready_[p]) build_table(g, p, count, opp_count, words);

    // better_[p] row (o, r) holds the own actions ranked above r at o; b is
    // dominated iff some alive action lies in the row (o, rank(b, o)) for
    // every alive o.
    alive_bits_.assign(words, 0);
    for (int a : own) alive_bits_[a >> 6] |= std::uint64_t{1} << (a & 63);
    const std::vector<std::uint64_t>& table = better_[p];
    const std::size_t row_words = (count + 1) * words;
    for (int b : own) {
      if (words == 1) {
        std::uint64_t cand = alive_bits_[0];
        for (int o : opp) {
          cand &= table[o * row_words + g.rank(p, b, o)];
          if (cand == 0) break;
        }
        if (cand != 0) out.push_back(b);
        continue;
      }
      cand_ = alive_bits_;
      bool any = true;
      for (int o : opp) {
        const std::uint64_t* row = &table[o * row_words + g.rank(p, b, o) * words];
        any = false;
        for (std::size_t w = 0; w < words; ++w) {
          cand_[w] &= row[w];
          any = any || cand_[w] != 0;
        }
        if (!any) break;
      }
      if (any) out.push_back(b);
    }
  }

  void build_table(const BimatrixView& g, int p, int count, int opp_count,
                   std::size_t words) {
    const std::size_t row_words = (count + 1) * words;
    std::vector<std::uint64_t>& table = better_[p];
    table.assign(opp_count * row_words, 0);
    by_rank_.assign(count + 1, -1);
    for (int o = 0; o < opp_count; ++o) {
      for (int a = 0; a < count; ++a) by_rank_[g.rank(p, a, o)] = a;
      std::uint64_t* base = &table[o * row_words];
      for (int r = count - 1; r >= 0; --r) {
        std::copy(base + (r + 1) * words, base + (r + 2) * words, base + r * words);
        const int a = by_rank_[r + 1];
        base[r * words + (a >> 6)] |= std::uint64_t{1} << (a & 63);
      }
    }
    table_ready_[p] = true;
  }

  static void pairwise_dominated(const BimatrixView& g, int p, const std::vector<int>& own,
                                 const std::vector<int>& opp, std::vector<int>& out) {
    for (int b : own) {
      for (int a : own) {
        if (a == b) continue;
        bool dom = true;
        for (int o : opp) {
          if (g.rank(p, a, o) <= g.rank(p, b, o)) {
            dom = false;
            break;
          }
        }
        if (dom) {
          out.push_back(b);
          break;
        }
      }
    }
  }

  std::array<std::vector<int>, 2> alive_;
  std::array<std::vector<int>, 2> dominated_;
  std::array<std::vector<std::uint64_t>, 2> better_;
  std::array<bool, 2> table_ready_{};
  std::vector<int> by_rank_;
  std::vector<std::uint64_t> alive_bits_;
  std::vector<std::uint64_t> cand_;
};

inline EliminationTrace iterate(const OrdinalBimatrix& g) {
  Eliminator e;
  EliminationTrace t;
  e.run(g.view(), &t);
  return t;
}

inline Metrics metrics(const OrdinalBimatrix& g) {
  Eliminator e;
  const auto s = e.run(g.view());
  return {s.undominated[kRow], s.undominated[kColumn], s.surviving[kRow],
          s.surviving[kColumn], s.iterations, s.solvable};
}

// Cells where both players are at their top rank.
inline int count_pure_nash(const BimatrixView& g) {
  int count = 0;
  for (int i = 0; i < g.m; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (g.row_ranks[i * g.n + j] == g.m && g.col_ranks[i * g.n + j] == g.n) ++count;
    }
  }
  return count;
}

inline int count_pure_nash(const OrdinalBimatrix& g) { return count_pure_nash(g.view()); }

// Subgame on the given (sorted) actions, re-ranked so it is a valid game.
inline OrdinalBimatrix restrict_game(const OrdinalBimatrix& g, const std::vector<int>& rows,
                                     const std::vector<int>& cols) {
  const int m = static_cast<int>(rows.size()), n = static_cast<int>(cols.size());
  detail::check_dims(m, n);
  std::vector<int> r(static_cast<std::size_t>(m) * n), c(r.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      int below_r = 1, below_c = 1;
      for (int k = 0; k < m; ++k) {
        below_r += g.row_rank(rows[k], cols[j]) < g.row_rank(rows[i], cols[j]);
      }
      for (int k = 0; k < n; ++k) {
        below_c += g.col_rank(rows[i], cols[k]) < g.col_rank(rows[i], cols[j]);
      }
      r[i * n + j] = below_r;
      c[i * n + j] = below_c;
    }
  }
  return OrdinalBimatrix(m, n, std::move(r), std::move(c));
}

struct Subgame {
  std::vector<int> rows;  // indices into the original game
  std::vector<int> cols;
  OrdinalBimatrix game;
};

// Shrinks a solvable game to m2 x n2 while keeping it solvable: repeatedly
// drop one of the player's actions deleted in the earliest round in which
// that player deletes anything.
inline Subgame solvable_subgame(const OrdinalBimatrix& g, int m2, int n2) {
  if (m2 < 1 || m2 > g.rows() || n2 < 1 || n2 > g.cols()) {
    throw std::invalid_argument("subgame size out of range");
  }
  Subgame s{full_set(kRow, g.rows()).members, full_set(kColumn, g.cols()).members, g};
  auto trace = iterate(g);
  if (!trace.solvable) throw std::invalid_argument("game is not dominance solvable");
  auto shrink = [&](int player, std::vector<int>& kept) {
    for (const auto& round : trace.rounds) {
      for (const Removal& rm : round) {
        if (rm.player != player) continue;
        kept.erase(kept.begin() + rm.removed.front());
        s.game = restrict_game(g, s.rows, s.cols);
        trace = iterate(s.game);
        return;
      }
    }
    throw std::logic_error("solvable game with no deletion for a player");
  };
  while (static_cast<int>(s.rows.size()) > m2) shrink(kRow, s.rows);
  while (static_cast<int>(s.cols.size()) > n2) shrink(kColumn, s.cols);
  return s;
}

// N-player elimination with the same simultaneous-round semantics.
inline EliminationTrace iterate_nplayer(const OrdinalTensorGame& g) {
  const int players = g.players();
  std::vector<std::vector<int>> alive(players);
  for (int k = 0; k < players; ++k) alive[k] = full_set(k, g.dims()[k]).members;
  EliminationTrace t;
  std::vector<std::vector<int>> dominated(players);
  std::vector<std::size_t> offsets;
  bool first = true;
  for (;;) {
    bool any = false;
    for (int k = 0; k < players; ++k) {
      // Offsets of every surviving opponent profile, lexicographic.
      offsets.assign(1, 0);
      for (int i = 0; i < players; ++i) {
        if (i == k) continue;
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * alive[i].size());
        for (std::size_t base : offsets) {
          for (int a : alive[i]) next.push_back(base + a * g.stride(i));
        }
        offsets.swap(next);
      }
      const auto ranks = g.ranks(k);
      const std::size_t sk = g.stride(k);
      dominated[k].clear();
      if (alive[k].size() > 1) {
        for (int b : alive[k]) {
          for (int a : alive[k]) {
            if (a == b) continue;
            bool dom = true;
            for (std::size_t off : offsets) {
              if (ranks[a * sk + off] <= ranks[b * sk + off]) {
                dom = false;
                break;
              }
            }
            if (dom) {
              dominated[k].push_back(b);
              break;
            }
          }
        }
      }
      any = any || !dominated[k].empty();
    }
    if (first) {
      for (int k = 0; k < players; ++k) {
        t.undominated_counts.push_back(
            static_cast<int>(alive[k].size() - dominated[k].size()));
      }
      first = false;
    }
    if (!any) break;
    ++t.iterations;
    auto& round = t.rounds.emplace_back();
    for (int k = 0; k < players; ++k) {
      if (dominated[k].empty()) continue;
      round.push_back({k, dominated[k]});
      std::vector<int> kept;
      std::set_difference(alive[k].begin(), alive[k].end(), dominated[k].begin(),
                          dominated[k].end(), std::back_inserter(kept));
      alive[k].swap(kept);
    }
  }
  t.solvable = true;
  for (int k = 0; k < players; ++k) {
    t.solvable = t.solvable && alive[k].size() == 1;
    t.surviving.push_back(ActionSet{k, alive[k]});
  }
  return t;
}

}  // namespace domsolve

#endif  // DOMSOLVE_ELIMINATION_HPP_
