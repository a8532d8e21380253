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

// Game representations and random game generators.
//
// Actions are 0-based. Ranks are 1-based with larger = better, so a player's
// ranks against a fixed opponent action form a permutation of 1..k.

#ifndef DOMSOLVE_GAME_HPP_
#define DOMSOLVE_GAME_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domsolve/random.hpp"

namespace domsolve {

enum Player : int { kRow = 0, kColumn = 1 };

enum class GameClass {
  kBaseline,
  kSymmetric,
  kPotential,
  kConstantSum,
  kStratComplements,
  kStratComplementsSym,
};

enum class Distribution { kUniform01, kStdNormal };

inline std::string_view to_string(GameClass c) {
  switch (c) {
    case GameClass::kBaseline: return "baseline";
    case GameClass::kSymmetric: return "symmetric";
    case GameClass::kPotential: return "potential";
    case GameClass::kConstantSum: return "constant-sum";
    case GameClass::kStratComplements: return "strat-complements";
    case GameClass::kStratComplementsSym: return "strat-complements-sym";
  }
  return "?";
}

inline GameClass parse_game_class(std::string_view s) {
  for (GameClass c : {GameClass::kBaseline, GameClass::kSymmetric,
                      GameClass::kPotential, GameClass::kConstantSum,
                      GameClass::kStratComplements,
                      GameClass::kStratComplementsSym}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown game class '" + std::string(s) + "'");
}

inline bool requires_square(GameClass c) {
  return c == GameClass::kSymmetric || c == GameClass::kStratComplementsSym;
}

inline std::string_view to_string(Distribution d) {
  return d == Distribution::kUniform01 ? "uniform" : "normal";
}

inline Distribution parse_distribution(std::string_view s) {
  if (s == "uniform") return Distribution::kUniform01;
  if (s == "normal") return Distribution::kStdNormal;
  throw std::invalid_argument("unknown distribution '" + std::string(s) + "'");
}

namespace detail {

inline void check_dims(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("game dimensions must be positive, got " +
                                std::to_string(m) + "x" + std::to_string(n));
  }
}

// True iff the k values at base, base+stride, ... are a permutation of 1..k.
// `seen` is scratch of size >= k + 1.
inline bool is_rank_permutation(const int* base, std::size_t stride, int k,
                                std::vector<char>& seen) {
  std::fill(seen.begin(), seen.begin() + k + 1, 0);
  for (int i = 0; i < k; ++i) {
    const int r = base[i * stride];
    if (r < 1 || r > k || seen[r]) return false;
    seen[r] = 1;
  }
  return true;
}

}  // namespace detail

// Non-owning view of an ordinal bimatrix; what the elimination engine reads.
struct BimatrixView {
  int m = 0;
  int n = 0;
  const int* row_ranks = nullptr;  // m x n, row-major
  const int* col_ranks = nullptr;  // m x n, row-major

  int action_count(int player) const { return player == kRow ? m : n; }
  int rank(int player, int own, int opp) const {
    return player == kRow ? row_ranks[own * n + opp] : col_ranks[opp * n + own];
  }
};

class OrdinalBimatrix {
 public:
  // Ranks are row-major m x n. Throws std::invalid_argument if a column of
  // row_ranks or a row of col_ranks is not a permutation.
  OrdinalBimatrix(int m, int n, std::vector<int> row_ranks,
                  std::vector<int> col_ranks)
      : m_(m), n_(n), row_(std::move(row_ranks)), col_(std::move(col_ranks)) {
    detail::check_dims(m, n);
    const auto cells = static_cast<std::size_t>(m) * n;
    if (row_.size() != cells || col_.size() != cells) {
      throw std::invalid_argument("rank matrices must have m*n entries");
    }
    std::vector<char> seen(std::max(m, n) + 1);
    for (int j = 0; j < n; ++j) {
      if (!detail::is_rank_permutation(&row_[j], n, m, seen)) {
        throw std::invalid_argument("Row ranks in column " + std::to_string(j) +
                                    " are not a permutation of 1..m");
      }
    }
    for (int i = 0; i < m; ++i) {
      if (!detail::is_rank_permutation(&col_[i * n], 1, n, seen)) {
        throw std::invalid_argument("Column ranks in row " + std::to_string(i) +
                                    " are not a permutation of 1..n");
      }
    }
  }

  static OrdinalBimatrix from_rows(const std::vector<std::vector<int>>& row_ranks,
                                   const std::vector<std::vector<int>>& col_ranks) {
    const int m = static_cast<int>(row_ranks.size());
    const int n = m > 0 ? static_cast<int>(row_ranks[0].size()) : 0;
    if (col_ranks.size() != row_ranks.size()) {
      throw std::invalid_argument("rank matrices differ in shape");
    }
    std::vector<int> r, c;
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(row_ranks[i].size()) != n ||
          static_cast<int>(col_ranks[i].size()) != n) {
        throw std::invalid_argument("ragged rank matrix");
      }
      r.insert(r.end(), row_ranks[i].begin(), row_ranks[i].end());
      c.insert(c.end(), col_ranks[i].begin(), col_ranks[i].end());
    }
    return OrdinalBimatrix(m, n, std::move(r), std::move(c));
  }

  int rows() const { return m_; }
  int cols() const { return n_; }
  int action_count(int player) const { return player == kRow ? m_ : n_; }
  int row_rank(int i, int j) const { return row_[i * n_ + j]; }
  int col_rank(int i, int j) const { return col_[i * n_ + j]; }
  // Rank that `player` gives its action `own` when the opponent plays `opp`.
  int rank(int player, int own, int opp) const { return view().rank(player, own, opp); }
  std::span<const int> row_ranks() const { return row_; }
  std::span<const int> col_ranks() const { return col_; }
  BimatrixView view() const { return {m_, n_, row_.data(), col_.data()}; }

  friend bool operator==(const OrdinalBimatrix&, const OrdinalBimatrix&) = default;

 private:
  int m_;
  int n_;
  std::vector<int> row_;
  std::vector<int> col_;
};

class CardinalBimatrix {
 public:
  // Payoffs are row-major m x n. Entries must be finite, distinct within each
  // column of u_row and within each row of u_col.
  CardinalBimatrix(int m, int n, std::vector<double> u_row, std::vector<double> u_col)
      : m_(m), n_(n), row_(std::move(u_row)), col_(std::move(u_col)) {
    detail::check_dims(m, n);
    const auto cells = static_cast<std::size_t>(m) * n;
    if (row_.size() != cells || col_.size() != cells) {
      throw std::invalid_argument("payoff matrices must have m*n entries");
    }
    for (std::size_t k = 0; k < cells; ++k) {
      if (!std::isfinite(row_[k]) || !std::isfinite(col_[k])) {
        throw std::invalid_argument("payoffs must be finite");
      }
    }
    std::vector<double> buf;
    for (int j = 0; j < n; ++j) {
      buf.clear();
      for (int i = 0; i < m; ++i) buf.push_back(row_[i * n + j]);
      if (has_tie(buf)) {
        throw std::invalid_argument("tie in Row payoffs, column " + std::to_string(j));
      }
    }
    for (int i = 0; i < m; ++i) {
      buf.assign(col_.begin() + i * n, col_.begin() + (i + 1) * n);
      if (has_tie(buf)) {
        throw std::invalid_argument("tie in Column payoffs, row " + std::to_string(i));
      }
    }
  }

  static CardinalBimatrix from_rows(const std::vector<std::vector<double>>& u_row,
                                    const std::vector<std::vector<double>>& u_col) {
    const int m = static_cast<int>(u_row.size());
    const int n = m > 0 ? static_cast<int>(u_row[0].size()) : 0;
    if (u_col.size() != u_row.size()) {
      throw std::invalid_argument("payoff matrices differ in shape");
    }
    std::vector<double> r, c;
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(u_row[i].size()) != n ||
          static_cast<int>(u_col[i].size()) != n) {
        throw std::invalid_argument("ragged payoff matrix");
      }
      r.insert(r.end(), u_row[i].begin(), u_row[i].end());
      c.insert(c.end(), u_col[i].begin(), u_col[i].end());
    }
    return CardinalBimatrix(m, n, std::move(r), std::move(c));
  }

  int rows() const { return m_; }
  int cols() const { return n_; }
  int action_count(int player) const { return player == kRow ? m_ : n_; }
  double u_row(int i, int j) const { return row_[i * n_ + j]; }
  double u_col(int i, int j) const { return col_[i * n_ + j]; }
  double payoff(int player, int own, int opp) const {
    return player == kRow ? row_[own * n_ + opp] : col_[opp * n_ + own];
  }
  std::span<const double> row_payoffs() const { return row_; }
  std::span<const double> col_payoffs() const { return col_; }

  friend bool operator==(const CardinalBimatrix&, const CardinalBimatrix&) = default;

 private:
  static bool has_tie(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
  }

  int m_;
  int n_;
  std::vector<double> row_;
  std::vector<double> col_;
};

// N-player ordinal game. Profiles are flattened in mixed radix with player 0
// most significant, so iterating profile indices is lexicographic.
class OrdinalTensorGame {
 public:
  OrdinalTensorGame(std::vector<int> dims, std::vector<std::vector<int>> ranks)
      : dims_(std::move(dims)), ranks_(std::move(ranks)) {
    if (dims_.size() < 2) throw std::invalid_argument("need at least two players");
    for (int d : dims_) {
      if (d < 1) throw std::invalid_argument("action counts must be positive");
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t k = dims_.size() - 1; k > 0; --k) {
      strides_[k - 1] = strides_[k] * static_cast<std::size_t>(dims_[k]);
    }
    profiles_ = strides_[0] * static_cast<std::size_t>(dims_[0]);
    if (ranks_.size() != dims_.size()) {
      throw std::invalid_argument("need one rank tensor per player");
    }
    std::vector<char> seen(*std::max_element(dims_.begin(), dims_.end()) + 1);
    for (int k = 0; k < players(); ++k) {
      if (ranks_[k].size() != profiles_) {
        throw std::invalid_argument("rank tensor has the wrong size");
      }
      for (std::size_t p = 0; p < profiles_; ++p) {
        if (action_of(k, p) != 0) continue;
        if (!detail::is_rank_permutation(&ranks_[k][p], strides_[k], dims_[k], seen)) {
          throw std::invalid_argument("player " + std::to_string(k) +
                                      " ranks are not a permutation at some profile");
        }
      }
    }
  }

  int players() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t profile_count() const { return profiles_; }
  std::size_t stride(int k) const { return strides_[k]; }
  int action_of(int k, std::size_t profile) const {
    return static_cast<int>((profile / strides_[k]) % dims_[k]);
  }
  int rank(int k, std::size_t profile) const { return ranks_[k][profile]; }
  std::span<const int> ranks(int k) const { return ranks_[k]; }

  friend bool operator==(const OrdinalTensorGame&, const OrdinalTensorGame&) = default;

 private:
  std::vector<int> dims_;
  std::vector<std::vector<int>> ranks_;
  std::vector<std::size_t> strides_;
  std::size_t profiles_ = 0;
};

namespace detail {

// Baseline ordinal draw into caller-owned buffers: first a permutation of
// 1..m down each column (Row), then a permutation of 1..n along each row
// (Column). `scratch` is resized as needed.
inline void fill_baseline(int m, int n, Rng& rng, std::vector<int>& row,
                          std::vector<int>& col, std::vector<int>& scratch) {
  const auto cells = static_cast<std::size_t>(m) * n;
  row.resize(cells);
  col.resize(cells);
  scratch.resize(m);
  for (int j = 0; j < n; ++j) {
    std::iota(scratch.begin(), scratch.end(), 1);
    rng.shuffle(std::span<int>(scratch));
    for (int i = 0; i < m; ++i) row[i * n + j] = scratch[i];
  }
  for (int i = 0; i < m; ++i) {
    int* r = col.data() + static_cast<std::size_t>(i) * n;
    std::iota(r, r + n, 1);
    rng.shuffle(std::span<int>(r, n));
  }
}

inline double draw(Distribution d, Rng& rng) {
  return d == Distribution::kUniform01 ? rng.uniform01() : rng.normal();
}

// i.i.d. draws, with any repeated value redrawn until all are distinct.
inline std::vector<double> draw_distinct(std::size_t count, Distribution d, Rng& rng) {
  std::vector<double> v(count);
  for (double& x : v) x = draw(d, rng);
  std::vector<std::size_t> order(count);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return v[a] < v[b] || (v[a] == v[b] && a < b);
    });
    bool clean = true;
    for (std::size_t k = 1; k < count; ++k) {
      if (v[order[k]] == v[order[k - 1]]) {
        v[order[k]] = draw(d, rng);
        clean = false;
      }
    }
    if (clean) return v;
  }
}

inline std::vector<int> nondecreasing_map(int m, int n, Rng& rng) {
  // Stars and bars: a uniform n-subset p_0 < ... < p_{n-1} of {0..m+n-2}
  // gives b(j) = p_j - j.
  std::vector<int> pool(m + n - 1);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < n; ++i) {
    const auto j = i + static_cast<int>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::sort(pool.begin(), pool.begin() + n);
  std::vector<int> b(n);
  for (int j = 0; j < n; ++j) b[j] = pool[j] - j;
  return b;
}

inline std::vector<double> transpose(const std::vector<double>& a, int m, int n) {
  std::vector<double> t(a.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[j * m + i] = a[i * n + j];
  }
  return t;
}

}  // namespace detail

inline OrdinalBimatrix sample_baseline(int m, int n, Seed seed) {
  detail::check_dims(m, n);
  Rng rng(seed);
  std::vector<int> row, col, scratch;
  detail::fill_baseline(m, n, rng, row, col, scratch);
  return OrdinalBimatrix(m, n, std::move(row), std::move(col));
}

inline CardinalBimatrix sample_cardinal(int m, int n, Distribution dist, Seed seed) {
  detail::check_dims(m, n);
  Rng rng(seed);
  const auto cells = static_cast<std::size_t>(m) * n;
  auto u_row = detail::draw_distinct(cells, dist, rng);
  auto u_col = detail::draw_distinct(cells, dist, rng);
  return CardinalBimatrix(m, n, std::move(u_row), std::move(u_col));
}

// x -> x^alpha on every payoff.
inline CardinalBimatrix apply_crra(const CardinalBimatrix& g, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("CRRA alpha must lie in (0, 1]");
  }
  auto transform = [&](std::span<const double> src) {
    std::vector<double> out(src.begin(), src.end());
    for (double& x : out) {
      if (x < 0.0) throw std::domain_error("CRRA transform needs nonnegative payoffs");
      x = std::pow(x, alpha);
    }
    return out;
  };
  return CardinalBimatrix(g.rows(), g.cols(), transform(g.row_payoffs()),
                          transform(g.col_payoffs()));
}

inline OrdinalBimatrix ordinalize(const CardinalBimatrix& g) {
  const int m = g.rows(), n = g.cols();
  std::vector<int> row(static_cast<std::size_t>(m) * n), col(row.size());
  std::vector<int> idx(m);
  for (int j = 0; j < n; ++j) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return g.u_row(a, j) < g.u_row(b, j); });
    for (int r = 0; r < m; ++r) {
      if (r > 0 && g.u_row(idx[r], j) == g.u_row(idx[r - 1], j)) {
        throw std::invalid_argument("ordinalize: tie in Row payoffs");
      }
      row[idx[r] * n + j] = r + 1;
    }
  }
  idx.resize(n);
  for (int i = 0; i < m; ++i) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return g.u_col(i, a) < g.u_col(i, b); });
    for (int r = 0; r < n; ++r) {
      if (r > 0 && g.u_col(i, idx[r]) == g.u_col(i, idx[r - 1])) {
        throw std::invalid_argument("ordinalize: tie in Column payoffs");
      }
      col[i * n + idx[r]] = r + 1;
    }
  }
  return OrdinalBimatrix(m, n, std::move(row), std::move(col));
}

// Uniform nondecreasing map [n] -> [m], 0-based.
inline std::vector<int> sample_nondecreasing_br(int m, int n, Seed seed) {
  detail::check_dims(m, n);
  Rng rng(seed);
  return detail::nondecreasing_map(m, n, rng);
}

// Cardinal game from one of the structured classes. Every generated matrix
// has pairwise distinct entries, so single-matrix classes inherit a strict
// order along both rows and columns.
inline CardinalBimatrix sample_class(GameClass cls, int m, int n, Seed seed,
                                     Distribution dist = Distribution::kUniform01) {
  detail::check_dims(m, n);
  if (requires_square(cls) && m != n) {
    throw std::invalid_argument(std::string(to_string(cls)) + " games must be square");
  }
  Rng rng(seed);
  const auto cells = static_cast<std::size_t>(m) * n;
  auto r = detail::draw_distinct(cells, dist, rng);

  // Move each column's maximum onto b(j).
  auto condition_row_matrix = [&](std::vector<double>& u) {
    const auto b = detail::nondecreasing_map(m, n, rng);
    for (int j = 0; j < n; ++j) {
      int best = 0;
      for (int i = 1; i < m; ++i) {
        if (u[i * n + j] > u[best * n + j]) best = i;
      }
      std::swap(u[best * n + j], u[b[j] * n + j]);
    }
  };

  switch (cls) {
    case GameClass::kBaseline: {
      auto c = detail::draw_distinct(cells, dist, rng);
      return CardinalBimatrix(m, n, std::move(r), std::move(c));
    }
    case GameClass::kSymmetric: {
      auto c = detail::transpose(r, m, n);
      return CardinalBimatrix(m, n, std::move(r), std::move(c));
    }
    case GameClass::kPotential: {
      auto c = r;
      return CardinalBimatrix(m, n, std::move(r), std::move(c));
    }
    case GameClass::kConstantSum: {
      auto c = r;
      for (double& x : c) x = 1.0 - x;
      return CardinalBimatrix(m, n, std::move(r), std::move(c));
    }
    case GameClass::kStratComplements: {
      condition_row_matrix(r);
      auto c = detail::draw_distinct(cells, dist, rng);
      const auto d = detail::nondecreasing_map(n, m, rng);
      for (int i = 0; i < m; ++i) {
        double* row = c.data() + static_cast<std::size_t>(i) * n;
        std::swap(*std::max_element(row, row + n), row[d[i]]);
      }
      return CardinalBimatrix(m, n, std::move(r), std::move(c));
    }
    case GameClass::kStratComplementsSym: {
      condition_row_matrix(r);
      auto c = detail::transpose(r, m, n);
      return CardinalBimatrix(m, n, std::move(r), std::move(c));
    }
  }
  throw std::invalid_argument("unhandled game class");
}

inline OrdinalTensorGame sample_nplayer(const std::vector<int>& dims, Seed seed) {
  if (dims.size() < 2) throw std::invalid_argument("need at least two players");
  std::size_t profiles = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("action counts must be positive");
    profiles *= static_cast<std::size_t>(d);
  }
  Rng rng(seed);
  const int players = static_cast<int>(dims.size());
  std::vector<std::size_t> strides(players, 1);
  for (int k = players - 1; k > 0; --k) strides[k - 1] = strides[k] * dims[k];
  std::vector<std::vector<int>> ranks(players, std::vector<int>(profiles));
  std::vector<int> perm;
  for (int k = 0; k < players; ++k) {
    perm.resize(dims[k]);
    for (std::size_t p = 0; p < profiles; ++p) {
      if ((p / strides[k]) % dims[k] != 0) continue;
      std::iota(perm.begin(), perm.end(), 1);
      rng.shuffle(std::span<int>(perm));
      for (int a = 0; a < dims[k]; ++a) ranks[k][p + a * strides[k]] = perm[a];
    }
  }
  return OrdinalTensorGame(dims, std::move(ranks));
}

}  // namespace domsolve

#endif  // DOMSOLVE_GAME_HPP_
