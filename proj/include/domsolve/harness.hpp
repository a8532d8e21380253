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

// Seeded Monte Carlo experiments over random games.
//
// Sample k is generated from derive(seed, k) alone, and every statistic is
// tallied as exact integer counts, so results do not depend on the thread
// count or on how samples were scheduled.

#ifndef DOMSOLVE_HARNESS_HPP_
#define DOMSOLVE_HARNESS_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domsolve/elimination.hpp"
#include "domsolve/formulas.hpp"
#include "domsolve/game.hpp"
#include "domsolve/parallel.hpp"
#include "domsolve/random.hpp"
#include "domsolve/rationalizability.hpp"
#include "domsolve/stats.hpp"

namespace domsolve {

enum class Metric {
  kPi,                   // Pr(dominance solvable)
  kCondIterations,       // E[I | solvable]
  kSurvivorDist,         // distribution of S for the chosen player
  kSurvivorMean,         // E[S]
  kUndominatedMean,      // E[U]
  kUndominatedDist,      // distribution of U
  kPureNashDist,         // distribution of the number of pure Nash cells
  kMixedPi,              // Pr(unique rationalizable profile)
  kMixedCondIterations,  // E[mixed rounds | unique rationalizable profile]
  kRationalizableMean,   // E[# rationalizable actions]
  kPointRatUnique,       // Pr(unique point-rationalizable profile)
  kPointRatMean,         // E[# point-rationalizable actions]
};

inline constexpr Metric kAllMetrics[] = {
    Metric::kPi,           Metric::kCondIterations,      Metric::kSurvivorDist,
    Metric::kSurvivorMean, Metric::kUndominatedMean,     Metric::kUndominatedDist,
    Metric::kPureNashDist, Metric::kMixedPi,             Metric::kMixedCondIterations,
    Metric::kRationalizableMean, Metric::kPointRatUnique, Metric::kPointRatMean,
};

inline std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::kPi: return "pi";
    case Metric::kCondIterations: return "cond-iterations";
    case Metric::kSurvivorDist: return "survivor-dist";
    case Metric::kSurvivorMean: return "survivor-mean";
    case Metric::kUndominatedMean: return "undominated-mean";
    case Metric::kUndominatedDist: return "undominated-dist";
    case Metric::kPureNashDist: return "pure-nash-dist";
    case Metric::kMixedPi: return "mixed-pi";
    case Metric::kMixedCondIterations: return "mixed-cond-iterations";
    case Metric::kRationalizableMean: return "rationalizable-mean";
    case Metric::kPointRatUnique: return "point-rat-unique";
    case Metric::kPointRatMean: return "point-rat-mean";
  }
  return "?";
}

inline Metric parse_metric(std::string_view s) {
  for (Metric m : kAllMetrics) {
    if (s == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown metric '" + std::string(s) + "'");
}

inline bool is_mixed(Metric m) {
  return m == Metric::kMixedPi || m == Metric::kMixedCondIterations ||
         m == Metric::kRationalizableMean;
}

inline bool is_histogram(Metric m) {
  return m == Metric::kSurvivorDist || m == Metric::kUndominatedDist ||
         m == Metric::kPureNashDist;
}

inline bool is_conditional(Metric m) {
  return m == Metric::kCondIterations || m == Metric::kMixedCondIterations;
}

struct GameSource {
  GameClass game_class = GameClass::kBaseline;
  int m = 2;
  int n = 2;
  std::vector<int> dims;                    // nonempty: N-player ordinal game
  std::optional<Distribution> distribution;
  std::optional<double> crra_alpha;

  bool nplayer() const { return !dims.empty(); }
  // Baseline games without a payoff distribution or transform are drawn
  // directly as ranks.
  bool ordinal_only() const {
    return !nplayer() && game_class == GameClass::kBaseline && !distribution && !crra_alpha;
  }
  int players() const { return nplayer() ? static_cast<int>(dims.size()) : 2; }
  int action_count(int player) const {
    return nplayer() ? dims[player] : (player == kRow ? m : n);
  }
};

struct ExperimentSpec {
  Metric metric = Metric::kPi;
  GameSource source;
  std::uint64_t samples = 1000000;
  Seed seed;
  int player = kColumn;  // for per-player metrics
  int threads = 0;       // 0: one per hardware thread
};

enum class RunStatus { kOk, kNoConditioningEvents };

struct HistogramBin {
  int value = 0;
  Estimate frequency;
};

struct RunResult {
  RunStatus status = RunStatus::kOk;
  Estimate estimate;                   // for histograms, the mean of the variable
  std::vector<HistogramBin> histogram;  // histogram metrics only
};

// Raw integer tallies from one simulation pass.
struct Tally {
  std::uint64_t samples = 0;
  std::uint64_t solvable = 0;
  std::uint64_t iter_sum = 0, iter_sq = 0;  // over solvable draws
  std::vector<std::vector<std::uint64_t>> surviving, undominated;  // [player][k]
  std::vector<std::vector<std::uint64_t>> point, rationalizable;   // [player][k]
  std::vector<std::uint64_t> nash;
  std::uint64_t point_unique = 0;
  std::uint64_t mixed_solvable = 0;
  std::uint64_t mixed_iter_sum = 0, mixed_iter_sq = 0;

  void shape(const GameSource& src, bool with_point, bool with_mixed) {
    const int players = src.players();
    surviving.resize(players);
    undominated.resize(players);
    for (int p = 0; p < players; ++p) {
      surviving[p].assign(src.action_count(p) + 1, 0);
      undominated[p].assign(src.action_count(p) + 1, 0);
    }
    if (!src.nplayer()) nash.assign(std::min(src.m, src.n) + 1, 0);
    if (with_point || with_mixed) {
      point.resize(2);
      for (int p = 0; p < 2; ++p) point[p].assign(src.action_count(p) + 1, 0);
    }
    if (with_mixed) {
      rationalizable.resize(2);
      for (int p = 0; p < 2; ++p) rationalizable[p].assign(src.action_count(p) + 1, 0);
    }
  }

  void merge(const Tally& o) {
    samples += o.samples;
    solvable += o.solvable;
    iter_sum += o.iter_sum;
    iter_sq += o.iter_sq;
    auto add = [](std::vector<std::vector<std::uint64_t>>& a,
                  const std::vector<std::vector<std::uint64_t>>& b) {
      for (std::size_t p = 0; p < a.size(); ++p) {
        for (std::size_t k = 0; k < a[p].size(); ++k) a[p][k] += b[p][k];
      }
    };
    add(surviving, o.surviving);
    add(undominated, o.undominated);
    add(point, o.point);
    add(rationalizable, o.rationalizable);
    for (std::size_t k = 0; k < nash.size(); ++k) nash[k] += o.nash[k];
    point_unique += o.point_unique;
    mixed_solvable += o.mixed_solvable;
    mixed_iter_sum += o.mixed_iter_sum;
    mixed_iter_sq += o.mixed_iter_sq;
  }
};

inline void validate(const GameSource& src) {
  if (src.nplayer()) {
    if (src.dims.size() < 2) throw std::invalid_argument("need at least two players");
    for (int d : src.dims) {
      if (d < 1) throw std::invalid_argument("action counts must be positive");
    }
    if (src.game_class != GameClass::kBaseline || src.distribution || src.crra_alpha) {
      throw std::invalid_argument("N-player games are baseline ordinal games only");
    }
    return;
  }
  detail::check_dims(src.m, src.n);
  if (requires_square(src.game_class) && src.m != src.n) {
    throw std::invalid_argument(std::string(to_string(src.game_class)) +
                                " games must be square");
  }
  if (src.crra_alpha && !(*src.crra_alpha > 0.0 && *src.crra_alpha <= 1.0)) {
    throw std::invalid_argument("CRRA alpha must lie in (0, 1]");
  }
  if (src.crra_alpha && src.distribution == Distribution::kStdNormal) {
    throw std::invalid_argument("the CRRA transform needs nonnegative (uniform) payoffs");
  }
}

inline constexpr std::uint64_t kChunkSamples = 1024;

// One pass over `samples` draws. Point-rationalizability and the mixed
// dominance LPs are evaluated only when asked for.
inline Tally simulate(const GameSource& src, std::uint64_t samples, Seed seed, int threads,
                      bool with_point = false, bool with_mixed = false) {
  validate(src);
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if ((with_point || with_mixed) && src.nplayer()) {
    throw std::invalid_argument("rationalizability metrics need a two-player game");
  }
  const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
  const std::size_t workers = worker_count(chunks, threads);
  std::vector<Tally> parts(workers);
  for (Tally& t : parts) t.shape(src, with_point, with_mixed);

  parallel_chunks(chunks, threads, [&](std::size_t chunk, std::size_t worker) {
    Tally& t = parts[worker];
    Eliminator elim;
    std::vector<int> row, col, scratch;
    const std::uint64_t begin = chunk * kChunkSamples;
    const std::uint64_t end = std::min(samples, begin + kChunkSamples);
    for (std::uint64_t k = begin; k < end; ++k) {
      const Seed s = derive(seed, k);
      ++t.samples;
      if (src.nplayer()) {
        const auto trace = iterate_nplayer(sample_nplayer(src.dims, s));
        for (int p = 0; p < src.players(); ++p) {
          ++t.surviving[p][trace.surviving[p].size()];
          ++t.undominated[p][trace.undominated_counts[p]];
        }
        if (trace.solvable) {
          ++t.solvable;
          t.iter_sum += trace.iterations;
          t.iter_sq += static_cast<std::uint64_t>(trace.iterations) * trace.iterations;
        }
        continue;
      }
      std::optional<CardinalBimatrix> cardinal;
      std::optional<OrdinalBimatrix> ordinal;
      BimatrixView view;
      if (src.ordinal_only() && !with_mixed) {
        Rng rng(s);
        detail::fill_baseline(src.m, src.n, rng, row, col, scratch);
        view = BimatrixView{src.m, src.n, row.data(), col.data()};
      } else {
        cardinal = sample_class(src.game_class, src.m, src.n, s,
                                src.distribution.value_or(Distribution::kUniform01));
        if (src.crra_alpha) cardinal = apply_crra(*cardinal, *src.crra_alpha);
        ordinal = ordinalize(*cardinal);
        view = ordinal->view();
      }
      const auto sum = elim.run(view);
      for (int p = 0; p < 2; ++p) {
        ++t.surviving[p][sum.surviving[p]];
        ++t.undominated[p][sum.undominated[p]];
      }
      ++t.nash[count_pure_nash(view)];
      if (sum.solvable) {
        ++t.solvable;
        t.iter_sum += sum.iterations;
        t.iter_sq += static_cast<std::uint64_t>(sum.iterations) * sum.iterations;
      }
      if (with_mixed) {
        const auto report = rationalizable_sets(*cardinal);
        for (int p = 0; p < 2; ++p) {
          ++t.rationalizable[p][report.rationalizable[p].size()];
          ++t.point[p][report.point_rationalizable[p].size()];
        }
        t.point_unique += report.point_rationalizable[0].size() == 1 &&
                          report.point_rationalizable[1].size() == 1;
        if (report.mixed_solvable) {
          ++t.mixed_solvable;
          t.mixed_iter_sum += report.mixed_iterations;
          t.mixed_iter_sq +=
              static_cast<std::uint64_t>(report.mixed_iterations) * report.mixed_iterations;
        }
      } else if (with_point) {
        const auto sets = point_rationalizable_sets(view);
        for (int p = 0; p < 2; ++p) ++t.point[p][sets[p].size()];
        t.point_unique += sets[0].size() == 1 && sets[1].size() == 1;
      }
    }
  });

  Tally total = std::move(parts[0]);
  for (std::size_t w = 1; w < parts.size(); ++w) total.merge(parts[w]);
  return total;
}

namespace detail {

inline RunResult histogram_result(const std::vector<std::uint64_t>& hist, std::uint64_t n,
                                  int first_value) {
  RunResult r;
  r.estimate = histogram_mean(hist);
  for (std::size_t k = first_value; k < hist.size(); ++k) {
    r.histogram.push_back({static_cast<int>(k), bernoulli_estimate(hist[k], n)});
  }
  return r;
}

inline RunResult conditional_result(std::uint64_t sum, std::uint64_t sq, std::uint64_t events) {
  RunResult r;
  r.estimate = mean_estimate(sum, sq, events);
  r.estimate.conditioning_count = events;
  if (events == 0) r.status = RunStatus::kNoConditioningEvents;
  return r;
}

}  // namespace detail

inline RunResult run(const ExperimentSpec& spec) {
  const GameSource& src = spec.source;
  validate(src);
  if (spec.player < 0 || spec.player >= src.players()) {
    throw std::invalid_argument("player index out of range");
  }
  const Metric m = spec.metric;
  const bool two_player_only = is_mixed(m) || m == Metric::kPureNashDist ||
                               m == Metric::kPointRatUnique || m == Metric::kPointRatMean;
  if (two_player_only && src.nplayer()) {
    throw std::invalid_argument(std::string(to_string(m)) + " needs a two-player game");
  }
  const bool with_point = m == Metric::kPointRatUnique || m == Metric::kPointRatMean;
  const Tally t = simulate(src, spec.samples, spec.seed, spec.threads, with_point, is_mixed(m));
  const std::uint64_t n = t.samples;
  const int p = spec.player;
  RunResult r;
  switch (m) {
    case Metric::kPi:
      r.estimate = bernoulli_estimate(t.solvable, n);
      break;
    case Metric::kCondIterations:
      r = detail::conditional_result(t.iter_sum, t.iter_sq, t.solvable);
      break;
    case Metric::kSurvivorDist:
      r = detail::histogram_result(t.surviving[p], n, 1);
      break;
    case Metric::kSurvivorMean:
      r.estimate = histogram_mean(t.surviving[p]);
      break;
    case Metric::kUndominatedMean:
      r.estimate = histogram_mean(t.undominated[p]);
      break;
    case Metric::kUndominatedDist:
      r = detail::histogram_result(t.undominated[p], n, 1);
      break;
    case Metric::kPureNashDist:
      r = detail::histogram_result(t.nash, n, 0);
      break;
    case Metric::kMixedPi:
      r.estimate = bernoulli_estimate(t.mixed_solvable, n);
      break;
    case Metric::kMixedCondIterations:
      r = detail::conditional_result(t.mixed_iter_sum, t.mixed_iter_sq, t.mixed_solvable);
      break;
    case Metric::kRationalizableMean:
      r.estimate = histogram_mean(t.rationalizable[p]);
      break;
    case Metric::kPointRatUnique:
      r.estimate = bernoulli_estimate(t.point_unique, n);
      break;
    case Metric::kPointRatMean:
      r.estimate = histogram_mean(t.point[p]);
      break;
  }
  return r;
}

struct ResultRow {
  ExperimentSpec spec;
  RunResult result;
};

// One run per grid point, each with the same seed.
inline std::vector<ResultRow> sweep(Metric metric, const std::vector<GameSource>& grid,
                                    std::uint64_t samples, Seed seed, int threads = 0,
                                    int player = kColumn) {
  std::vector<ResultRow> rows;
  for (const GameSource& src : grid) {
    ExperimentSpec spec{metric, src, samples, seed, player, threads};
    rows.push_back({spec, run(spec)});
  }
  return rows;
}

struct CltReport {
  long n = 0;
  std::uint64_t samples = 0;
  double exact_mean = 0, exact_variance = 0;
  bool exact_is_approximate = false;
  Moments sample;
  double mean_se = 0;
  double ks_distance = 0;             // plain KS distance to Phi
  double ks_distance_continuity = 0;  // with the half-integer shift
};

// Survivor count S^C of 2 x n baseline games, standardized by its exact
// mean and variance and compared with the standard normal.
inline CltReport clt_check(long n, std::uint64_t samples, Seed seed, int threads = 0) {
  if (n < 100) throw std::invalid_argument("clt_check needs n >= 100");
  GameSource src;
  src.m = 2;
  src.n = static_cast<int>(n);
  const Tally t = simulate(src, samples, seed, threads);
  const auto& hist = t.surviving[kColumn];
  CltReport r;
  r.n = n;
  r.samples = t.samples;
  const Number mean = mean_S_C_number(n), var = var_S_C_number(n);
  r.exact_mean = mean.value;
  r.exact_variance = var.value;
  r.exact_is_approximate = mean.approximate() || var.approximate();
  r.sample = histogram_moments(hist, 0);
  r.mean_se = std::sqrt(r.sample.variance / static_cast<double>(t.samples));
  const double sigma = std::sqrt(r.exact_variance);
  r.ks_distance = ks_distance_normal(hist, 0, r.exact_mean, sigma);
  r.ks_distance_continuity = ks_distance_continuity(hist, 0, r.exact_mean, sigma);
  return r;
}

struct BoundRow {
  int m = 0;
  int n = 0;
  Estimate pi;
  double pi_lower = 0;
  bool pi_ok = false;       // pi >= lower - 3 se
  Estimate sr_less;         // Pr(S^R < m)
  double sr_bound = 0;
  bool sr_ok = false;       // Pr(S^R < m) <= bound + 3 se
};

inline std::vector<BoundRow> bound_checks(const std::vector<std::pair<int, int>>& grid,
                                          std::uint64_t samples, Seed seed, int threads = 0) {
  std::vector<BoundRow> rows;
  for (const auto& [m, n] : grid) {
    GameSource src;
    src.m = m;
    src.n = n;
    const Tally t = simulate(src, samples, seed, threads);
    BoundRow b;
    b.m = m;
    b.n = n;
    b.pi = bernoulli_estimate(t.solvable, t.samples);
    b.pi_lower = pi_lower_bound(m, n);
    b.pi_ok = b.pi.mean >= b.pi_lower - 3 * b.pi.se;
    b.sr_less = bernoulli_estimate(t.samples - t.surviving[kRow][m], t.samples);
    b.sr_bound = bound_SR_less(m, n);
    b.sr_ok = b.sr_less.mean <= b.sr_bound + 3 * b.sr_less.se;
    rows.push_back(b);
  }
  return rows;
}

struct TrendPoint {
  int m = 0;
  int n = 0;
  Estimate sr_less;
};

// Pr(S^R < m) along m = ceil(log2 n) + c as n grows.
inline std::vector<TrendPoint> sr_less_trend(int c, const std::vector<int>& ns,
                                             std::uint64_t samples, Seed seed, int threads = 0) {
  std::vector<TrendPoint> out;
  for (int n : ns) {
    GameSource src;
    src.n = n;
    src.m = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + c;
    if (src.m < 1) throw std::invalid_argument("trend offset leaves m < 1");
    const Tally t = simulate(src, samples, seed, threads);
    out.push_back({src.m, n, bernoulli_estimate(t.samples - t.surviving[kRow][src.m],
                                                t.samples)});
  }
  return out;
}

}  // namespace domsolve

#endif  // DOMSOLVE_HARNESS_HPP_
