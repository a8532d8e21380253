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

#ifndef DOMSOLVE_STATS_HPP_
#define DOMSOLVE_STATS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

namespace domsolve {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// Point estimate with standard error.
struct Estimate {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double se = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t samples_used = 0;
  std::uint64_t conditioning_count = 0;  // conditional metrics only
};

inline Estimate bernoulli_estimate(std::uint64_t hits, std::uint64_t n) {
  Estimate e;
  e.samples_used = n;
  if (n == 0) return e;
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  e.mean = p;
  e.se = std::sqrt(p * (1 - p) / static_cast<double>(n));
  return e;
}

// Mean and standard error from exact integer sums; se is NaN below two samples.
inline Estimate mean_estimate(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t n) {
  Estimate e;
  e.samples_used = n;
  if (n == 0) return e;
  const double nd = static_cast<double>(n);
  e.mean = static_cast<double>(sum) / nd;
  if (n > 1) {
    const double centered =
        static_cast<double>(sum_sq) - static_cast<double>(sum) * static_cast<double>(sum) / nd;
    e.se = std::sqrt(std::max(0.0, centered / (nd - 1)) / nd);
  }
  return e;
}

// Estimate of the mean of a nonnegative integer variable from its histogram.
inline Estimate histogram_mean(const std::vector<std::uint64_t>& hist) {
  std::uint64_t n = 0, sum = 0, sum_sq = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    n += hist[k];
    sum += hist[k] * k;
    sum_sq += hist[k] * k * k;
  }
  return mean_estimate(sum, sum_sq, n);
}

// Kolmogorov-Smirnov distance sup_x |F_N(x) - Phi(x)| for an integer sample
// given as hist[k] = #{X = offset + k}, standardized by (mu, sigma). The
// supremum is attained at a jump of F_N, on one side or the other.
inline double ks_distance_normal(const std::vector<std::uint64_t>& hist, long offset,
                                 double mu, double sigma) {
  std::uint64_t n = 0;
  for (auto c : hist) n += c;
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  double d = 0.0;
  std::uint64_t below = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    if (hist[k] == 0) continue;
    const double phi = normal_cdf((static_cast<double>(offset + static_cast<long>(k)) - mu) / sigma);
    const double before = static_cast<double>(below) / static_cast<double>(n);
    below += hist[k];
    const double after = static_cast<double>(below) / static_cast<double>(n);
    d = std::max({d, std::abs(before - phi), std::abs(after - phi)});
  }
  return d;
}

// Largest gap between the empirical CDF at each support point k and
// Phi((k + 1/2 - mu) / sigma). A lattice-aware comparison, reported for
// information next to the plain KS distance.
inline double ks_distance_continuity(const std::vector<std::uint64_t>& hist, long offset,
                                     double mu, double sigma) {
  std::uint64_t n = 0;
  for (auto c : hist) n += c;
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  double d = 0.0;
  std::uint64_t below = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    below += hist[k];
    const double x = static_cast<double>(offset + static_cast<long>(k)) + 0.5;
    d = std::max(d, std::abs(static_cast<double>(below) / static_cast<double>(n) -
                             normal_cdf((x - mu) / sigma)));
  }
  return d;
}

struct Moments {
  double mean = 0, variance = 0, skewness = 0, excess_kurtosis = 0;
};

// Sample moments of an integer sample given as a histogram (variance with
// the n - 1 divisor).
inline Moments histogram_moments(const std::vector<std::uint64_t>& hist, long offset) {
  Moments mo;
  double n = 0, s1 = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    n += static_cast<double>(hist[k]);
    s1 += static_cast<double>(hist[k]) * static_cast<double>(offset + static_cast<long>(k));
  }
  if (n < 2) return mo;
  mo.mean = s1 / n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    const double x = static_cast<double>(offset + static_cast<long>(k)) - mo.mean;
    const double c = static_cast<double>(hist[k]);
    m2 += c * x * x;
    m3 += c * x * x * x;
    m4 += c * x * x * x * x;
  }
  mo.variance = m2 / (n - 1);
  const double pop = m2 / n;
  mo.skewness = pop > 0 ? (m3 / n) / std::pow(pop, 1.5) : 0.0;
  mo.excess_kurtosis = pop > 0 ? (m4 / n) / (pop * pop) - 3.0 : 0.0;
  return mo;
}

}  // namespace domsolve

#endif  // DOMSOLVE_STATS_HPP_
