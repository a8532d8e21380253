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

// Closed forms for random 2 x n games, plus bounds for m x n.
//
// Everything rational is computed exactly. Gamma ratios are rewritten with
//   sqrt(pi) * Gamma(n) / Gamma(n + 1/2) = (n - 1)! * 2^n / (2n - 1)!!
// and digamma/trigamma differences at half-integers with
//   psi(n + 1/2) - psi(1/2)   =  sum_{k<=n} 2 / (2k - 1)
//   psi'(n + 1/2) - psi'(1/2) = -sum_{k<=n} 4 / (2k - 1)^2.
// Exact arguments are capped at kExactCap; the *_number variants fall back
// to log-space doubles above the cap and say so.

#ifndef DOMSOLVE_FORMULAS_HPP_
#define DOMSOLVE_FORMULAS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domsolve/errors.hpp"
#include "domsolve/rational.hpp"

namespace domsolve {

inline constexpr int kExactCap = 4096;

namespace detail {

inline void check_exact_n(long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (n > kExactCap) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the exact cap " + std::to_string(kExactCap));
  }
}

inline void check_positive(long v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace detail

// An exact value when available, always with a double.
struct Number {
  std::optional<BigRational> exact;
  double value = 0.0;
  bool approximate() const { return !exact.has_value(); }
};

inline Number make_number(const BigRational& q) { return {q, to_double(q)}; }

struct StirlingRow {
  int n = 0;
  std::vector<BigInt> values;  // s(n, 1..n), unsigned
};

// Unsigned Stirling numbers of the first kind via
// s(n, k) = (n - 1) s(n - 1, k) + s(n - 1, k - 1).
inline StirlingRow stirling_row(int n) {
  detail::check_exact_n(n, "stirling_row");
  std::vector<BigInt> s(n + 1, 0);  // s[k] for the current row, k = 0..n
  s[0] = 1;
  for (int r = 1; r <= n; ++r) {
    for (int k = r; k >= 1; --k) s[k] = (r - 1) * s[k] + s[k - 1];
    s[0] = 0;
  }
  return {n, std::vector<BigInt>(s.begin() + 1, s.end())};
}

// W(n) = (2n - 1)!! / (2n)!!.
inline BigRational wallis_ratio(int n) {
  detail::check_exact_n(n, "wallis_ratio");
  BigRational w(odd_double_factorial(n), pow2(n) * factorial(n));
  w.canonicalize();
  return w;
}

inline BigRational pi_2n(int n) { return 2 * wallis_ratio(n); }

inline std::vector<BigRational> dist_U_C_2n(int n) {
  const auto row = stirling_row(n);
  const BigInt nf = factorial(n);
  std::vector<BigRational> d;
  for (const BigInt& s : row.values) {
    BigRational q(s, nf);
    q.canonicalize();
    d.push_back(q);
  }
  return d;
}

// Pr(I = 1), Pr(I = 2), Pr(I = 3) given solvability.
inline std::array<BigRational, 3> dist_I_2n(int n) {
  detail::check_exact_n(n, "dist_I_2n");
  BigRational p1(factorial(n - 1), odd_double_factorial(n));
  p1.canonicalize();
  const BigRational p2 = BigRational(n + pow2(n - 1) - 2) * p1;
  return {p1, p2, 1 - p1 - p2};
}

inline BigRational mean_I_2n(int n) {
  detail::check_exact_n(n, "mean_I_2n");
  BigRational t(factorial(n - 1), odd_double_factorial(n));
  t.canonicalize();
  return 3 - BigRational(n + pow2(n - 1)) * t;
}

inline std::vector<BigRational> dist_S_C_2n(int n) {
  const auto row = stirling_row(n);
  const BigInt nf = factorial(n);
  std::vector<BigRational> d{pi_2n(n)};
  for (int k = 2; k <= n; ++k) {
    BigRational q(row.values[k - 1], nf);
    q.canonicalize();
    d.push_back(q * (1 - BigRational(1, pow2(k - 1))));
  }
  return d;
}

// psi(n + 1/2) - psi(1/2).
inline BigRational digamma_half_difference(int n) {
  BigRational d = 0;
  for (int k = 1; k <= n; ++k) d += BigRational(2, 2 * k - 1);
  return d;
}

// psi'(n + 1/2) - psi'(1/2).
inline BigRational trigamma_half_difference(int n) {
  BigRational d = 0;
  for (int k = 1; k <= n; ++k) {
    const BigInt odd = 2 * k - 1;
    d -= BigRational(BigInt(4), odd * odd);
  }
  return d;
}

inline BigRational mean_S_C_2n(int n) {
  detail::check_exact_n(n, "mean_S_C_2n");
  return wallis_ratio(n) * (2 - digamma_half_difference(n)) + harmonic(n);
}

inline BigRational var_S_C_2n(int n) {
  detail::check_exact_n(n, "var_S_C_2n");
  const BigRational w = wallis_ratio(n);
  const BigRational h = harmonic(n), h2 = harmonic(n, 2);
  const BigRational d1 = digamma_half_difference(n), d2 = trigamma_half_difference(n);
  const BigRational second =
      h - h2 + w / 2 * (4 - 2 * d1 - (d1 * d1 + d2) - 8 * h + 4 * h * d1);
  const BigRational mean_shift = w * (2 - d1);
  return second - mean_shift * mean_shift;
}

namespace detail {

// Rows E(m, 1..len) of the recurrence, grown on demand under a lock.
class UndominatedMeanMemo {
 public:
  BigRational get(int m, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) < m) rows_.emplace_back();
    for (int r = 1; r <= m; ++r) {
      auto& row = rows_[r - 1];
      for (int k = static_cast<int>(row.size()) + 1; k <= n; ++k) {
        if (r == 1) {
          row.emplace_back(1);
        } else {
          const BigRational prev = k == 1 ? BigRational(0) : row[k - 2];
          row.push_back(prev + rows_[r - 2][k - 1] / k);
        }
      }
    }
    return rows_[m - 1][n - 1];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<BigRational>> rows_;
};

inline UndominatedMeanMemo& undominated_memo() {
  static UndominatedMeanMemo memo;
  return memo;
}

}  // namespace detail

// E[U^C(m, n)] from E(1, n) = 1, E(m, n) = sum_{k<=n} E(m - 1, k) / k.
inline BigRational mean_U_C_recurrence(int m, int n) {
  detail::check_exact_n(m, "mean_U_C_recurrence (m)");
  detail::check_exact_n(n, "mean_U_C_recurrence (n)");
  return detail::undominated_memo().get(m, n);
}

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

// (ln n)^{m-1} / (m-1)!  <=  E[U^C(m, n)]  <=  sum_{k<m} (ln n)^k / k!.
inline Bounds bounds_U_C(int m, int n) {
  detail::check_positive(m, "m");
  detail::check_positive(n, "n");
  const double x = std::log(static_cast<double>(n));
  double term = 1.0, sum = 0.0;
  for (int k = 0; k < m; ++k) {
    if (k > 0) term *= x / k;
    sum += term;
  }
  return {term, sum};
}

inline double union_lower_bound_U_C(int m, int n) {
  detail::check_positive(m, "m");
  detail::check_positive(n, "n");
  return std::max(0.0, 1.0 - static_cast<double>(n - 1) * std::ldexp(1.0, -m));
}

// Pr(E_j) by inclusion-exclusion over the m - 1 rows other than the first.
inline BigRational pr_Ej(int m, int j) {
  detail::check_exact_n(m, "pr_Ej (m)");
  if (m < 2) throw std::invalid_argument("pr_Ej: m must be >= 2");
  detail::check_positive(j, "j");
  BigRational sum(m - 1, j);
  sum.canonicalize();
  for (int k = 2; k <= m - 1; ++k) {
    BigRational term(binomial(m - 1, k), power(BigInt(j), k));
    term.canonicalize();
    sum += (k % 2 == 0 ? -1 : 1) * term;
  }
  return sum / 2;
}

// Closed form (1/2)(1 - (1 - 1/j)^{m-1}); must equal pr_Ej exactly.
inline BigRational pr_Ej_closed(int m, int j) {
  detail::check_exact_n(m, "pr_Ej_closed (m)");
  if (m < 2) throw std::invalid_argument("pr_Ej_closed: m must be >= 2");
  detail::check_positive(j, "j");
  return (1 - power(BigRational(j - 1, j), m - 1)) / 2;
}

// Upper bound on Pr(S^R(m, n) < m), clamped to [0, 1].
inline double bound_SR_less(int m, int n) {
  detail::check_positive(m, "m");
  detail::check_positive(n, "n");
  if (m == 1) return 0.0;
  const double b = m * (m - 1.0) * std::pow(static_cast<double>(m) / n, (m - 1) / 4.0);
  return std::clamp(b, 0.0, 1.0);
}

// n^{-(m-1)}: the chance that Column's first action is strictly dominant.
inline double pi_lower_bound(int m, int n) {
  detail::check_positive(m, "m");
  detail::check_positive(n, "n");
  return std::pow(static_cast<double>(n), -(m - 1.0));
}

inline BigRational pi_lower_bound_exact(int m, int n) {
  detail::check_positive(m, "m");
  detail::check_positive(n, "n");
  return BigRational(BigInt(1), power(BigInt(n), m - 1));
}

inline BigRational point_rat_unique_prob(int m, int n) {
  detail::check_positive(m, "m");
  detail::check_positive(n, "n");
  BigRational q(m + n - 1, static_cast<long>(m) * n);
  q.canonicalize();
  return q;
}

struct BruhatBounds {
  BigRational lower_exact;  // prod_{i<=n} H_i / i
  double lower = 0.0;
  double upper = 0.0;       // 0.362^n
};

inline BruhatBounds bruhat_bounds(int n) {
  detail::check_exact_n(n, "bruhat_bounds");
  BigRational prod = 1, h = 0;
  for (int i = 1; i <= n; ++i) {
    h += BigRational(1, i);
    prod *= h / i;
  }
  return {prod, to_double(prod), std::pow(0.362, n)};
}

namespace detail {

inline double log_wallis(double n) {
  return std::lgamma(2 * n + 1) - 2 * std::lgamma(n + 1) - 2 * n * std::numbers::ln2;
}

// log((n - 1)! / (2n - 1)!!)
inline double log_pr_I1(double n) {
  return std::lgamma(n) - (std::lgamma(2 * n + 1) - n * std::numbers::ln2 - std::lgamma(n + 1));
}

struct HarmonicSums {
  double h = 0, h2 = 0, d1 = 0, d2 = 0;
};

inline HarmonicSums harmonic_sums(long n) {
  HarmonicSums s;
  // Summing small terms first keeps the rounding error near one ulp.
  for (long k = n; k >= 1; --k) {
    const double kd = static_cast<double>(k), odd = 2.0 * k - 1;
    s.h += 1 / kd;
    s.h2 += 1 / (kd * kd);
    s.d1 += 2 / odd;
    s.d2 -= 4 / (odd * odd);
  }
  return s;
}

}  // namespace detail

// Exact up to the cap, log-space double beyond.
inline Number pi_2n_number(long n) {
  if (n <= kExactCap) return make_number(pi_2n(static_cast<int>(n)));
  detail::check_positive(n, "n");
  return {std::nullopt, 2 * std::exp(detail::log_wallis(static_cast<double>(n)))};
}

inline Number mean_S_C_number(long n) {
  if (n <= kExactCap) return make_number(mean_S_C_2n(static_cast<int>(n)));
  const auto s = detail::harmonic_sums(n);
  const double w = std::exp(detail::log_wallis(static_cast<double>(n)));
  return {std::nullopt, w * (2 - s.d1) + s.h};
}

inline Number var_S_C_number(long n) {
  if (n <= kExactCap) return make_number(var_S_C_2n(static_cast<int>(n)));
  const auto s = detail::harmonic_sums(n);
  const double w = std::exp(detail::log_wallis(static_cast<double>(n)));
  const double shift = w * (2 - s.d1);
  return {std::nullopt,
          s.h - s.h2 +
              w / 2 * (4 - 2 * s.d1 - (s.d1 * s.d1 + s.d2) - 8 * s.h + 4 * s.h * s.d1) -
              shift * shift};
}

struct DiagnosticRow {
  long n = 0;
  double sqrt_n_pi = 0;              // -> 2 / sqrt(pi)
  double scaled_pr_I1 = 0;           // 2^n sqrt(n) Pr(I = 1) -> sqrt(pi)
  double sqrt_n_pr_I2 = 0;           // -> sqrt(pi) / 2
  double sqrt_n_not_I3 = 0;          // sqrt(n) (1 - Pr(I = 3)) -> sqrt(pi) / 2
  double mean_S_C_minus_log = 0;     // -> Euler's gamma
  double var_S_C_over_log = 0;       // -> 1
  bool approximate = false;
};

struct DiagnosticLimits {
  static constexpr double sqrt_n_pi = 2 * std::numbers::inv_sqrtpi;
  static constexpr double scaled_pr_I1 = 1 / std::numbers::inv_sqrtpi;
  static constexpr double sqrt_n_pr_I2 = scaled_pr_I1 / 2;
  static constexpr double sqrt_n_not_I3 = scaled_pr_I1 / 2;
  static constexpr double mean_S_C_minus_log = std::numbers::egamma;
  static constexpr double var_S_C_over_log = 1.0;
};

inline DiagnosticRow asymptotic_diagnostic(long n) {
  detail::check_positive(n, "n");
  DiagnosticRow row;
  row.n = n;
  const double rn = std::sqrt(static_cast<double>(n));
  const double ln = std::log(static_cast<double>(n));
  if (n <= kExactCap) {
    const int k = static_cast<int>(n);
    const auto di = dist_I_2n(k);
    row.sqrt_n_pi = rn * to_double(pi_2n(k));
    row.scaled_pr_I1 = rn * to_double(di[0] * pow2(k));
    row.sqrt_n_pr_I2 = rn * to_double(di[1]);
    row.sqrt_n_not_I3 = rn * to_double(1 - di[2]);
    row.mean_S_C_minus_log = to_double(mean_S_C_2n(k)) - ln;
    row.var_S_C_over_log = n > 1 ? to_double(var_S_C_2n(k)) / ln : 0.0;
    return row;
  }
  const double nd = static_cast<double>(n);
  const double lp1 = detail::log_pr_I1(nd);
  // Pr(I = 2) = (n + 2^{n-1} - 2) Pr(I = 1); factor out 2^{n-1}.
  const double lp2 = lp1 + (nd - 1) * std::numbers::ln2 +
                     std::log1p((nd - 2) * std::exp(-(nd - 1) * std::numbers::ln2));
  row.sqrt_n_pi = rn * pi_2n_number(n).value;
  row.scaled_pr_I1 = rn * std::exp(lp1 + nd * std::numbers::ln2);
  row.sqrt_n_pr_I2 = rn * std::exp(lp2);
  row.sqrt_n_not_I3 = rn * (std::exp(lp1) + std::exp(lp2));
  row.mean_S_C_minus_log = mean_S_C_number(n).value - ln;
  row.var_S_C_over_log = var_S_C_number(n).value / ln;
  row.approximate = true;
  return row;
}

inline std::vector<DiagnosticRow> asymptotic_diagnostics(const std::vector<long>& ns) {
  std::vector<DiagnosticRow> rows;
  for (long n : ns) rows.push_back(asymptotic_diagnostic(n));
  return rows;
}

}  // namespace domsolve

#endif  // DOMSOLVE_FORMULAS_HPP_
