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

// Dense tableau simplex for small packing LPs
//   maximize c.y  subject to  A y <= b,  y >= 0,  with b >= 0,
// started from the all-slack basis. Bland's rule, so no cycling.

#ifndef DOMSOLVE_SIMPLEX_HPP_
#define DOMSOLVE_SIMPLEX_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace domsolve {

struct LpResult {
  enum class Status { kOptimal, kUnbounded, kIterationLimit };
  Status status = Status::kOptimal;
  double objective = 0.0;
  std::vector<double> primal;  // y
  std::vector<double> dual;    // one per constraint, >= 0 at an optimum
  int pivots = 0;
};

// `a` is rows x cols, row-major.
inline LpResult solve_packing_lp(const std::vector<double>& a, int rows, int cols,
                                 const std::vector<double>& b, const std::vector<double>& c,
                                 int max_pivots = 10000, double eps = 1e-11) {
  if (rows < 1 || cols < 1 || a.size() != static_cast<std::size_t>(rows) * cols ||
      b.size() != static_cast<std::size_t>(rows) || c.size() != static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("solve_packing_lp: inconsistent shapes");
  }
  for (double v : b) {
    if (!(v >= 0.0)) throw std::invalid_argument("solve_packing_lp: b must be >= 0");
  }
  const int width = cols + rows + 1;  // variables, slacks, rhs
  const int rhs = width - 1;
  std::vector<double> t(static_cast<std::size_t>(rows + 1) * width, 0.0);
  auto at = [&](int r, int k) -> double& { return t[static_cast<std::size_t>(r) * width + k]; };
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    for (int k = 0; k < cols; ++k) at(r, k) = a[r * cols + k];
    at(r, cols + r) = 1.0;
    at(r, rhs) = b[r];
    basis[r] = cols + r;
  }
  for (int k = 0; k < cols; ++k) at(rows, k) = -c[k];

  LpResult out;
  for (;;) {
    int enter = -1;
    for (int k = 0; k < rhs; ++k) {
      if (at(rows, k) < -eps) {
        enter = k;
        break;
      }
    }
    if (enter < 0) break;
    if (out.pivots == max_pivots) {
      out.status = LpResult::Status::kIterationLimit;
      return out;
    }
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < rows; ++r) {
      const double piv = at(r, enter);
      if (piv <= eps) continue;
      const double ratio = at(r, rhs) / piv;
      const bool tie = leave >= 0 && std::abs(ratio - best) <= eps * (1.0 + std::abs(best));
      if (leave < 0 || (!tie && ratio < best) || (tie && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) {
      out.status = LpResult::Status::kUnbounded;
      return out;
    }
    const double piv = at(leave, enter);
    for (int k = 0; k < width; ++k) at(leave, k) /= piv;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (int k = 0; k < width; ++k) at(r, k) -= f * at(leave, k);
    }
    basis[leave] = enter;
    ++out.pivots;
  }
  out.objective = at(rows, rhs);
  out.primal.assign(cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < cols) out.primal[basis[r]] = at(r, rhs);
  }
  out.dual.resize(rows);
  for (int r = 0; r < rows; ++r) out.dual[r] = at(rows, cols + r);
  return out;
}

}  // namespace domsolve

#endif  // DOMSOLVE_SIMPLEX_HPP_
