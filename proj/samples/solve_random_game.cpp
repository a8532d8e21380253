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

// Draws one random 3 x 4 game, eliminates dominated actions round by round,
// and compares a small simulation with the exact 2 x n value.
//
//   sample_solve [seed]

#include <cstdlib>
#include <iostream>

#include "domsolve/domsolve.hpp"

using namespace domsolve;

int main(int argc, char** argv) {
  const std::uint64_t master = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;

  const CardinalBimatrix g = sample_cardinal(3, 4, Distribution::kUniform01, Seed{master, 0});
  const OrdinalBimatrix o = ordinalize(g);
  std::cout << "game:\n" << json(o).dump() << "\n";

  const EliminationTrace t = iterate(o);
  for (std::size_t r = 0; r < t.rounds.size(); ++r) {
    std::cout << "round " << r + 1 << ":";
    for (const Removal& rm : t.rounds[r]) {
      std::cout << (rm.player == kRow ? " row drops" : " column drops");
      for (int a : rm.removed) std::cout << ' ' << a;
    }
    std::cout << "\n";
  }
  std::cout << "solvable: " << (t.solvable ? "yes" : "no") << ", rounds: " << t.iterations
            << "\n";

  const RationalizabilityReport r = rationalizable_sets(g);
  std::cout << "rationalizable: " << json(r.rationalizable).dump() << "\n";

  GameSource src;
  src.m = 2;
  src.n = 10;
  const RunResult est = run({Metric::kPi, src, 200000, Seed{master, 1}, kColumn, 0});
  std::cout << "pi(2,10): simulated " << est.estimate.mean << " +/- " << est.estimate.se
            << ", exact " << to_string(pi_2n(10)) << " = " << to_double(pi_2n(10)) << "\n";
  return 0;
}
