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

#ifndef DOMSOLVE_RANDOM_HPP_
#define DOMSOLVE_RANDOM_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <utility>

namespace domsolve {

// (master, stream) names one reproducible random sub-stream.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed for the index-th item under `parent`. Depends only on
// (parent, index), so work can be split across threads in any order.
constexpr Seed derive(Seed parent, std::uint64_t index) {
  return Seed{mix64(parent.master ^ mix64(parent.stream + 0x9e3779b97f4a7c15ULL)),
              index};
}

// SplitMix64 stream keyed by a Seed. Satisfies UniformRandomBitGenerator.
// Bounded integers and shuffles are done here rather than through
// <random> distributions, whose algorithms differ between standard
// libraries; sampled games are therefore identical on every platform.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed)
      : state_(mix64(seed.master ^ mix64(seed.stream ^ 0x6a09e667f3bcc909ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform on [0, bound), bound >= 1 (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 p = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(p);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        p = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(p);
      }
    }
    return static_cast<std::uint64_t>(p >> 64);
  }

  // Uniform on the open interval (0, 1), on the 2^-53 grid. Values are
  // multiples of 2^-53, so 1 - x is exact.
  double uniform01() {
    for (;;) {
      const std::uint64_t k = (*this)() >> 11;
      if (k != 0) return static_cast<double>(k) * 0x1.0p-53;
    }
  }

  double normal() { return std::normal_distribution<double>{}(*this); }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace domsolve

#endif  // DOMSOLVE_RANDOM_HPP_
