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

#ifndef DOMSOLVE_PARALLEL_HPP_
#define DOMSOLVE_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace domsolve {

inline int default_threads() {
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

// Workers parallel_chunks will start for this many chunks.
inline std::size_t worker_count(std::size_t chunks, int threads) {
  if (threads <= 0) threads = default_threads();
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, chunks));
}

// Calls fn(chunk, worker) once for every chunk in [0, chunks), with worker in
// [0, worker_count(chunks, threads)); threads <= 0 means default_threads().
// Chunks are handed out dynamically, so which worker gets which chunk varies
// between runs. The first exception is rethrown after all workers stop.
template <class Fn>
void parallel_chunks(std::size_t chunks, int threads, Fn&& fn) {
  const std::size_t workers = worker_count(chunks, threads);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&](std::size_t worker) {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fn(c, worker);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace domsolve

#endif  // DOMSOLVE_PARALLEL_HPP_
