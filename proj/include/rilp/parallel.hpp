// Copyright 2026 The robust-ilp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RILP_PARALLEL_HPP
#define RILP_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace rilp {

// Worker count: ROBUST_ILP_THREADS if set, else `requested`, else the
// hardware concurrency. Always at least 1.
unsigned resolve_threads(unsigned requested = 0);

// Finds the smallest index in [0, count) accepted by a worker. Each thread
// owns one worker built by `make_worker()`; a worker is called with
// strictly increasing indices inside a chunk, so it may carry state from
// one index to the next. The answer does not depend on the thread count.
template <class MakeWorker>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t count,
                                                 unsigned threads,
                                                 MakeWorker make_worker,
                                                 std::uint64_t chunk = 32) {
  threads = std::max(1U, threads);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto body = [&] {
    try {
      auto worker = make_worker();
      while (true) {
        const std::uint64_t start = next.fetch_add(chunk);
        if (start >= count || start >= best.load()) return;
        const std::uint64_t stop = std::min(count, start + chunk);
        for (std::uint64_t i = start; i < stop; ++i) {
          if (i >= best.load()) break;
          if (worker(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  const auto spawn = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, (count + chunk - 1) / chunk));
  if (spawn <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  const std::uint64_t found = best.load();
  if (found >= count) return std::nullopt;
  return found;
}

// Runs fn(i) for every i in [0, count) on `threads` workers.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn fn) {
  threads = std::max(1U, threads);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    try {
      while (true) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };
  const auto spawn =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (spawn <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace rilp

#endif  // RILP_PARALLEL_HPP
