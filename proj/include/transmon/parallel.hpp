// Copyright 2026 The transmon-wh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSMON_PARALLEL_HPP
#define TRANSMON_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace transmon {

namespace detail {
inline std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> n{0};
  return n;
}
// Set on worker threads; nested parallel_for calls then run serially.
inline bool& inside_worker() {
  thread_local bool flag = false;
  return flag;
}
}  // namespace detail

/// 0 selects std::thread::hardware_concurrency().
inline void set_thread_count(unsigned n) { detail::thread_setting() = n; }

inline unsigned thread_count() {
  const unsigned n = detail::thread_setting();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [begin, end) on up to thread_count() threads.
/// Each index is visited exactly once; callers write results into per-index
/// slots so the outcome does not depend on scheduling. The first exception
/// thrown by any worker is rethrown on the calling thread. Calls made from
/// inside a worker run serially on that worker.
template <typename Index, typename Body>
void parallel_for(Index begin, Index end, Body&& body) {
  if (end <= begin) return;
  const auto total = static_cast<std::size_t>(end - begin);
  const std::size_t workers = std::min<std::size_t>(thread_count(), total);
  if (workers <= 1 || detail::inside_worker()) {
    for (Index i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    const bool outer = detail::inside_worker();
    detail::inside_worker() = true;
    for (std::size_t k = next++; k < total; k = next++) {
      try {
        body(static_cast<Index>(begin + static_cast<Index>(k)));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    detail::inside_worker() = outer;
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  pool.clear();  // joins
  if (error) std::rethrow_exception(error);
}

}  // namespace transmon

#endif  // TRANSMON_PARALLEL_HPP
