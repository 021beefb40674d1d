// Copyright 2026 The dimerent Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dimerent {

/// Inclusive range of `count` evenly spaced points.
struct LinearRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  void validate(const std::string& what) const {
    if (!std::isfinite(start) || !std::isfinite(stop))
      throw std::invalid_argument(what + ": range bounds must be finite");
    if (count < 1) throw std::invalid_argument(what + ": range count must be >= 1");
    if (start > stop) throw std::invalid_argument(what + ": range start must be <= stop");
  }

  /// Points are placed symmetrically about the midpoint, so a range with
  /// start == -stop yields exactly negated pairs. Endpoints are exact.
  std::vector<double> values() const {
    std::vector<double> v(count);
    if (count == 1) {
      v[0] = start;
      return v;
    }
    const double mid = 0.5 * (start + stop);
    const double half = 0.5 * (stop - start);
    const auto n1 = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      const double k = 2.0 * static_cast<double>(i) - n1;
      v[i] = mid + half * (k / n1);
    }
    v.front() = start;
    v.back() = stop;
    return v;
  }
};

/// Number of worker threads to use when the caller asks for `requested`
/// (0 = hardware concurrency).
inline std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Calls fn(i) for every i in [0, n), split into contiguous blocks over
/// `threads` workers. fn must only write to slot i of its output.
inline void parallel_for(std::size_t n, std::size_t threads,
                         const std::function<void(std::size_t)>& fn) {
  threads = std::min(std::max<std::size_t>(threads, 1), std::max<std::size_t>(n, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t block = (n + threads - 1) / threads;
  for (std::size_t w = 0; w < threads; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n, begin + block);
    pool.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace dimerent
