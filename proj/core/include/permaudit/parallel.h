// Copyright 2026 The permaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMAUDIT_PARALLEL_H_
#define PERMAUDIT_PARALLEL_H_

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace permaudit {

// Runs body(i) for i in [0, count) on up to `num_threads` threads. Indices
// are dealt out in fixed strides, and callers write results into
// preallocated per-index slots, so output never depends on scheduling.
inline void ParallelFor(int count, int num_threads,
                        const std::function<void(int)>& body) {
  const int workers = std::clamp(num_threads, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&body, w, workers, count] {
      for (int i = w; i < count; i += workers) body(i);
    });
  }
}

}  // namespace permaudit

#endif  // PERMAUDIT_PARALLEL_H_
