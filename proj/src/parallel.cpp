// Copyright 2026 The qchan authors
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

#include "qchan/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qchan/blas_support.hpp"

namespace qchan {

void parallel_for(int threads, std::int64_t taskCount,
                  const std::function<void(std::int64_t)>& fn) {
  if (taskCount <= 0) return;
  if (threads <= 1 || taskCount == 1) {
    for (std::int64_t i = 0; i < taskCount; ++i) fn(i);
    return;
  }
  BlasSingleThreadGuard blasGuard;
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex errorMu;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= taskCount) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errorMu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = static_cast<int>(std::min<std::int64_t>(threads, taskCount));
  pool.reserve(n);
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qchan
