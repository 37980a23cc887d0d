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

#pragma once

#include <cstdint>
#include <functional>

namespace qchan {

/// Runs fn(taskIndex) for taskIndex in [0, taskCount). Workers pull indices
/// from an atomic counter; results must be written into per-index slots so
/// the outcome is identical for any thread count. With threads > 1, BLAS is
/// pinned to one thread for the duration. Exceptions are rethrown.
void parallel_for(int threads, std::int64_t taskCount,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace qchan
