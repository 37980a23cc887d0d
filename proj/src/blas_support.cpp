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

#include "qchan/blas_support.hpp"

#include <cstdlib>

extern "C" {
void openblas_set_num_threads(int);
int openblas_get_num_threads(void);
}

namespace qchan {

void init_blas_runtime() {
  static const bool done = [] {
    if (std::getenv("OPENBLAS_CORETYPE") == nullptr) {
#if defined(__x86_64__)
      __builtin_cpu_init();
      if (__builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512dq")) {
        setenv("OPENBLAS_CORETYPE", "SKYLAKEX", 0);
      } else if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        setenv("OPENBLAS_CORETYPE", "HASWELL", 0);
      }
#endif
    }
    return true;
  }();
  (void)done;
}

namespace {
// Runs at load time so the env var is in place before OpenBLAS initializes.
struct BlasRuntimeInit {
  BlasRuntimeInit() { init_blas_runtime(); }
} blas_runtime_init;
}  // namespace

void set_blas_threads(int n) { openblas_set_num_threads(n > 0 ? n : 1); }

int blas_threads() { return openblas_get_num_threads(); }

BlasSingleThreadGuard::BlasSingleThreadGuard() : saved_(openblas_get_num_threads()) {
  openblas_set_num_threads(1);
}

BlasSingleThreadGuard::~BlasSingleThreadGuard() { openblas_set_num_threads(saved_); }

}  // namespace qchan
