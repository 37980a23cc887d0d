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

namespace qchan {

// Must run before the first LAPACK/BLAS call of the process; idempotent.
// OpenBLAS picks its kernel set from the cpuid model string, which VMs and
// sandboxes often mask; when that happens it silently falls back to ancient
// generic kernels. This selects the kernel set from actual ISA support
// instead, unless OPENBLAS_CORETYPE is already set by the user.
void init_blas_runtime();

void set_blas_threads(int n);
int blas_threads();

// Pins BLAS to one thread while alive; used around app-level parallel loops.
class BlasSingleThreadGuard {
 public:
  BlasSingleThreadGuard();
  ~BlasSingleThreadGuard();
  BlasSingleThreadGuard(const BlasSingleThreadGuard&) = delete;
  BlasSingleThreadGuard& operator=(const BlasSingleThreadGuard&) = delete;

 private:
  int saved_;
};

}  // namespace qchan
