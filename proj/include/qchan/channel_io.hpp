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

#include <string>

#include "qchan/channel.hpp"

namespace qchan {

// QCHN1 container: magic "QCHN1", then four little-endian u32 fields
// (d1, d2, kind, count), then the matrix payload as row-major complex entries,
// each entry an interleaved (re, im) pair of little-endian 64-bit floats.
// kind: 0 = kraus (count operators of size d2 x d1), 1 = choi (one matrix of
// side d2*d1), 2 = superop (d2^2 x d1^2), 3 = stinespring (count = M, one
// (d2*M) x d1 matrix). Round-trips are bit-exact.

void save_channel(const std::string& path, const QuantumChannel& channel, Rep kind);
QuantumChannel load_channel(const std::string& path);

/// Kind tag stored at `path` without loading the payload.
Rep peek_channel_kind(const std::string& path);

}  // namespace qchan
