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
#include <string>
#include <vector>

namespace qchan {

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

/// Reproducibility record written next to every run's outputs: config echo,
/// code version, seed/stream derivation, wall clock, and output hashes.
/// Re-running with identical inputs reproduces identical hashes.
struct RunManifest {
  std::string command;
  std::string config_text;
  std::string version;
  std::uint64_t base_seed = 0;
  std::string seed_derivation = "stream index = task index";
  double wall_clock_seconds = 0;
  std::vector<std::pair<std::string, std::string>> outputs;  // (path, sha256)

  void add_output(const std::string& path);
  void write(const std::string& path) const;
};

std::string qchan_version();

}  // namespace qchan
