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
#include <map>
#include <string>
#include <vector>

#include "qchan/samplers.hpp"

namespace qchan {

/// Line-oriented `dotted.key = value` configuration. Values are scalars
/// (number or bare string), lists `[a, b, c]`, or grid triples
/// `(start, stop, step)` which expand inclusively. `#` starts a comment.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config parse_file(const std::string& path);

  bool has(const std::string& key) const;
  double get_number(const std::string& key) const;
  double get_number(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> get_list(const std::string& key) const;
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

  const std::string& text() const { return text_; }

 private:
  struct Value {
    std::vector<double> numbers;
    std::string raw;
    bool is_list = false;
    bool numeric = false;
  };
  std::map<std::string, Value> values_;
  std::string text_;
};

struct ExperimentConfig {
  EnsembleSpec ensemble;
  std::vector<Index> d_grid;
  std::vector<double> b_grid;
  std::vector<double> beta_grid;
  int samples = 100;
  int probes = 10;
  std::uint64_t seed = 0;
  std::string out = "runs/out";
  int threads = 1;
  std::string format = "csv";
  double fraction_radius_scale = 1.0;

  /// Reads an ExperimentConfig from parsed key-values; validates the ensemble
  /// block and throws DimensionError naming the offending field.
  static ExperimentConfig from(const Config& config);
};

}  // namespace qchan
