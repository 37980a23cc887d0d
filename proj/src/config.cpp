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

#include "qchan/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qchan {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

std::vector<double> split_numbers(const std::string& body, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    double x;
    if (!parse_number(item, x))
      throw DimensionError("config: non-numeric list element in '" + key + "'");
    out.push_back(x);
  }
  return out;
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  cfg.text_ = text;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DimensionError("config: missing '=' on line " + std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw DimensionError("config: empty key or value on line " + std::to_string(lineno));
    Value v;
    v.raw = val;
    if (val.front() == '[' && val.back() == ']') {
      v.is_list = true;
      v.numeric = true;
      v.numbers = split_numbers(val.substr(1, val.size() - 2), key);
    } else if (val.front() == '(' && val.back() == ')') {
      const std::vector<double> triple = split_numbers(val.substr(1, val.size() - 2), key);
      if (triple.size() != 3)
        throw DimensionError("config: grid triple must be (start, stop, step) in '" + key + "'");
      const double start = triple[0], stop = triple[1], step = triple[2];
      if (step <= 0) throw DimensionError("config: grid step must be positive in '" + key + "'");
      v.is_list = true;
      v.numeric = true;
      for (double x = start; x <= stop + 0.5 * step; x += step)
        v.numbers.push_back(std::min(x, stop));
    } else {
      double x;
      v.numeric = parse_number(val, x);
      if (v.numeric) v.numbers.push_back(x);
    }
    cfg.values_[key] = std::move(v);
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("config: cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse(ss.str());
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

double Config::get_number(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw DimensionError("config: missing key '" + key + "'");
  if (!it->second.numeric || it->second.is_list)
    throw DimensionError("config: key '" + key + "' is not a number");
  return it->second.numbers[0];
}

double Config::get_number(const std::string& key, double fallback) const {
  return has(key) ? get_number(key) : fallback;
}

std::int64_t Config::get_int(const std::string& key) const {
  const double x = get_number(key);
  const auto i = static_cast<std::int64_t>(std::llround(x));
  if (std::abs(x - static_cast<double>(i)) > 1e-9)
    throw DimensionError("config: key '" + key + "' is not an integer");
  return i;
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::string Config::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw DimensionError("config: missing key '" + key + "'");
  return it->second.raw;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

std::vector<double> Config::get_list(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw DimensionError("config: missing key '" + key + "'");
  if (!it->second.is_list) {
    if (it->second.numeric) return it->second.numbers;
    throw DimensionError("config: key '" + key + "' is not a list");
  }
  return it->second.numbers;
}

std::vector<double> Config::get_list(const std::string& key,
                                     const std::vector<double>& fallback) const {
  return has(key) ? get_list(key) : fallback;
}

ExperimentConfig ExperimentConfig::from(const Config& config) {
  ExperimentConfig ec;
  EnsembleSpec& spec = ec.ensemble;
  spec.kind = ensemble_kind_from_string(config.get_string("ensemble.kind", "lebesgue"));
  spec.d1 = config.get_int("ensemble.d1", 2);
  spec.d2 = config.get_int("ensemble.d2", spec.d1);
  if (config.has("ensemble.d")) {
    spec.d1 = config.get_int("ensemble.d");
    spec.d2 = spec.d1;
  }
  spec.M = config.get_int("ensemble.M", 0);
  spec.fc_order = config.get_int("ensemble.fc_order", 1);
  spec.k = config.get_int("ensemble.k", 1);
  spec.n = config.get_int("ensemble.n", 1);
  spec.weight_s = config.get_number("ensemble.weight_s", 1.0);
  spec.sinkhorn_tol = config.get_number("ensemble.sinkhorn_tol", 1e-10);
  spec.sinkhorn_max_iter = static_cast<int>(config.get_int("ensemble.sinkhorn_max_iter", 10000));
  const std::string state = config.get_string("ensemble.state", "bures");
  if (state == "bures")
    spec.state = StateEnsemble::Bures;
  else if (state == "fuss-catalan")
    spec.state = StateEnsemble::FussCatalan;
  else
    throw DimensionError("ensemble.state: unknown state ensemble '" + state + "'");
  const std::string env = config.get_string("ensemble.env", "hs-random");
  if (env == "hs-random")
    spec.env = EnvKind::HsRandom;
  else if (env == "maximally-mixed")
    spec.env = EnvKind::MaximallyMixed;
  else
    throw DimensionError("ensemble.env: unknown environment '" + env + "'");
  const std::string weights = config.get_string("ensemble.weights", "uniform");
  if (weights == "uniform")
    spec.weights = WeightScheme::Uniform;
  else if (weights == "dirichlet")
    spec.weights = WeightScheme::Dirichlet;
  else
    throw DimensionError("ensemble.weights: unknown scheme '" + weights + "'");
  check_ensemble_spec(spec);

  for (double d : config.get_list("grid.d", {}))
    ec.d_grid.push_back(static_cast<Index>(std::llround(d)));
  ec.b_grid = config.get_list("grid.b", {});
  ec.beta_grid = config.get_list("grid.beta", {});
  ec.samples = static_cast<int>(config.get_int("samples", 100));
  require(ec.samples >= 1, "samples: must be at least 1");
  ec.probes = static_cast<int>(config.get_int("probes", 10));
  ec.seed = static_cast<std::uint64_t>(config.get_int("seed", 0));
  ec.out = config.get_string("out", "runs/out");
  ec.threads = static_cast<int>(config.get_int("threads", 1));
  ec.format = config.get_string("format", "csv");
  require(ec.format == "csv" || ec.format == "json", "format: must be csv or json");
  ec.fraction_radius_scale = config.get_number("analysis.fraction_radius_scale", 1.0);
  for (double b : ec.b_grid)
    require(b >= 0.0 && b <= 1.0, "grid.b: decoherence parameters must lie in [0, 1]");
  return ec;
}

}  // namespace qchan
