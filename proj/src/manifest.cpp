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

#include "qchan/manifest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qchan {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256: EVP_Digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string sha256_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("sha256_file: cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return sha256_hex(ss.str());
}

void RunManifest::add_output(const std::string& path) {
  outputs.emplace_back(path, sha256_file(path));
}

void RunManifest::write(const std::string& path) const {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = config_text;
  j["version"] = version;
  j["seed"] = base_seed;
  j["seed_derivation"] = seed_derivation;
  j["wall_clock_seconds"] = wall_clock_seconds;
  j["outputs"] = nlohmann::json::array();
  for (const auto& [p, h] : outputs) j["outputs"].push_back({{"path", p}, {"sha256", h}});
  std::ofstream os(path);
  if (!os) throw std::runtime_error("RunManifest: cannot open " + path);
  os << j.dump(2) << "\n";
}

std::string qchan_version() { return "0.1.0"; }

}  // namespace qchan
