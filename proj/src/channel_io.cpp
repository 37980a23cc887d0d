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

#include "qchan/channel_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace qchan {

namespace {

constexpr char kMagic[5] = {'Q', 'C', 'H', 'N', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& os, double x) {
  const std::uint64_t v = std::bit_cast<std::uint64_t>(x);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

void put_matrix(std::ostream& os, const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      put_f64(os, m(i, j).real());
      put_f64(os, m(i, j).imag());
    }
}

Matrix get_matrix(std::istream& is, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      m(i, j) = Complex(re, im);
    }
  return m;
}

std::uint32_t kind_tag(Rep rep) {
  switch (rep) {
    case Rep::Kraus: return 0;
    case Rep::Choi: return 1;
    case Rep::Superop: return 2;
    case Rep::Stinespring: return 3;
  }
  return 0;
}

}  // namespace

void save_channel(const std::string& path, const QuantumChannel& channel, Rep kind) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("save_channel: cannot open " + path);
  os.write(kMagic, sizeof(kMagic));
  put_u32(os, static_cast<std::uint32_t>(channel.dim_in()));
  put_u32(os, static_cast<std::uint32_t>(channel.dim_out()));
  put_u32(os, kind_tag(kind));
  switch (kind) {
    case Rep::Kraus: {
      const auto& ops = channel.kraus();
      put_u32(os, static_cast<std::uint32_t>(ops.size()));
      for (const Matrix& a : ops) put_matrix(os, a);
      break;
    }
    case Rep::Choi:
      put_u32(os, 1);
      put_matrix(os, channel.choi());
      break;
    case Rep::Superop:
      put_u32(os, 1);
      put_matrix(os, channel.superop());
      break;
    case Rep::Stinespring:
      put_u32(os, static_cast<std::uint32_t>(channel.env_dim()));
      put_matrix(os, channel.stinespring());
      break;
  }
  if (!os) throw std::runtime_error("save_channel: write failed for " + path);
}

QuantumChannel load_channel(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_channel: cannot open " + path);
  char magic[5];
  is.read(magic, 5);
  if (!is || std::memcmp(magic, kMagic, 5) != 0)
    throw std::runtime_error("load_channel: bad magic in " + path);
  const Index d1 = get_u32(is);
  const Index d2 = get_u32(is);
  const std::uint32_t kind = get_u32(is);
  const std::uint32_t count = get_u32(is);
  if (!is) throw std::runtime_error("load_channel: truncated header in " + path);
  switch (kind) {
    case 0: {
      std::vector<Matrix> ops;
      ops.reserve(count);
      for (std::uint32_t i = 0; i < count; ++i) ops.push_back(get_matrix(is, d2, d1));
      if (!is) throw std::runtime_error("load_channel: truncated payload in " + path);
      return QuantumChannel::from_kraus(std::move(ops));
    }
    case 1: {
      Matrix j = get_matrix(is, d2 * d1, d2 * d1);
      if (!is) throw std::runtime_error("load_channel: truncated payload in " + path);
      return QuantumChannel::from_choi(std::move(j), d1, d2);
    }
    case 2: {
      Matrix s = get_matrix(is, d2 * d2, d1 * d1);
      if (!is) throw std::runtime_error("load_channel: truncated payload in " + path);
      return QuantumChannel::from_superop(std::move(s), d1, d2);
    }
    case 3: {
      Matrix v = get_matrix(is, d2 * static_cast<Index>(count), d1);
      if (!is) throw std::runtime_error("load_channel: truncated payload in " + path);
      return QuantumChannel::from_stinespring(std::move(v), d1, d2);
    }
    default:
      throw std::runtime_error("load_channel: unknown kind tag in " + path);
  }
}

Rep peek_channel_kind(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("peek_channel_kind: cannot open " + path);
  char magic[5];
  is.read(magic, 5);
  if (!is || std::memcmp(magic, kMagic, 5) != 0)
    throw std::runtime_error("peek_channel_kind: bad magic in " + path);
  get_u32(is);
  get_u32(is);
  const std::uint32_t kind = get_u32(is);
  switch (kind) {
    case 0: return Rep::Kraus;
    case 1: return Rep::Choi;
    case 2: return Rep::Superop;
    case 3: return Rep::Stinespring;
    default: throw std::runtime_error("peek_channel_kind: unknown kind tag");
  }
}

}  // namespace qchan
