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

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qchan/common.hpp"
#include "qchan/tensor.hpp"

namespace qchan {

enum class Rep { Kraus, Choi, Superop, Stinespring };

/// A (d1 -> d2) CPTP map holding one or more cached representations.
///
/// Values are immutable: the cache only ever gains entries, fills are
/// idempotent and mutex-guarded, so channels can be shared freely across
/// threads. Conventions: the Choi matrix lives in M_{d2} (x) M_{d1} (output
/// factor first) with Tr J = d1, the superoperator is d2^2 x d1^2 acting on
/// row-major vectorized matrices, and the Stinespring isometry maps
/// C^{d1} -> C^{d2} (x) C^{M} with row index a*M + m.
class QuantumChannel {
 public:
  static QuantumChannel from_kraus(std::vector<Matrix> ops);
  static QuantumChannel from_choi(Matrix j, Index dimIn, Index dimOut);
  static QuantumChannel from_superop(Matrix s, Index dimIn, Index dimOut);
  static QuantumChannel from_stinespring(Matrix v, Index dimIn, Index dimOut);

  Index dim_in() const { return d1_; }
  Index dim_out() const { return d2_; }

  bool has(Rep rep) const;

  /// Accessors convert lazily and cache the result. Conversion routes:
  /// Kraus -> Choi via J = sum |A_i>><<A_i|; Choi -> Kraus via the spectral
  /// decomposition (eigenvalues below 1e-12 * lambda_max dropped);
  /// Choi <-> Superop via reshuffling; Stinespring -> Kraus via
  /// A_m = (1 (x) <m|) V; Kraus -> Stinespring by stacking.
  const std::vector<Matrix>& kraus() const;
  const Matrix& choi() const;
  const Matrix& superop() const;
  const Matrix& stinespring() const;

  /// Environment dimension of the Stinespring representation.
  Index env_dim() const;

  /// Copy of this channel with the given representation pre-computed.
  QuantumChannel with(Rep rep) const;

  /// Phi(X); uses the cheapest cached representation, no conversion.
  Matrix apply(const Matrix& x) const;

 private:
  struct Cache;
  QuantumChannel(Index d1, Index d2, std::shared_ptr<Cache> cache);

  Index d1_ = 0;
  Index d2_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// The adjoint map Phi^dag: completely positive and unital but in general not
/// trace preserving, hence not a QuantumChannel.
struct AdjointMap {
  std::vector<Matrix> kraus;  // conjugate-transposed Kraus operators
  Matrix apply(const Matrix& x) const;
};
AdjointMap adjoint(const QuantumChannel& channel);

struct CptpReport {
  double min_choi_eigenvalue = 0;  // smallest eigenvalue of J
  double tp_defect = 0;            // || [Tr (x) id] J - 1_{d1} ||_op
  double unitality_defect = 0;     // || [id (x) Tr] J - 1_{d2} ||_op
  bool cp_ok = false;
  bool tp_ok = false;
  double tol = 0;
};
CptpReport validate_cptp(const Matrix& j, Index dimIn, Index dimOut, double tol = 1e-10);
CptpReport validate_cptp(const QuantumChannel& channel, double tol = 1e-10);

/// Count of Choi eigenvalues above relTol * lambda_max.
int choi_rank(const QuantumChannel& channel, double relTol = 1e-9);

QuantumChannel identity_channel(Index d);
QuantumChannel depolarizing_channel(Index dimIn, Index dimOut);

/// Real affine (Bloch) form of a square channel: the d^2 x d^2 real matrix
/// F_ij = (1/d) Tr(L_i Phi(L_j)) over {1, generators}, with first row
/// (1, 0, ..., 0), translation kappa and distortion Q. Blocks follow the
/// diagonal-first generator ordering, so the classical core C sits top-left.
struct BlochForm {
  Index d = 0;
  RealMatrix full;    // d^2 x d^2
  RealVector kappa;   // length d^2 - 1
  RealMatrix Q;       // (d^2-1) x (d^2-1)

  RealMatrix classical_block() const { return Q.topLeftCorner(d - 1, d - 1); }
  RealMatrix q1() const { return Q.topRightCorner(d - 1, Q.cols() - (d - 1)); }
  RealMatrix q2() const { return Q.bottomLeftCorner(Q.rows() - (d - 1), d - 1); }
  RealMatrix quantum_block() const {
    return Q.bottomRightCorner(Q.rows() - (d - 1), Q.cols() - (d - 1));
  }
};
BlochForm bloch_form(const QuantumChannel& channel);

/// Real superoperator in the orthonormal Hermitian basis; equals
/// bloch_form(...).full and shares its spectrum with the superoperator.
RealMatrix real_superop(const QuantumChannel& channel);

/// Fano form of a bipartite d x d state: Rt_ij = Tr(rho (L_i (x) L_j)) with
/// L_0 = 1. The a vector is the row block (Bloch vector of the marginal
/// traced over the first factor); b is the column block.
struct FanoForm {
  Index d = 0;
  RealMatrix full;  // d^2 x d^2 including the L_0 row/column
  RealVector a;
  RealVector b;
  RealMatrix R;
};
FanoForm fano_form(const Matrix& rhoAB, Index d);

/// Checks bloch_form(Phi) == fano_form(J^{T2}/d) entrywise within tol.
bool verify_fano_equivalence(const QuantumChannel& channel, double tol = 1e-10);

}  // namespace qchan
