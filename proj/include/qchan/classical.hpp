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

#include <vector>

#include "qchan/channel.hpp"
#include "qchan/rng.hpp"

namespace qchan {

enum class ColumnLaw { Uniform, Dirichlet };

/// Super-decoherence: T_ji = <j| Phi(|i><i|) |j>, the column-stochastic d2 x d1
/// matrix carried by the diagonal of the Choi matrix.
RealMatrix super_decohere(const QuantumChannel& channel);

bool is_column_stochastic(const RealMatrix& t, double tol = 1e-12);
bool is_bistochastic(const RealMatrix& t, double tol = 1e-10);

/// J_b = b J + (1 - b) diag(J); a valid Choi matrix for all b in [0, 1].
Matrix decohere_interpolate(const Matrix& j, double b);

/// Columns i.i.d. on the simplex: Dirichlet(1) (uniform) or Dirichlet(s).
RealMatrix random_stochastic(Index dOut, Index dIn, ColumnLaw law, double s, RngStream& rng);

struct ColumnCovarianceStats {
  double same_row = 0;  // cov[T_{j i1}, T_{j i2}], i1 != i2, averaged over index pairs
  double same_row_se = 0;
  double cross = 0;     // cov[T_{j1 i1}, T_{j2 i2}], j1 != j2, i1 != i2
  double cross_se = 0;
  Index samples = 0;
};

/// Empirical covariances between entries of different columns, pooled over all
/// qualifying index pairs; standard errors from the per-sample pooled products.
ColumnCovarianceStats column_covariance_stats(const std::vector<RealMatrix>& samples);

/// eta_j = Tr(L_j diag(p)) over the d-1 diagonal generators; invertible affine
/// coordinates on the simplex.
RealVector prob_to_bloch(const RealVector& p);
RealVector bloch_to_prob(const RealVector& eta);

struct ClassicalAffineForm {
  RealVector chi;   // length d-1; zero iff T bistochastic
  RealMatrix C;     // (d-1) x (d-1)
  RealMatrix full;  // d x d with first row (1, 0, ..., 0)
};

/// Affine form of a square stochastic matrix in the Bloch coordinates:
/// eta' = C eta + chi. C coincides with the top-left block of the channel
/// Q-matrix when T = super_decohere(Phi).
ClassicalAffineForm stochastic_to_affine(const RealMatrix& t);

}  // namespace qchan
