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

#include <optional>
#include <string>

#include "qchan/channel.hpp"
#include "qchan/rng.hpp"

namespace qchan {

enum class EnsembleKind {
  Choi,
  Kraus,
  Stinespring,
  Lebesgue,
  InducedChoi,
  MixedEnv,
  SinkhornBistochastic,
  MixedUnitary,
  Unistochastic,
  DephasedPovm,
};

enum class StateEnsemble { Bures, FussCatalan };
enum class EnvKind { HsRandom, MaximallyMixed };
enum class WeightScheme { Uniform, Dirichlet };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Lebesgue;
  Index d1 = 2;
  Index d2 = 2;
  Index M = 0;                  // environment / Kraus count where applicable
  StateEnsemble state = StateEnsemble::Bures;
  Index fc_order = 1;           // induced-choi fuss-catalan order
  EnvKind env = EnvKind::HsRandom;
  WeightScheme weights = WeightScheme::Uniform;
  double weight_s = 1.0;        // Dirichlet parameter for mixed-unitary weights
  Index k = 1;                  // unistochastic / dephased-povm
  Index n = 1;                  // dephased-povm Wishart parameter
  double sinkhorn_tol = 1e-10;
  int sinkhorn_max_iter = 10000;
};

EnsembleKind ensemble_kind_from_string(const std::string& name);
std::string to_string(EnsembleKind kind);

/// Validates spec fields against sampler preconditions; throws DimensionError
/// naming the offending field.
void check_ensemble_spec(const EnsembleSpec& spec);

QuantumChannel sample_channel(const EnsembleSpec& spec, RngStream& rng);

/// W ~ Wishart(d1 d2, M), H = [Tr (x) id] W, J = (1 (x) H^{-1/2}) W (1 (x) H^{-1/2}).
QuantumChannel sample_choi(Index d1, Index d2, Index m, RngStream& rng);

/// G_i i.i.d. Ginibre d2 x d1, H = sum G_i^dag G_i, A_i = G_i H^{-1/2}.
QuantumChannel sample_kraus(Index d1, Index d2, Index m, RngStream& rng);

/// V Haar isometry C^{d1} -> C^{d2} (x) C^{M}.
QuantumChannel sample_stinespring(Index d1, Index d2, Index m, RngStream& rng);

/// Flat measure: the Kraus construction at M = d1 d2.
QuantumChannel sample_lebesgue(Index d1, Index d2, RngStream& rng);

/// Random PSD matrix of side d^2 from a state ensemble, normalized to a Choi
/// matrix by the (1 (x) H^{-1/2}) rescaling.
QuantumChannel sample_induced_choi(Index d, StateEnsemble state, Index fcOrder, RngStream& rng);

/// J = U^R (1_d (x) sigma) (U^R)^dag with U Haar on d^2; sigma defaults to an
/// HS-random environment state. Exactly TP in exact arithmetic; a rescale is
/// applied only if floating-point drift exceeds 1e-8.
QuantumChannel sample_mixed_env(Index d, const std::optional<Matrix>& sigma, RngStream& rng);

struct SinkhornResult {
  QuantumChannel channel;
  int iterations = 0;
  double tp_defect = 0;
  double unitality_defect = 0;
};

/// Alternates the two partial-trace normalizations starting from J0 until both
/// defects drop below tol (operator norm). Throws NumericalError with the
/// final defects if maxIter is exceeded.
SinkhornResult sinkhorn_bistochastic_from(Matrix j0, Index d, double tol, int maxIter);

/// Sinkhorn iteration started from a Wishart(d^2, d^2) matrix.
SinkhornResult sample_sinkhorn_bistochastic(Index d, double tol, int maxIter, RngStream& rng);

struct MixedUnitaryWeights {
  WeightScheme scheme = WeightScheme::Uniform;
  double s = 1.0;                       // Dirichlet parameter
  std::optional<RealVector> fixed;      // overrides scheme when set
};

/// Kraus set {sqrt(p_i) U_i} with independent Haar unitaries; bistochastic.
QuantumChannel sample_mixed_unitary(Index d, Index m, const MixedUnitaryWeights& weights,
                                    RngStream& rng);

/// Phi(rho) = [id (x) Tr_M](U (rho (x) 1_M/M) U^dag) with M = k d, U Haar on d*M.
QuantumChannel sample_unistochastic(Index d, Index k, RngStream& rng);

/// Phi ~ Choi ensemble (d, k; n) followed by output dephasing (diag o Phi).
QuantumChannel sample_dephased_povm(Index d, Index k, Index n, RngStream& rng);

}  // namespace qchan
