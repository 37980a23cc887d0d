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

#include <utility>
#include <vector>

#include "qchan/channel.hpp"
#include "qchan/rng.hpp"

namespace qchan {

struct SpectrumSummary {
  Vector eigenvalues;
  Index perron_index = 0;
  double perron_residual = 0;  // |lambda_P - 1|
  double bulk_radius = 0;      // max modulus excluding the Perron eigenvalue
  double gap = 0;              // 1 - bulk_radius
  int real_count = 0;          // |Im| <= 1e-9 * spectral scale, Perron included
};

/// Classifies a complete eigenvalue list. The Perron eigenvalue is the one of
/// maximal real part and must lie within 1e-6 of 1.
SpectrumSummary summarize_spectrum(Vector eigenvalues);

/// Full spectrum of the superoperator of a square channel, computed from the
/// real affine form (same spectrum, exact conjugation symmetry).
SpectrumSummary superop_spectrum(const QuantumChannel& channel);

/// Spectrum of a square (column-)stochastic matrix.
SpectrumSummary stochastic_spectrum(const RealMatrix& t);

int real_eigenvalue_count(const SpectrumSummary& summary, double imagTol = 1e-9);

/// Fraction of non-Perron eigenvalues with |lambda| <= radius.
double fraction_in_disk(const SpectrumSummary& summary, double radius);

struct InvariantStateResult {
  Matrix state;
  double residual = 0;           // || Phi(rho) - rho ||_2
  double distance_to_mixed = 0;  // || rho - 1/d ||_1
  int iterations = 0;            // 0 for the dense eigenvector path
};

/// Fixed point rho = Phi(rho). Dense eigendecomposition for d^2 <= 256;
/// above that, fixed-point iteration rho <- Phi(rho) from 1/d (the spectral
/// gap of generic channels makes it converge in a handful of steps). Errors
/// on a degenerate Perron eigenvalue (dense: |lambda_2| > 1 - degeneracyTol;
/// iterative: no convergence) and on negativity beyond -1e-8.
InvariantStateResult invariant_state(const QuantumChannel& channel, double degeneracyTol = 1e-6);

/// Singular values of (1 - vv^dag) X (1 - vv^dag) for a unit vector v.
RealVector deflated_singular_values(const Matrix& x, const Vector& perronVector);

struct PurityUnitarity {
  double purity = 0;
  double purity_se = 0;
  double unitarity = 0;
  double unitarity_se = 0;
};

/// Monte Carlo over Haar-random pure probe states of Tr Phi(psi)^2 and
/// (d1/(d1-1)) Tr (Phi(psi) - Phi(1/d1))^2.
PurityUnitarity purity_unitarity(const QuantumChannel& channel, int nProbes, RngStream& rng);

/// Closed forms (d2+M)/(d2 M + 1) and M (d2^2-1)/((d2 M)^2 - 1).
std::pair<double, double> purity_unitarity_oracle(Index d2, Index m);

/// E Tr Phi(A) Phi(B) over the Stinespring ensemble:
/// [(Tr A)(Tr B) d2 (M^2-1) + Tr(AB) M (d2^2-1)] / ((d2 M)^2 - 1).
double trace_product_oracle(const Matrix& a, const Matrix& b, Index d1, Index d2, Index m);

struct CoherenceMeasures {
  double c2 = 0;  // sum_{i != j} |J_ij|^2
  double c1 = 0;  // sum_{i != j} |J_ij|
  double ce = 0;  // S(diag J) - S(J), natural log
};

/// Coherence of a channel from its Choi matrix. The entropic measure is
/// evaluated on J / Tr J and rescaled by Tr J; the difference is invariant
/// under that common normalization, so no convention ambiguity remains.
CoherenceMeasures coherence_measures(const Matrix& j);

/// delta_H = sqrt(t) d1 d2 (Phi(1/d1) - 1/d2), Hermitian.
Matrix non_unitality_shift(const QuantumChannel& channel, double t);

enum class SpectralLaw { Semicircle, QuarterCircle, MarchenkoPastur, FussCatalan };

/// Exact k-th moments of the limiting laws. Semicircle is the radius-2 law
/// (even moments are Catalan numbers); the quarter-circle law is
/// sqrt(4-x^2)/pi on [0,2]; Marchenko-Pastur takes the ratio parameter c;
/// Fuss-Catalan of order s has moments binom((s+1)k, k)/(sk+1).
double semicircle_moment(int k);
double quarter_circle_moment(int k);
double marchenko_pastur_moment(double c, int k);
double fuss_catalan_moment(int s, int k);
double moment_oracle(SpectralLaw law, int k, double c = 1.0, int s = 2);

struct ExponentFit {
  double alpha = 0;
  double stderr_alpha = 0;
};

/// Least-squares slope of log r against log d.
ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& dRadiusPairs);

}  // namespace qchan
