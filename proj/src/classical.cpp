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

#include "qchan/classical.hpp"

#include <cmath>

#include "qchan/ensembles.hpp"

namespace qchan {

RealMatrix super_decohere(const QuantumChannel& channel) {
  const Index d1 = channel.dim_in(), d2 = channel.dim_out();
  const Matrix& j = channel.choi();
  RealMatrix t(d2, d1);
  for (Index a = 0; a < d2; ++a)
    for (Index i = 0; i < d1; ++i) t(a, i) = j(a * d1 + i, a * d1 + i).real();
  return t;
}

bool is_column_stochastic(const RealMatrix& t, double tol) {
  if (t.minCoeff() < -tol) return false;
  for (Index i = 0; i < t.cols(); ++i)
    if (std::abs(t.col(i).sum() - 1.0) > tol) return false;
  return true;
}

bool is_bistochastic(const RealMatrix& t, double tol) {
  if (!is_column_stochastic(t, tol)) return false;
  for (Index i = 0; i < t.rows(); ++i)
    if (std::abs(t.row(i).sum() - 1.0) > tol) return false;
  return true;
}

Matrix decohere_interpolate(const Matrix& j, double b) {
  require(b >= 0.0 && b <= 1.0, "decohere_interpolate: b must lie in [0, 1]");
  Matrix out = b * j;
  out.diagonal() = j.diagonal();
  return out;
}

RealMatrix random_stochastic(Index dOut, Index dIn, ColumnLaw law, double s, RngStream& rng) {
  require(dOut >= 2 && dIn >= 1, "random_stochastic: bad dimensions");
  const double shape = (law == ColumnLaw::Uniform) ? 1.0 : s;
  require(shape > 0, "random_stochastic: s must be positive");
  RealMatrix t(dOut, dIn);
  for (Index i = 0; i < dIn; ++i) t.col(i) = dirichlet(dOut, shape, rng);
  return t;
}

ColumnCovarianceStats column_covariance_stats(const std::vector<RealMatrix>& samples) {
  require(samples.size() >= 2, "column_covariance_stats: need at least two samples");
  const Index d2 = samples[0].rows(), d1 = samples[0].cols();
  require(d1 >= 2, "column_covariance_stats: need at least two columns");
  for (const RealMatrix& t : samples)
    require(t.rows() == d2 && t.cols() == d1, "column_covariance_stats: shape mismatch");
  const auto n = static_cast<Index>(samples.size());

  RealMatrix mean = RealMatrix::Zero(d2, d1);
  for (const RealMatrix& t : samples) mean += t;
  mean /= static_cast<double>(n);

  // Per-sample products pooled over qualifying index pairs keep the standard
  // error honest despite correlations between pairs.
  RealVector sameRow(n), cross(n);
  for (Index s = 0; s < n; ++s) {
    const RealMatrix c = samples[s] - mean;
    double accSame = 0, accCross = 0;
    Index nSame = 0, nCross = 0;
    for (Index i1 = 0; i1 < d1; ++i1)
      for (Index i2 = 0; i2 < d1; ++i2) {
        if (i1 == i2) continue;
        for (Index j1 = 0; j1 < d2; ++j1) {
          accSame += c(j1, i1) * c(j1, i2);
          ++nSame;
          for (Index j2 = 0; j2 < d2; ++j2) {
            if (j1 == j2) continue;
            accCross += c(j1, i1) * c(j2, i2);
            ++nCross;
          }
        }
      }
    sameRow(s) = accSame / static_cast<double>(nSame);
    cross(s) = accCross / static_cast<double>(nCross);
  }

  ColumnCovarianceStats stats;
  stats.samples = n;
  stats.same_row = sameRow.mean();
  stats.cross = cross.mean();
  const double vSame = (sameRow.array() - stats.same_row).square().sum() / static_cast<double>(n - 1);
  const double vCross = (cross.array() - stats.cross).square().sum() / static_cast<double>(n - 1);
  stats.same_row_se = std::sqrt(vSame / static_cast<double>(n));
  stats.cross_se = std::sqrt(vCross / static_cast<double>(n));
  return stats;
}

RealVector prob_to_bloch(const RealVector& p) {
  const Index d = p.size();
  require(d >= 2, "prob_to_bloch: need d >= 2");
  const GeneratorBasis basis = gellmann_basis(d);
  RealVector eta(d - 1);
  for (Index l = 0; l < d - 1; ++l) {
    double acc = 0;
    for (Index k = 0; k < d; ++k) acc += basis.generators[l](k, k).real() * p(k);
    eta(l) = acc;
  }
  return eta;
}

RealVector bloch_to_prob(const RealVector& eta) {
  const Index d = eta.size() + 1;
  const GeneratorBasis basis = gellmann_basis(d);
  RealVector p = RealVector::Constant(d, 1.0 / static_cast<double>(d));
  for (Index l = 0; l < d - 1; ++l)
    for (Index k = 0; k < d; ++k)
      p(k) += eta(l) * basis.generators[l](k, k).real() / static_cast<double>(d);
  return p;
}

ClassicalAffineForm stochastic_to_affine(const RealMatrix& t) {
  const Index d = t.rows();
  require(t.cols() == d, "stochastic_to_affine: matrix must be square");
  require(d >= 2, "stochastic_to_affine: need d >= 2");
  // Rows of S are (1,...,1) and the generator diagonals; S S^T = d 1, so
  // full = (1/d) S T S^T is the affine form and is similar to T.
  const GeneratorBasis basis = gellmann_basis(d);
  RealMatrix s(d, d);
  s.row(0).setOnes();
  for (Index l = 0; l < d - 1; ++l)
    for (Index k = 0; k < d; ++k) s(l + 1, k) = basis.generators[l](k, k).real();
  ClassicalAffineForm form;
  form.full = (s * t * s.transpose()) / static_cast<double>(d);
  form.chi = form.full.col(0).tail(d - 1);
  form.C = form.full.bottomRightCorner(d - 1, d - 1);
  return form;
}

}  // namespace qchan
