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

#include "qchan/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/ensembles.hpp"

namespace qchan {

namespace {
constexpr double kPerronTol = 1e-6;
constexpr Index kDenseEigMaxSide = 256;  // superoperator side for the dense path
}  // namespace

SpectrumSummary summarize_spectrum(Vector eigenvalues) {
  SpectrumSummary s;
  s.eigenvalues = std::move(eigenvalues);
  const Index n = s.eigenvalues.size();
  require(n >= 1, "summarize_spectrum: empty spectrum");
  Index pi = 0;
  for (Index i = 1; i < n; ++i)
    if (s.eigenvalues(i).real() > s.eigenvalues(pi).real()) pi = i;
  s.perron_index = pi;
  s.perron_residual = std::abs(s.eigenvalues(pi) - Complex(1, 0));
  if (s.perron_residual > kPerronTol)
    throw NumericalError("summarize_spectrum: no eigenvalue within 1e-6 of 1");
  double bulk = 0, scale = 0;
  for (Index i = 0; i < n; ++i) {
    const double mod = std::abs(s.eigenvalues(i));
    scale = std::max(scale, mod);
    if (i != pi) bulk = std::max(bulk, mod);
  }
  s.bulk_radius = bulk;
  s.gap = 1.0 - bulk;
  int cnt = 0;
  for (Index i = 0; i < n; ++i)
    if (std::abs(s.eigenvalues(i).imag()) <= 1e-9 * scale) ++cnt;
  s.real_count = cnt;
  return s;
}

SpectrumSummary superop_spectrum(const QuantumChannel& channel) {
  require(channel.dim_in() == channel.dim_out(), "superop_spectrum: square channel required");
  return summarize_spectrum(eigenvalues(real_superop(channel)));
}

SpectrumSummary stochastic_spectrum(const RealMatrix& t) {
  require(t.rows() == t.cols(), "stochastic_spectrum: square matrix required");
  return summarize_spectrum(eigenvalues(t));
}

int real_eigenvalue_count(const SpectrumSummary& summary, double imagTol) {
  double scale = 0;
  for (Index i = 0; i < summary.eigenvalues.size(); ++i)
    scale = std::max(scale, std::abs(summary.eigenvalues(i)));
  int cnt = 0;
  for (Index i = 0; i < summary.eigenvalues.size(); ++i)
    if (std::abs(summary.eigenvalues(i).imag()) <= imagTol * scale) ++cnt;
  return cnt;
}

double fraction_in_disk(const SpectrumSummary& summary, double radius) {
  require(radius > 0, "fraction_in_disk: radius must be positive");
  const Index n = summary.eigenvalues.size();
  if (n <= 1) return 1.0;
  Index inside = 0;
  for (Index i = 0; i < n; ++i) {
    if (i == summary.perron_index) continue;
    if (std::abs(summary.eigenvalues(i)) <= radius) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(n - 1);
}

namespace {

InvariantStateResult finish_invariant_state(const QuantumChannel& channel, Matrix rho,
                                            int iterations) {
  const Index d = channel.dim_in();
  rho = ((rho + rho.adjoint()) * 0.5).eval();
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-12)
    throw NumericalError("invariant_state: traceless fixed-point candidate");
  rho /= tr;
  HermitianEig eig = eig_hermitian(rho);
  if (eig.values(0) < -1e-8)
    throw NumericalError("invariant_state: candidate has negativity beyond -1e-8");
  // Clip the tiny negative tail and renormalize.
  RealVector lam = eig.values.cwiseMax(0.0);
  lam /= lam.sum();
  rho = eig.vectors * lam.asDiagonal() * eig.vectors.adjoint();
  InvariantStateResult result;
  result.state = rho;
  result.iterations = iterations;
  result.residual = (channel.apply(rho) - rho).norm();
  double dist = 0;
  for (Index i = 0; i < lam.size(); ++i) dist += std::abs(lam(i) - 1.0 / static_cast<double>(d));
  result.distance_to_mixed = dist;
  return result;
}

}  // namespace

InvariantStateResult invariant_state(const QuantumChannel& channel, double degeneracyTol) {
  require(channel.dim_in() == channel.dim_out(), "invariant_state: square channel required");
  const Index d = channel.dim_in();
  const Index n = d * d;
  if (n <= kDenseEigMaxSide) {
    GeneralEig eig = eig_general(channel.superop());
    Index pi = 0;
    for (Index i = 1; i < n; ++i)
      if (eig.values(i).real() > eig.values(pi).real()) pi = i;
    if (std::abs(eig.values(pi) - Complex(1, 0)) > kPerronTol)
      throw NumericalError("invariant_state: no eigenvalue within 1e-6 of 1");
    double second = 0;
    for (Index i = 0; i < n; ++i)
      if (i != pi) second = std::max(second, std::abs(eig.values(i)));
    if (second > 1.0 - degeneracyTol)
      throw NumericalError("invariant_state: degenerate Perron eigenvalue, |lambda_2| = " +
                           std::to_string(second));
    Matrix rho = devectorize(eig.vectors.col(pi), d, d);
    // The eigenvector carries an arbitrary global phase; rotate it onto the
    // positive trace direction before Hermitizing.
    const Complex tr = rho.trace();
    if (std::abs(tr) > 0) rho *= std::conj(tr) / std::abs(tr);
    return finish_invariant_state(channel, std::move(rho), 0);
  }

  // Iterative path: trace is preserved exactly, so rho <- Phi(rho) contracts
  // onto the fixed point at the bulk-radius rate.
  Matrix rho = Matrix::Identity(d, d) / static_cast<double>(d);
  constexpr int kMaxIter = 5000;
  constexpr double kResidTol = 1e-10;
  for (int it = 1; it <= kMaxIter; ++it) {
    Matrix next = channel.apply(rho);
    next = ((next + next.adjoint()) * 0.5).eval();
    const double step = (next - rho).norm();
    rho = std::move(next);
    if (step < kResidTol) return finish_invariant_state(channel, std::move(rho), it);
  }
  throw NumericalError(
      "invariant_state: fixed-point iteration did not converge (degenerate or near-degenerate "
      "Perron eigenvalue)");
}

RealVector deflated_singular_values(const Matrix& x, const Vector& perronVector) {
  require(x.rows() == x.cols() && x.rows() == perronVector.size(),
          "deflated_singular_values: dimension mismatch");
  if (std::abs(perronVector.norm() - 1.0) > 1e-8)
    throw DimensionError("deflated_singular_values: perron vector must be normalized");
  const Vector& v = perronVector;
  const Vector xv = x * v;
  const Vector xhv = x.adjoint() * v;
  const Complex vxv = v.dot(xv);  // v^dag X v
  Matrix y = x;
  y.noalias() -= v * xhv.adjoint();      // v (v^dag X)
  y.noalias() -= xv * v.adjoint();       // (X v) v^dag
  y.noalias() += vxv * (v * v.adjoint());
  return singular_values(y);
}

PurityUnitarity purity_unitarity(const QuantumChannel& channel, int nProbes, RngStream& rng) {
  require(nProbes >= 1, "purity_unitarity: need at least one probe state");
  const Index d1 = channel.dim_in();
  const Matrix phiMixed =
      channel.apply(Matrix::Identity(d1, d1) / static_cast<double>(d1));
  double sp = 0, sp2 = 0, su = 0, su2 = 0;
  const double uScale = static_cast<double>(d1) / static_cast<double>(d1 - 1);
  for (int k = 0; k < nProbes; ++k) {
    Vector psi(d1);
    for (Index i = 0; i < d1; ++i) psi(i) = rng.cnormal();
    psi.normalize();
    const Matrix out = channel.apply(psi * psi.adjoint());
    const double p = (out * out).trace().real();
    const Matrix diff = out - phiMixed;
    const double u = uScale * (diff * diff).trace().real();
    sp += p;
    sp2 += p * p;
    su += u;
    su2 += u * u;
  }
  const double n = nProbes;
  PurityUnitarity result;
  result.purity = sp / n;
  result.unitarity = su / n;
  if (nProbes > 1) {
    result.purity_se = std::sqrt(std::max(0.0, (sp2 / n - result.purity * result.purity) / (n - 1)));
    result.unitarity_se =
        std::sqrt(std::max(0.0, (su2 / n - result.unitarity * result.unitarity) / (n - 1)));
  }
  return result;
}

std::pair<double, double> purity_unitarity_oracle(Index d2, Index m) {
  const double dd = static_cast<double>(d2), mm = static_cast<double>(m);
  const double p = (dd + mm) / (dd * mm + 1.0);
  const double u = mm * (dd * dd - 1.0) / (dd * mm * dd * mm - 1.0);
  return {p, u};
}

double trace_product_oracle(const Matrix& a, const Matrix& b, Index d1, Index d2, Index m) {
  require(a.rows() == d1 && a.cols() == d1 && b.rows() == d1 && b.cols() == d1,
          "trace_product_oracle: A, B must be d1 x d1");
  const double dd = static_cast<double>(d2), mm = static_cast<double>(m);
  const Complex trA = a.trace(), trB = b.trace(), trAB = (a * b).trace();
  const Complex num = trA * trB * dd * (mm * mm - 1.0) + trAB * mm * (dd * dd - 1.0);
  return (num / (dd * mm * dd * mm - 1.0)).real();
}

CoherenceMeasures coherence_measures(const Matrix& j) {
  require(j.rows() == j.cols(), "coherence_measures: square matrix required");
  CoherenceMeasures c;
  const Index n = j.rows();
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      if (i == k) continue;
      const double m = std::abs(j(i, k));
      c.c1 += m;
      c.c2 += m * m;
    }
  const double trace = j.trace().real();
  auto entropy = [](const RealVector& w, double norm) {
    double s = 0;
    for (Index i = 0; i < w.size(); ++i) {
      const double p = w(i) / norm;
      if (p > 0) s -= p * std::log(p);
    }
    return s;
  };
  const RealVector diag = j.diagonal().real().cwiseMax(0.0);
  const RealVector eigs = eigenvalues_hermitian(j).cwiseMax(0.0);
  c.ce = trace * (entropy(diag, trace) - entropy(eigs, trace));
  return c;
}

Matrix non_unitality_shift(const QuantumChannel& channel, double t) {
  const Index d1 = channel.dim_in(), d2 = channel.dim_out();
  const Matrix phiMixed = channel.apply(Matrix::Identity(d1, d1) / static_cast<double>(d1));
  Matrix shift = std::sqrt(t) * static_cast<double>(d1) * static_cast<double>(d2) *
                 (phiMixed - Matrix::Identity(d2, d2) / static_cast<double>(d2));
  return ((shift + shift.adjoint()) * 0.5).eval();
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double catalan(int k) { return binomial(2 * k, k) / (k + 1.0); }

}  // namespace

double semicircle_moment(int k) {
  require(k >= 0, "semicircle_moment: k must be nonnegative");
  if (k % 2 == 1) return 0.0;
  return catalan(k / 2);
}

double quarter_circle_moment(int k) {
  require(k >= 0, "quarter_circle_moment: k must be nonnegative");
  return std::pow(2.0, k) * std::exp(std::lgamma((k + 1) / 2.0) - std::lgamma(k / 2.0 + 2.0)) /
         std::sqrt(M_PI);
}

double marchenko_pastur_moment(double c, int k) {
  require(k >= 0 && c > 0, "marchenko_pastur_moment: need k >= 0 and c > 0");
  if (k == 0) return 1.0;
  double acc = 0;
  for (int r = 1; r <= k; ++r)
    acc += binomial(k, r) * binomial(k, r - 1) / k * std::pow(c, r);
  return acc;
}

double fuss_catalan_moment(int s, int k) {
  require(s >= 1 && k >= 0, "fuss_catalan_moment: need s >= 1 and k >= 0");
  return binomial((s + 1) * k, k) / (s * k + 1.0);
}

double moment_oracle(SpectralLaw law, int k, double c, int s) {
  switch (law) {
    case SpectralLaw::Semicircle: return semicircle_moment(k);
    case SpectralLaw::QuarterCircle: return quarter_circle_moment(k);
    case SpectralLaw::MarchenkoPastur: return marchenko_pastur_moment(c, k);
    case SpectralLaw::FussCatalan: return fuss_catalan_moment(s, k);
  }
  throw std::logic_error("moment_oracle: unsupported law");
}

ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& dRadiusPairs) {
  require(dRadiusPairs.size() >= 3, "exponent_fit: need at least three points");
  const auto n = static_cast<double>(dRadiusPairs.size());
  double sx = 0, sy = 0;
  for (const auto& [d, r] : dRadiusPairs) {
    require(d > 0 && r > 0, "exponent_fit: dimensions and radii must be positive");
    sx += std::log(d);
    sy += std::log(r);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [d, r] : dRadiusPairs) {
    const double dx = std::log(d) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(r) - my);
  }
  require(sxx > 0, "exponent_fit: need at least two distinct d values");
  ExponentFit fit;
  fit.alpha = sxy / sxx;
  double ssr = 0;
  for (const auto& [d, r] : dRadiusPairs) {
    const double pred = my + fit.alpha * (std::log(d) - mx);
    const double resid = std::log(r) - pred;
    ssr += resid * resid;
  }
  if (dRadiusPairs.size() > 2)
    fit.stderr_alpha = std::sqrt(ssr / (n - 2.0) / sxx);
  return fit;
}

}  // namespace qchan
