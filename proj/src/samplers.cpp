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

#include "qchan/samplers.hpp"

#include <cmath>

#include "qchan/ensembles.hpp"

namespace qchan {

namespace {

// (1 (x) A) X (1 (x) A) for Hermitian A acting on the second factor of
// M_{dA} (x) M_{dB}; blockwise, avoiding the Kronecker product.
Matrix conjugate_second_factor(const Matrix& x, const Matrix& a, Index dA, Index dB) {
  Matrix out(x.rows(), x.cols());
  for (Index i = 0; i < dA; ++i)
    for (Index j = 0; j < dA; ++j)
      out.block(i * dB, j * dB, dB, dB) = a * x.block(i * dB, j * dB, dB, dB) * a;
  return out;
}

// (A (x) 1) X (A (x) 1) for Hermitian A acting on the first factor.
Matrix conjugate_first_factor(const Matrix& x, const Matrix& a, Index dA, Index dB) {
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (Index i = 0; i < dA; ++i)
    for (Index j = 0; j < dA; ++j) {
      if (a(i, j) == Complex(0, 0)) continue;
      for (Index k = 0; k < dA; ++k)
        for (Index l = 0; l < dA; ++l) {
          if (a(k, l) == Complex(0, 0)) continue;
          out.block(i * dB, l * dB, dB, dB) +=
              a(i, j) * a(k, l) * x.block(j * dB, k * dB, dB, dB);
        }
    }
  return out;
}

void check_m(Index d1, Index d2, Index m, const char* who) {
  require(m >= 1, std::string(who) + ": M must be a positive integer");
  require(m * d2 >= d1, std::string(who) + ": need M * d2 >= d1");
}

}  // namespace

QuantumChannel sample_choi(Index d1, Index d2, Index m, RngStream& rng) {
  check_m(d1, d2, m, "sample_choi");
  const Matrix w = wishart(d1 * d2, m, rng);
  const Matrix h = partial_trace(w, {d2, d1}, Subsystem::B);
  const Matrix hInvSqrt = psd_inv_sqrt(h);
  Matrix j = conjugate_second_factor(w, hInvSqrt, d2, d1);
  j = ((j + j.adjoint()) * 0.5).eval();
  return QuantumChannel::from_choi(std::move(j), d1, d2);
}

QuantumChannel sample_kraus(Index d1, Index d2, Index m, RngStream& rng) {
  check_m(d1, d2, m, "sample_kraus");
  std::vector<Matrix> g;
  g.reserve(m);
  Matrix h = Matrix::Zero(d1, d1);
  for (Index i = 0; i < m; ++i) {
    g.push_back(ginibre(d2, d1, Field::Complex, rng));
    h.noalias() += g.back().adjoint() * g.back();
  }
  h = ((h + h.adjoint()) * 0.5).eval();
  const Matrix hInvSqrt = psd_inv_sqrt(h);
  std::vector<Matrix> ops;
  ops.reserve(m);
  for (Index i = 0; i < m; ++i) ops.push_back(g[i] * hInvSqrt);
  return QuantumChannel::from_kraus(std::move(ops));
}

QuantumChannel sample_stinespring(Index d1, Index d2, Index m, RngStream& rng) {
  check_m(d1, d2, m, "sample_stinespring");
  Matrix v = haar_isometry(d2 * m, d1, rng);
  return QuantumChannel::from_stinespring(std::move(v), d1, d2);
}

QuantumChannel sample_lebesgue(Index d1, Index d2, RngStream& rng) {
  return sample_kraus(d1, d2, d1 * d2, rng);
}

QuantumChannel sample_induced_choi(Index d, StateEnsemble state, Index fcOrder, RngStream& rng) {
  require(d >= 2, "sample_induced_choi: d must be at least 2");
  Matrix w;
  if (state == StateEnsemble::Bures)
    w = bures_state(d * d, rng);
  else
    w = fuss_catalan_state(d * d, fcOrder, rng);
  const Matrix h = partial_trace(w, {d, d}, Subsystem::B);
  const Matrix hInvSqrt = psd_inv_sqrt(h);
  Matrix j = conjugate_second_factor(w, hInvSqrt, d, d);
  j = ((j + j.adjoint()) * 0.5).eval();
  return QuantumChannel::from_choi(std::move(j), d, d);
}

QuantumChannel sample_mixed_env(Index d, const std::optional<Matrix>& sigma, RngStream& rng) {
  require(d >= 2, "sample_mixed_env: d must be at least 2");
  Matrix env = sigma.value_or(Matrix());
  if (env.size() == 0) env = induced_state(d, d, rng);
  require(env.rows() == d && env.cols() == d, "sample_mixed_env: sigma must be d x d");
  const Matrix u = haar_unitary(d * d, rng);
  const Matrix ur = reshuffle(u, {d, d}, {d, d});
  const Matrix sq = psd_sqrt(env);
  // J = U^R (1 (x) sigma) (U^R)^dag = C C^dag with C = U^R (1 (x) sqrt(sigma)).
  Matrix c(d * d, d * d);
  for (Index i = 0; i < d; ++i) c.middleCols(i * d, d) = ur.middleCols(i * d, d) * sq;
  Matrix j(d * d, d * d);
  j.noalias() = c * c.adjoint();
  j = ((j + j.adjoint()) * 0.5).eval();
  // Exactly TP in exact arithmetic; rescale only on visible drift.
  const Matrix h = partial_trace(j, {d, d}, Subsystem::B);
  if ((h - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8) {
    const Matrix hInvSqrt = psd_inv_sqrt(h);
    j = conjugate_second_factor(j, hInvSqrt, d, d);
    j = ((j + j.adjoint()) * 0.5).eval();
  }
  return QuantumChannel::from_choi(std::move(j), d, d);
}

SinkhornResult sinkhorn_bistochastic_from(Matrix j0, Index d, double tol, int maxIter) {
  require(tol > 0, "sinkhorn: tol must be positive");
  require(j0.rows() == d * d && j0.cols() == d * d, "sinkhorn: matrix side must be d^2");
  Matrix j = std::move(j0);
  auto defects = [&](const Matrix& x) {
    const Matrix tp = partial_trace(x, {d, d}, Subsystem::B);
    const Matrix un = partial_trace(x, {d, d}, Subsystem::A);
    const double tpd = operator_norm(tp - Matrix::Identity(d, d));
    const double und = operator_norm(un - Matrix::Identity(d, d));
    return std::make_pair(tpd, und);
  };
  int it = 0;
  auto [tpd, und] = defects(j);
  while ((tpd > tol || und > tol) && it < maxIter) {
    const Matrix h = partial_trace(j, {d, d}, Subsystem::B);
    j = conjugate_second_factor(j, psd_inv_sqrt(h), d, d);
    const Matrix e = partial_trace(j, {d, d}, Subsystem::A);
    j = conjugate_first_factor(j, psd_inv_sqrt(e), d, d);
    j = ((j + j.adjoint()) * 0.5).eval();
    ++it;
    std::tie(tpd, und) = defects(j);
  }
  if (tpd > tol || und > tol)
    throw NumericalError("sinkhorn: no convergence after " + std::to_string(it) +
                         " sweeps (tp defect " + std::to_string(tpd) + ", unitality defect " +
                         std::to_string(und) + ")");
  SinkhornResult result{QuantumChannel::from_choi(std::move(j), d, d), it, tpd, und};
  return result;
}

SinkhornResult sample_sinkhorn_bistochastic(Index d, double tol, int maxIter, RngStream& rng) {
  require(d >= 2, "sample_sinkhorn_bistochastic: d must be at least 2");
  Matrix w = wishart(d * d, d * d, rng);
  return sinkhorn_bistochastic_from(std::move(w), d, tol, maxIter);
}

QuantumChannel sample_mixed_unitary(Index d, Index m, const MixedUnitaryWeights& weights,
                                    RngStream& rng) {
  require(d >= 2 && m >= 1, "sample_mixed_unitary: need d >= 2 and M >= 1");
  RealVector p;
  if (weights.fixed) {
    p = *weights.fixed;
    require(p.size() == m, "sample_mixed_unitary: fixed weights must have length M");
    require(p.minCoeff() >= 0 && std::abs(p.sum() - 1.0) < 1e-12,
            "sample_mixed_unitary: weights must lie in the simplex");
  } else if (weights.scheme == WeightScheme::Uniform) {
    p = RealVector::Constant(m, 1.0 / static_cast<double>(m));
  } else {
    p = dirichlet(m, weights.s, rng);
  }
  std::vector<Matrix> ops;
  ops.reserve(m);
  for (Index i = 0; i < m; ++i) ops.push_back(std::sqrt(p(i)) * haar_unitary(d, rng));
  return QuantumChannel::from_kraus(std::move(ops));
}

QuantumChannel sample_unistochastic(Index d, Index k, RngStream& rng) {
  require(d >= 2 && k >= 1, "sample_unistochastic: need d >= 2 and k >= 1");
  const Index m = k * d;
  const Matrix u = haar_unitary(d * m, rng);
  // A_{ij} = (1 (x) <i|) U (1 (x) |j>) / sqrt(M), i.e. the (i,j) environment
  // block of U, over i, j in [M].
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<Matrix> ops;
  ops.reserve(m * m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      Matrix a(d, d);
      for (Index s = 0; s < d; ++s)
        for (Index t = 0; t < d; ++t) a(s, t) = u(s * m + i, t * m + j) * norm;
      ops.push_back(std::move(a));
    }
  return QuantumChannel::from_kraus(std::move(ops));
}

QuantumChannel sample_dephased_povm(Index d, Index k, Index n, RngStream& rng) {
  require(n >= 1, "sample_dephased_povm: n must be a positive integer");
  require(n * k >= d, "sample_dephased_povm: need n * k >= d");
  const QuantumChannel phi = sample_choi(d, k, n, rng);
  const Matrix& j = phi.choi();
  // Output dephasing keeps only the diagonal blocks of the output factor.
  Matrix jd = Matrix::Zero(j.rows(), j.cols());
  for (Index a = 0; a < k; ++a)
    jd.block(a * d, a * d, d, d) = j.block(a * d, a * d, d, d);
  return QuantumChannel::from_choi(std::move(jd), d, k);
}

void check_ensemble_spec(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::Choi:
    case EnsembleKind::Kraus:
    case EnsembleKind::Stinespring:
      require(spec.M >= 1, "ensemble.M: must be a positive integer");
      require(spec.M * spec.d2 >= spec.d1, "ensemble.M: need M * d2 >= d1");
      break;
    case EnsembleKind::Lebesgue:
      require(spec.d1 >= 1 && spec.d2 >= 1, "ensemble.d1/d2: must be positive");
      break;
    case EnsembleKind::InducedChoi:
      require(spec.d1 == spec.d2, "ensemble: induced-choi requires d1 == d2");
      require(spec.d1 >= 2, "ensemble.d1: must be at least 2");
      require(spec.fc_order >= 1, "ensemble.fc_order: must be a positive integer");
      break;
    case EnsembleKind::MixedEnv:
    case EnsembleKind::SinkhornBistochastic:
      require(spec.d1 == spec.d2, "ensemble: requires d1 == d2");
      require(spec.d1 >= 2, "ensemble.d1: must be at least 2");
      break;
    case EnsembleKind::MixedUnitary:
      require(spec.d1 == spec.d2, "ensemble: mixed-unitary requires d1 == d2");
      require(spec.M >= 1, "ensemble.M: must be a positive integer");
      require(spec.weight_s > 0, "ensemble.weight_s: must be positive");
      break;
    case EnsembleKind::Unistochastic:
      require(spec.d1 == spec.d2, "ensemble: unistochastic requires d1 == d2");
      require(spec.k >= 1, "ensemble.k: must be a positive integer");
      break;
    case EnsembleKind::DephasedPovm:
      require(spec.n >= 1, "ensemble.n: must be a positive integer");
      require(spec.n * spec.k >= spec.d1, "ensemble.n: need n * k >= d");
      break;
  }
}

QuantumChannel sample_channel(const EnsembleSpec& spec, RngStream& rng) {
  check_ensemble_spec(spec);
  switch (spec.kind) {
    case EnsembleKind::Choi: return sample_choi(spec.d1, spec.d2, spec.M, rng);
    case EnsembleKind::Kraus: return sample_kraus(spec.d1, spec.d2, spec.M, rng);
    case EnsembleKind::Stinespring: return sample_stinespring(spec.d1, spec.d2, spec.M, rng);
    case EnsembleKind::Lebesgue: return sample_lebesgue(spec.d1, spec.d2, rng);
    case EnsembleKind::InducedChoi:
      return sample_induced_choi(spec.d1, spec.state, spec.fc_order, rng);
    case EnsembleKind::MixedEnv: {
      std::optional<Matrix> sigma;
      if (spec.env == EnvKind::MaximallyMixed)
        sigma = Matrix::Identity(spec.d1, spec.d1) / static_cast<double>(spec.d1);
      return sample_mixed_env(spec.d1, sigma, rng);
    }
    case EnsembleKind::SinkhornBistochastic:
      return sample_sinkhorn_bistochastic(spec.d1, spec.sinkhorn_tol, spec.sinkhorn_max_iter, rng)
          .channel;
    case EnsembleKind::MixedUnitary: {
      MixedUnitaryWeights w;
      w.scheme = spec.weights;
      w.s = spec.weight_s;
      return sample_mixed_unitary(spec.d1, spec.M, w, rng);
    }
    case EnsembleKind::Unistochastic: return sample_unistochastic(spec.d1, spec.k, rng);
    case EnsembleKind::DephasedPovm:
      return sample_dephased_povm(spec.d1, spec.k, spec.n, rng);
  }
  throw std::logic_error("sample_channel: unhandled ensemble kind");
}

EnsembleKind ensemble_kind_from_string(const std::string& name) {
  if (name == "choi") return EnsembleKind::Choi;
  if (name == "kraus") return EnsembleKind::Kraus;
  if (name == "stinespring") return EnsembleKind::Stinespring;
  if (name == "lebesgue") return EnsembleKind::Lebesgue;
  if (name == "induced-choi") return EnsembleKind::InducedChoi;
  if (name == "mixed-env") return EnsembleKind::MixedEnv;
  if (name == "sinkhorn-bistochastic") return EnsembleKind::SinkhornBistochastic;
  if (name == "mixed-unitary") return EnsembleKind::MixedUnitary;
  if (name == "unistochastic") return EnsembleKind::Unistochastic;
  if (name == "dephased-povm") return EnsembleKind::DephasedPovm;
  throw DimensionError("ensemble.kind: unknown ensemble '" + name + "'");
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::Choi: return "choi";
    case EnsembleKind::Kraus: return "kraus";
    case EnsembleKind::Stinespring: return "stinespring";
    case EnsembleKind::Lebesgue: return "lebesgue";
    case EnsembleKind::InducedChoi: return "induced-choi";
    case EnsembleKind::MixedEnv: return "mixed-env";
    case EnsembleKind::SinkhornBistochastic: return "sinkhorn-bistochastic";
    case EnsembleKind::MixedUnitary: return "mixed-unitary";
    case EnsembleKind::Unistochastic: return "unistochastic";
    case EnsembleKind::DephasedPovm: return "dephased-povm";
  }
  return "?";
}

}  // namespace qchan
