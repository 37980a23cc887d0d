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

#include "qchan/channel.hpp"

#include <cmath>

namespace qchan {

namespace {
constexpr double kConstructTol = 1e-8;
constexpr double kKrausCutoffRel = 1e-12;
constexpr double kCpNegTolRel = 1e-8;
}  // namespace

struct QuantumChannel::Cache {
  mutable std::mutex mu;
  mutable std::optional<std::vector<Matrix>> kraus;
  mutable std::optional<Matrix> choi;
  mutable std::optional<Matrix> superop;
  mutable std::optional<Matrix> stinespring;
};

QuantumChannel::QuantumChannel(Index d1, Index d2, std::shared_ptr<Cache> cache)
    : d1_(d1), d2_(d2), cache_(std::move(cache)) {}

QuantumChannel QuantumChannel::from_kraus(std::vector<Matrix> ops) {
  require(!ops.empty(), "from_kraus: at least one Kraus operator required");
  const Index d2 = ops[0].rows(), d1 = ops[0].cols();
  Matrix sum = Matrix::Zero(d1, d1);
  for (const Matrix& a : ops) {
    require(a.rows() == d2 && a.cols() == d1, "from_kraus: inconsistent operator shapes");
    sum.noalias() += a.adjoint() * a;
  }
  if ((sum - Matrix::Identity(d1, d1)).cwiseAbs().maxCoeff() > kConstructTol)
    throw NumericalError("from_kraus: Kraus operators do not resolve the identity");
  auto cache = std::make_shared<Cache>();
  cache->kraus = std::move(ops);
  return QuantumChannel(d1, d2, std::move(cache));
}

QuantumChannel QuantumChannel::from_choi(Matrix j, Index dimIn, Index dimOut) {
  require(j.rows() == j.cols() && j.rows() == dimIn * dimOut,
          "from_choi: Choi matrix side must be dimOut*dimIn");
  const Matrix h = partial_trace(j, {dimOut, dimIn}, Subsystem::B);
  if ((h - Matrix::Identity(dimIn, dimIn)).cwiseAbs().maxCoeff() > 1e-6)
    throw NumericalError("from_choi: partial trace condition [Tr (x) id]J = 1 violated");
  auto cache = std::make_shared<Cache>();
  cache->choi = std::move(j);
  return QuantumChannel(dimIn, dimOut, std::move(cache));
}

QuantumChannel QuantumChannel::from_superop(Matrix s, Index dimIn, Index dimOut) {
  require(s.rows() == dimOut * dimOut && s.cols() == dimIn * dimIn,
          "from_superop: matrix must be d2^2 x d1^2");
  Matrix j = reshuffle(s, {dimOut, dimOut}, {dimIn, dimIn});
  QuantumChannel ch = from_choi(std::move(j), dimIn, dimOut);
  {
    std::lock_guard<std::mutex> lock(ch.cache_->mu);
    ch.cache_->superop = std::move(s);
  }
  return ch;
}

QuantumChannel QuantumChannel::from_stinespring(Matrix v, Index dimIn, Index dimOut) {
  require(v.cols() == dimIn && v.rows() % dimOut == 0,
          "from_stinespring: isometry must be (d2*M) x d1");
  if ((v.adjoint() * v - Matrix::Identity(dimIn, dimIn)).cwiseAbs().maxCoeff() > kConstructTol)
    throw NumericalError("from_stinespring: V is not an isometry");
  auto cache = std::make_shared<Cache>();
  cache->stinespring = std::move(v);
  return QuantumChannel(dimIn, dimOut, std::move(cache));
}

bool QuantumChannel::has(Rep rep) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  switch (rep) {
    case Rep::Kraus: return cache_->kraus.has_value();
    case Rep::Choi: return cache_->choi.has_value();
    case Rep::Superop: return cache_->superop.has_value();
    case Rep::Stinespring: return cache_->stinespring.has_value();
  }
  return false;
}

namespace {

std::vector<Matrix> kraus_from_stinespring(const Matrix& v, Index d1, Index d2) {
  const Index m = v.rows() / d2;
  std::vector<Matrix> ops(m, Matrix(d2, d1));
  for (Index k = 0; k < m; ++k)
    for (Index a = 0; a < d2; ++a) ops[k].row(a) = v.row(a * m + k);
  return ops;
}

Matrix stinespring_from_kraus(const std::vector<Matrix>& ops, Index d1, Index d2) {
  const Index m = static_cast<Index>(ops.size());
  Matrix v(d2 * m, d1);
  for (Index k = 0; k < m; ++k)
    for (Index a = 0; a < d2; ++a) v.row(a * m + k) = ops[k].row(a);
  return v;
}

Matrix choi_from_kraus(const std::vector<Matrix>& ops, Index d1, Index d2) {
  const Index m = static_cast<Index>(ops.size());
  Matrix k(d2 * d1, m);
  for (Index i = 0; i < m; ++i) k.col(i) = vectorize(ops[i]);
  Matrix j(d2 * d1, d2 * d1);
  j.noalias() = k * k.adjoint();
  j = ((j + j.adjoint()) * 0.5).eval();
  return j;
}

std::vector<Matrix> kraus_from_choi(const Matrix& j, Index d1, Index d2) {
  HermitianEig eig = eig_hermitian(j);
  const Index n = j.rows();
  const double lmax = std::max(eig.values(n - 1), 0.0);
  std::vector<Matrix> ops;
  for (Index i = 0; i < n; ++i) {
    const double lam = eig.values(i);
    if (lam < -kCpNegTolRel * lmax)
      throw NumericalError("kraus_from_choi: Choi matrix is not positive semidefinite");
    if (lam > kKrausCutoffRel * lmax)
      ops.push_back(devectorize(std::sqrt(lam) * eig.vectors.col(i), d2, d1));
  }
  return ops;
}

}  // namespace

const std::vector<Matrix>& QuantumChannel::kraus() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->kraus) {
    if (cache_->stinespring) {
      cache_->kraus = kraus_from_stinespring(*cache_->stinespring, d1_, d2_);
    } else {
      if (!cache_->choi) {
        assert(cache_->superop);
        cache_->choi = reshuffle(*cache_->superop, {d2_, d2_}, {d1_, d1_});
      }
      cache_->kraus = kraus_from_choi(*cache_->choi, d1_, d2_);
    }
  }
  return *cache_->kraus;
}

const Matrix& QuantumChannel::choi() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->choi) {
    if (cache_->superop) {
      cache_->choi = reshuffle(*cache_->superop, {d2_, d2_}, {d1_, d1_});
    } else {
      if (!cache_->kraus) {
        assert(cache_->stinespring);
        cache_->kraus = kraus_from_stinespring(*cache_->stinespring, d1_, d2_);
      }
      cache_->choi = choi_from_kraus(*cache_->kraus, d1_, d2_);
    }
  }
  return *cache_->choi;
}

const Matrix& QuantumChannel::superop() const {
  choi();  // ensure present
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->superop) cache_->superop = reshuffle(*cache_->choi, {d2_, d1_}, {d2_, d1_});
  return *cache_->superop;
}

const Matrix& QuantumChannel::stinespring() const {
  kraus();  // ensure present
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->stinespring)
    cache_->stinespring = stinespring_from_kraus(*cache_->kraus, d1_, d2_);
  return *cache_->stinespring;
}

Index QuantumChannel::env_dim() const { return stinespring().rows() / d2_; }

QuantumChannel QuantumChannel::with(Rep rep) const {
  switch (rep) {
    case Rep::Kraus: kraus(); break;
    case Rep::Choi: choi(); break;
    case Rep::Superop: superop(); break;
    case Rep::Stinespring: stinespring(); break;
  }
  return *this;
}

Matrix QuantumChannel::apply(const Matrix& x) const {
  require(x.rows() == d1_ && x.cols() == d1_, "apply: input must be d1 x d1");
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->kraus) {
    Matrix out = Matrix::Zero(d2_, d2_);
    for (const Matrix& a : *cache_->kraus) out.noalias() += a * x * a.adjoint();
    return out;
  }
  if (cache_->stinespring) {
    const Matrix& v = *cache_->stinespring;
    const Index m = v.rows() / d2_;
    const Matrix z = v * x;  // (d2*M) x d1
    // Reshape rows (a, k) into d2 x (M*d1) and contract the environment.
    Matrix zr(d2_, m * d1_), vr(d2_, m * d1_);
    for (Index a = 0; a < d2_; ++a)
      for (Index k = 0; k < m; ++k) {
        zr.block(a, k * d1_, 1, d1_) = z.row(a * m + k);
        vr.block(a, k * d1_, 1, d1_) = v.row(a * m + k);
      }
    return zr * vr.adjoint();
  }
  if (cache_->choi) {
    // Phi(X) = [id (x) Tr](J (1 (x) X^T)); with J[(a,k),(b,j)] the entry at
    // block (a,b), position (k,j), this reads Phi(X)_ab = sum_{kj} J_ab(k,j) X(k,j).
    const Matrix& j = *cache_->choi;
    Matrix out(d2_, d2_);
    for (Index a = 0; a < d2_; ++a)
      for (Index b = 0; b < d2_; ++b)
        out(a, b) = j.block(a * d1_, b * d1_, d1_, d1_).cwiseProduct(x).sum();
    return out;
  }
  const Matrix& s = *cache_->superop;
  return devectorize(s * vectorize(x), d2_, d2_);
}

Matrix AdjointMap::apply(const Matrix& x) const {
  Matrix out = Matrix::Zero(kraus[0].rows(), kraus[0].rows());
  for (const Matrix& a : kraus) out.noalias() += a * x * a.adjoint();
  return out;
}

AdjointMap adjoint(const QuantumChannel& channel) {
  AdjointMap adj;
  for (const Matrix& a : channel.kraus()) adj.kraus.push_back(a.adjoint());
  return adj;
}

CptpReport validate_cptp(const Matrix& j, Index dimIn, Index dimOut, double tol) {
  CptpReport report;
  report.tol = tol;
  const RealVector ev = eigenvalues_hermitian(((j + j.adjoint()) * 0.5).eval());
  report.min_choi_eigenvalue = ev(0);
  const Matrix tp = partial_trace(j, {dimOut, dimIn}, Subsystem::B);
  const Matrix un = partial_trace(j, {dimOut, dimIn}, Subsystem::A);
  report.tp_defect = operator_norm(tp - Matrix::Identity(dimIn, dimIn));
  report.unitality_defect = operator_norm(un - Matrix::Identity(dimOut, dimOut));
  report.cp_ok = report.min_choi_eigenvalue >= -tol;
  report.tp_ok = report.tp_defect <= tol;
  return report;
}

CptpReport validate_cptp(const QuantumChannel& channel, double tol) {
  return validate_cptp(channel.choi(), channel.dim_in(), channel.dim_out(), tol);
}

int choi_rank(const QuantumChannel& channel, double relTol) {
  const RealVector ev = eigenvalues_hermitian(channel.choi());
  const double lmax = std::max(ev(ev.size() - 1), 0.0);
  int rank = 0;
  for (Index i = 0; i < ev.size(); ++i)
    if (ev(i) > relTol * lmax) ++rank;
  return rank;
}

QuantumChannel identity_channel(Index d) {
  std::vector<Matrix> ops{Matrix::Identity(d, d)};
  return QuantumChannel::from_kraus(std::move(ops));
}

QuantumChannel depolarizing_channel(Index dimIn, Index dimOut) {
  Matrix j = Matrix::Identity(dimIn * dimOut, dimIn * dimOut) / static_cast<double>(dimOut);
  return QuantumChannel::from_choi(std::move(j), dimIn, dimOut);
}

RealMatrix real_superop(const QuantumChannel& channel) {
  require(channel.dim_in() == channel.dim_out(), "real_superop: square channel required");
  const Index d = channel.dim_in();
  const Eigen::SparseMatrix<Complex> v = hermitian_basis_transform(d);
  const Matrix sv = channel.superop() * v;
  const Matrix f = v.adjoint() * sv;
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
  if (f.imag().cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw NumericalError("real_superop: non-real Bloch matrix, map is not Hermiticity-preserving");
  return f.real();
}

BlochForm bloch_form(const QuantumChannel& channel) {
  BlochForm form;
  form.d = channel.dim_in();
  form.full = real_superop(channel);
  const Index n = form.full.rows();
  RealVector firstRow = form.full.row(0).transpose();
  firstRow(0) -= 1.0;
  if (firstRow.cwiseAbs().maxCoeff() > 1e-8)
    throw NumericalError("bloch_form: first row is not (1, 0, ..., 0); channel not TP");
  form.kappa = form.full.col(0).tail(n - 1);
  form.Q = form.full.bottomRightCorner(n - 1, n - 1);
  return form;
}

FanoForm fano_form(const Matrix& rhoAB, Index d) {
  require(rhoAB.rows() == d * d && rhoAB.cols() == d * d,
          "fano_form: state must be square of side d^2");
  // Rt_ij = Tr(rho (L_i (x) L_j)) = d * v_i^dag rho^R conj(v_j) with
  // v_i = vec(L_i / sqrt(d)); validated against the direct trace in tests.
  const Eigen::SparseMatrix<Complex> v = hermitian_basis_transform(d);
  const Eigen::SparseMatrix<Complex> vconj = v.conjugate();
  const Matrix rr = reshuffle(rhoAB, {d, d}, {d, d});
  const Matrix tmp = rr * vconj;
  const Matrix full = static_cast<double>(d) * Matrix(v.adjoint() * tmp);
  const double scale = std::max(1.0, full.cwiseAbs().maxCoeff());
  if (full.imag().cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw NumericalError("fano_form: non-real expansion, state is not Hermitian");
  FanoForm form;
  form.d = d;
  form.full = full.real();
  const Index n = form.full.rows();
  form.a = form.full.row(0).tail(n - 1).transpose();
  form.b = form.full.col(0).tail(n - 1);
  form.R = form.full.bottomRightCorner(n - 1, n - 1);
  return form;
}

bool verify_fano_equivalence(const QuantumChannel& channel, double tol) {
  require(channel.dim_in() == channel.dim_out(), "verify_fano_equivalence: square channel");
  const Index d = channel.dim_in();
  const RealMatrix bloch = bloch_form(channel).full;
  const Matrix jt2 =
      partial_transpose(channel.choi(), {d, d}, Subsystem::B) / static_cast<double>(d);
  const RealMatrix fano = fano_form(jt2, d).full;
  return (bloch - fano).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qchan
