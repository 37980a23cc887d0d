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

#include "qchan/ensembles.hpp"

#include <lapacke.h>

#include <cmath>

#include "qchan/blas_support.hpp"
#include "qchan/tensor.hpp"

namespace qchan {

Matrix ginibre(Index rows, Index cols, Field field, RngStream& rng) {
  require(rows >= 1 && cols >= 1, "ginibre: dimensions must be positive");
  Matrix g(rows, cols);
  if (field == Field::Real) {
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) g(i, j) = rng.normal();
  } else {
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) g(i, j) = rng.cnormal();
  }
  return g;
}

Matrix gue(Index d, RngStream& rng) {
  const Matrix g = ginibre(d, d, Field::Complex, rng);
  return (g + g.adjoint()) * M_SQRT1_2;
}

Matrix wishart(Index d, Index s, RngStream& rng) {
  require(s >= 1, "wishart: parameter s must be a positive integer");
  const Matrix g = ginibre(d, s, Field::Complex, rng);
  Matrix w(d, d);
  w.noalias() = g * g.adjoint();
  // gemm leaves O(eps) asymmetry; restore exact Hermiticity.
  w = ((w + w.adjoint()) * 0.5).eval();
  return w;
}

namespace {

// Phase correction: with G = QR, multiply column j of Q by R_jj/|R_jj| so the
// effective R factor has positive diagonal. Makes the distribution exactly Haar.
void fix_qr_phases(Matrix& q, const Vector& rdiag) {
  for (Index j = 0; j < q.cols(); ++j) {
    const Complex r = rdiag(j);
    const double a = std::abs(r);
    q.col(j) *= (a > 0) ? r / a : Complex(1, 0);
  }
}

// LAPACK path; Householder QR of a Ginibre matrix plus phase fix.
Matrix haar_columns(Index bigD, Index d, RngStream& rng) {
  init_blas_runtime();
  Matrix a = ginibre(bigD, d, Field::Complex, rng);
  Vector tau(d);
  int info = LAPACKE_zgeqrf(LAPACK_COL_MAJOR, static_cast<int>(bigD), static_cast<int>(d),
                            reinterpret_cast<lapack_complex_double*>(a.data()),
                            static_cast<int>(bigD),
                            reinterpret_cast<lapack_complex_double*>(tau.data()));
  if (info != 0) throw NumericalError("zgeqrf failed");
  Vector rdiag = a.diagonal().head(d);
  info = LAPACKE_zungqr(LAPACK_COL_MAJOR, static_cast<int>(bigD), static_cast<int>(d),
                        static_cast<int>(d),
                        reinterpret_cast<lapack_complex_double*>(a.data()),
                        static_cast<int>(bigD),
                        reinterpret_cast<lapack_complex_double*>(tau.data()));
  if (info != 0) throw NumericalError("zungqr failed");
  fix_qr_phases(a, rdiag);
  return a;
}

}  // namespace

Matrix haar_unitary(Index d, RngStream& rng) {
  require(d >= 1, "haar_unitary: d must be positive");
  return haar_columns(d, d, rng);
}

Matrix haar_isometry(Index bigD, Index d, RngStream& rng) {
  require(d >= 1 && d <= bigD, "haar_isometry: need 1 <= d <= D");
  return haar_columns(bigD, d, rng);
}

RealVector dirichlet(Index d, double s, RngStream& rng) {
  require(d >= 2, "dirichlet: d must be at least 2");
  require(s > 0, "dirichlet: s must be positive");
  RealVector p(d);
  double sum = 0;
  for (Index i = 0; i < d; ++i) {
    p(i) = rng.gamma(s);
    sum += p(i);
  }
  p /= sum;
  return p;
}

Matrix induced_state(Index d, Index s, RngStream& rng) {
  Matrix w = wishart(d, s, rng);
  w /= w.trace().real();
  return w;
}

Matrix bures_state(Index d, RngStream& rng) {
  require(d >= 2, "bures_state: d must be at least 2");
  const Matrix u = haar_unitary(d, rng);
  const Matrix g = ginibre(d, d, Field::Complex, rng);
  const Matrix x = (Matrix::Identity(d, d) + u) * g;
  Matrix rho = x * x.adjoint();
  rho = ((rho + rho.adjoint()) * 0.5).eval();
  rho /= rho.trace().real();
  return rho;
}

Matrix fuss_catalan_state(Index d, Index order, RngStream& rng) {
  require(order >= 1, "fuss_catalan_state: order must be a positive integer");
  Matrix x = ginibre(d, d, Field::Complex, rng);
  for (Index i = 1; i < order; ++i) x = (x * ginibre(d, d, Field::Complex, rng)).eval();
  Matrix rho = x * x.adjoint();
  rho = ((rho + rho.adjoint()) * 0.5).eval();
  rho /= rho.trace().real();
  return rho;
}

bool is_density_matrix(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) return false;
  const RealVector ev = eigenvalues_hermitian(rho);
  return ev.size() == 0 || ev(0) >= -tol;
}

}  // namespace qchan
