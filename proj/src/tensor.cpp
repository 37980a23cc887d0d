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

#include "qchan/tensor.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qchan/blas_support.hpp"

namespace qchan {

namespace {
lapack_complex_double* lp(Matrix& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}
lapack_complex_double* lp(Vector& v) {
  return reinterpret_cast<lapack_complex_double*>(v.data());
}
}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "hadamard: shape mismatch");
  return a.cwiseProduct(b);
}

Matrix reshuffle(const Matrix& x, BipartiteShape rowShape, BipartiteShape colShape) {
  require(x.rows() == rowShape.total() && x.cols() == colShape.total(),
          "reshuffle: shape does not factor the matrix dimensions");
  Matrix y(rowShape.dimA * colShape.dimA, rowShape.dimB * colShape.dimB);
  for (Index a = 0; a < rowShape.dimA; ++a)
    for (Index i = 0; i < rowShape.dimB; ++i)
      for (Index b = 0; b < colShape.dimA; ++b)
        for (Index j = 0; j < colShape.dimB; ++j)
          y(a * colShape.dimA + b, i * colShape.dimB + j) =
              x(a * rowShape.dimB + i, b * colShape.dimB + j);
  return y;
}

Matrix partial_trace(const Matrix& x, BipartiteShape shape, Subsystem keep) {
  require(x.rows() == shape.total() && x.cols() == shape.total(),
          "partial_trace: matrix side must equal dimA*dimB");
  const Index dA = shape.dimA, dB = shape.dimB;
  if (keep == Subsystem::A) {
    Matrix r = Matrix::Zero(dA, dA);
    for (Index a = 0; a < dA; ++a)
      for (Index b = 0; b < dA; ++b)
        for (Index k = 0; k < dB; ++k) r(a, b) += x(a * dB + k, b * dB + k);
    return r;
  }
  Matrix r = Matrix::Zero(dB, dB);
  for (Index k = 0; k < dB; ++k)
    for (Index l = 0; l < dB; ++l)
      for (Index a = 0; a < dA; ++a) r(k, l) += x(a * dB + k, a * dB + l);
  return r;
}

Matrix partial_transpose(const Matrix& x, BipartiteShape shape, Subsystem which) {
  require(x.rows() == shape.total() && x.cols() == shape.total(),
          "partial_transpose: matrix side must equal dimA*dimB");
  const Index dA = shape.dimA, dB = shape.dimB;
  Matrix y(x.rows(), x.cols());
  for (Index a = 0; a < dA; ++a)
    for (Index k = 0; k < dB; ++k)
      for (Index b = 0; b < dA; ++b)
        for (Index l = 0; l < dB; ++l) {
          if (which == Subsystem::B)
            y(a * dB + k, b * dB + l) = x(a * dB + l, b * dB + k);
          else
            y(a * dB + k, b * dB + l) = x(b * dB + k, a * dB + l);
        }
  return y;
}

Vector vectorize(const Matrix& a) {
  Vector v(a.size());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

Matrix devectorize(const Vector& v, Index rows, Index cols) {
  require(v.size() == rows * cols, "devectorize: length mismatch");
  Matrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

namespace {

void check_hermitian(const Matrix& h, const char* who) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw NumericalError(std::string(who) + ": input is not Hermitian");
}

}  // namespace

std::pair<Matrix, Matrix> psd_sqrt_and_inv_sqrt(const Matrix& h, double floorRel) {
  check_hermitian(h, "psd_sqrt_and_inv_sqrt");
  HermitianEig eig = eig_hermitian(h);
  const Index n = h.rows();
  const double lmax = eig.values.size() ? eig.values(n - 1) : 0.0;
  const double floorAbs = floorRel * std::max(lmax, 0.0);
  RealVector sq(n), isq(n);
  for (Index i = 0; i < n; ++i) {
    const double lam = eig.values(i);
    if (lam < -floorAbs)
      throw NumericalError("psd_sqrt_and_inv_sqrt: negative eigenvalue beyond tolerance");
    if (lam <= floorAbs)
      throw NumericalError(
          "psd_sqrt_and_inv_sqrt: eigenvalue below floor, matrix numerically singular");
    sq(i) = std::sqrt(lam);
    isq(i) = 1.0 / sq(i);
  }
  Matrix root = eig.vectors * sq.asDiagonal() * eig.vectors.adjoint();
  Matrix invRoot = eig.vectors * isq.asDiagonal() * eig.vectors.adjoint();
  return {std::move(root), std::move(invRoot)};
}

Matrix psd_sqrt(const Matrix& h, double floorRel) {
  check_hermitian(h, "psd_sqrt");
  HermitianEig eig = eig_hermitian(h);
  const Index n = h.rows();
  const double lmax = eig.values.size() ? eig.values(n - 1) : 0.0;
  const double floorAbs = floorRel * std::max(lmax, 0.0);
  RealVector sq(n);
  for (Index i = 0; i < n; ++i) {
    double lam = eig.values(i);
    if (lam < -floorAbs) throw NumericalError("psd_sqrt: negative eigenvalue beyond tolerance");
    sq(i) = std::sqrt(std::max(lam, 0.0));
  }
  return eig.vectors * sq.asDiagonal() * eig.vectors.adjoint();
}

Matrix psd_inv_sqrt(const Matrix& h, double floorRel) {
  return psd_sqrt_and_inv_sqrt(h, floorRel).second;
}

Vector eigenvalues(const Matrix& x) {
  require(x.rows() == x.cols(), "eigenvalues: matrix must be square");
  init_blas_runtime();
  const Index n = x.rows();
  Matrix work = x;
  Vector w(n);
  const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', static_cast<int>(n), lp(work),
                                 static_cast<int>(n), lp(w), nullptr, 1, nullptr, 1);
  if (info != 0) throw NumericalError("zgeev failed to converge, info=" + std::to_string(info));
  return w;
}

Vector eigenvalues(const RealMatrix& x) {
  require(x.rows() == x.cols(), "eigenvalues: matrix must be square");
  init_blas_runtime();
  const Index n = x.rows();
  RealMatrix work = x;
  std::vector<double> wr(n), wi(n);
  const int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', static_cast<int>(n), work.data(),
                                 static_cast<int>(n), wr.data(), wi.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw NumericalError("dgeev failed to converge, info=" + std::to_string(info));
  Vector w(n);
  for (Index i = 0; i < n; ++i) w(i) = Complex(wr[i], wi[i]);
  return w;
}

RealVector eigenvalues_hermitian(const Matrix& x) {
  require(x.rows() == x.cols(), "eigenvalues_hermitian: matrix must be square");
  init_blas_runtime();
  const Index n = x.rows();
  Matrix work = x;
  RealVector w(n);
  const int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<int>(n), lp(work),
                     static_cast<int>(n), w.data());
  if (info != 0) throw NumericalError("zheevd failed to converge, info=" + std::to_string(info));
  return w;
}

HermitianEig eig_hermitian(const Matrix& x) {
  require(x.rows() == x.cols(), "eig_hermitian: matrix must be square");
  init_blas_runtime();
  const Index n = x.rows();
  HermitianEig out;
  out.vectors = x;
  out.values.resize(n);
  const int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<int>(n), lp(out.vectors),
                     static_cast<int>(n), out.values.data());
  if (info != 0) throw NumericalError("zheevd failed to converge, info=" + std::to_string(info));
  return out;
}

GeneralEig eig_general(const Matrix& x) {
  require(x.rows() == x.cols(), "eig_general: matrix must be square");
  init_blas_runtime();
  const Index n = x.rows();
  Matrix work = x;
  GeneralEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', static_cast<int>(n), lp(work),
                                 static_cast<int>(n), lp(out.values), nullptr, 1, lp(out.vectors),
                                 static_cast<int>(n));
  if (info != 0) throw NumericalError("zgeev failed to converge, info=" + std::to_string(info));
  return out;
}

RealVector singular_values(const Matrix& x) {
  init_blas_runtime();
  const Index m = x.rows(), n = x.cols();
  Matrix work = x;
  RealVector s(std::min(m, n));
  const int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', static_cast<int>(m), static_cast<int>(n),
                                  lp(work), static_cast<int>(m), s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw NumericalError("zgesdd failed to converge, info=" + std::to_string(info));
  return s;
}

double trace_norm(const Matrix& x) { return singular_values(x).sum(); }

double hs_norm(const Matrix& x) { return x.norm(); }

double operator_norm(const Matrix& x) {
  const RealVector s = singular_values(x);
  return s.size() ? s(0) : 0.0;
}

GeneratorBasis gellmann_basis(Index d) {
  require(d >= 2, "gellmann_basis: d must be at least 2");
  GeneratorBasis basis;
  basis.dim = d;
  basis.generators.reserve(d * d - 1);
  // Diagonal generators first: c_l * diag(1,...,1,-l,0,...) with l ones,
  // normalized to Tr L^2 = d. For d = 2 this is sigma_z.
  for (Index l = 1; l < d; ++l) {
    Matrix g = Matrix::Zero(d, d);
    const double c = std::sqrt(static_cast<double>(d) / static_cast<double>(l * (l + 1)));
    for (Index k = 0; k < l; ++k) g(k, k) = c;
    g(l, l) = -static_cast<double>(l) * c;
    basis.generators.push_back(std::move(g));
  }
  // Off-diagonal pairs in lexicographic order, symmetric before antisymmetric;
  // for d = 2 this appends sigma_x then sigma_y.
  const double c = std::sqrt(static_cast<double>(d) / 2.0);
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      Matrix x = Matrix::Zero(d, d);
      x(j, k) = c;
      x(k, j) = c;
      basis.generators.push_back(std::move(x));
      Matrix y = Matrix::Zero(d, d);
      y(j, k) = Complex(0, -c);
      y(k, j) = Complex(0, c);
      basis.generators.push_back(std::move(y));
    }
  return basis;
}

Eigen::SparseMatrix<Complex> hermitian_basis_transform(Index d) {
  require(d >= 2, "hermitian_basis_transform: d must be at least 2");
  const Index n = d * d;
  const double invSqrtD = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(4 * n);
  Index col = 0;
  // Column 0: vec(1/sqrt(d)). Row-major vec index of entry (r, c) is r*d + c.
  for (Index k = 0; k < d; ++k) trips.emplace_back(k * d + k, col, invSqrtD);
  ++col;
  for (Index l = 1; l < d; ++l, ++col) {
    const double c = std::sqrt(static_cast<double>(d) / static_cast<double>(l * (l + 1)));
    for (Index k = 0; k < l; ++k) trips.emplace_back(k * d + k, col, c * invSqrtD);
    trips.emplace_back(l * d + l, col, -static_cast<double>(l) * c * invSqrtD);
  }
  const double c = std::sqrt(static_cast<double>(d) / 2.0);
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      trips.emplace_back(j * d + k, col, c * invSqrtD);
      trips.emplace_back(k * d + j, col, c * invSqrtD);
      ++col;
      trips.emplace_back(j * d + k, col, Complex(0, -c * invSqrtD));
      trips.emplace_back(k * d + j, col, Complex(0, c * invSqrtD));
      ++col;
    }
  Eigen::SparseMatrix<Complex> v(n, n);
  v.setFromTriplets(trips.begin(), trips.end());
  return v;
}

bool four_matrix_trace_identity_check(const Matrix& a, const Matrix& b, const Matrix& c,
                                      const Matrix& d, double tol) {
  const Index n = a.rows();
  require(a.cols() == n && b.rows() == n && b.cols() == n && c.rows() == n && c.cols() == n &&
              d.rows() == n && d.cols() == n,
          "four_matrix_trace_identity_check: equal square sizes required");
  const Matrix lhsM = kron(a, b) * reshuffle(kron(c, d), {n, n}, {n, n});
  const Complex lhs = lhsM.trace();
  const Complex rhs = (a * c * b.transpose() * d.transpose()).trace();
  const double scale = std::max(1.0, std::abs(rhs));
  return std::abs(lhs - rhs) <= tol * scale;
}

}  // namespace qchan
