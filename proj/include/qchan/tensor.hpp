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

#include <Eigen/SparseCore>
#include <utility>
#include <vector>

#include "qchan/common.hpp"

namespace qchan {

Matrix kron(const Matrix& a, const Matrix& b);

/// Entrywise product; shapes must match.
Matrix hadamard(const Matrix& a, const Matrix& b);

/// Index permutation (|i><j| (x) |k><l|)^R = |i><k| (x) |j><l|.
///
/// The input is read with rows factored as (rowShape.dimA, rowShape.dimB) and
/// columns as (colShape.dimA, colShape.dimB); the output has rows factored as
/// (rowShape.dimA, colShape.dimA) and columns as (rowShape.dimB, colShape.dimB):
///   Y[(a,b),(i,j)] = X[(a,i),(b,j)].
/// For a Choi matrix J in M_{d2} (x) M_{d1} (both shapes {d2, d1}) this yields
/// the d2^2 x d1^2 superoperator, and applying it again with shapes
/// {d2, d2}, {d1, d1} inverts it.
Matrix reshuffle(const Matrix& x, BipartiteShape rowShape, BipartiteShape colShape);

Matrix partial_trace(const Matrix& x, BipartiteShape shape, Subsystem keep);

Matrix partial_transpose(const Matrix& x, BipartiteShape shape, Subsystem which);

/// Row-major vectorization |A>>_(a,i) = A(a,i), i.e. |A>> = sum_i A|i> (x) |i>.
Vector vectorize(const Matrix& a);
Matrix devectorize(const Vector& v, Index rows, Index cols);

/// H^{1/2} and H^{-1/2} of a Hermitian PSD matrix via eigendecomposition.
/// Eigenvalues below floorRel * lambda_max reject the inverse branch
/// (rank-deficient input); negatives beyond the same tolerance reject both.
std::pair<Matrix, Matrix> psd_sqrt_and_inv_sqrt(const Matrix& h, double floorRel = 1e-12);

Matrix psd_sqrt(const Matrix& h, double floorRel = 1e-12);
Matrix psd_inv_sqrt(const Matrix& h, double floorRel = 1e-12);

/// Full complex spectrum of a general square matrix (LAPACK zgeev).
Vector eigenvalues(const Matrix& x);

/// Full complex spectrum of a real square matrix (LAPACK dgeev). Real
/// eigenvalues come out with exactly zero imaginary part.
Vector eigenvalues(const RealMatrix& x);

/// Eigenvalues of a Hermitian matrix, ascending (LAPACK zheevd).
RealVector eigenvalues_hermitian(const Matrix& x);

struct HermitianEig {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};
HermitianEig eig_hermitian(const Matrix& x);

struct GeneralEig {
  Vector values;
  Matrix vectors;  // right eigenvectors, columns
};
GeneralEig eig_general(const Matrix& x);

/// Singular values, descending (LAPACK zgesdd).
RealVector singular_values(const Matrix& x);

double trace_norm(const Matrix& x);
double hs_norm(const Matrix& x);
double operator_norm(const Matrix& x);

/// Hermitian traceless generators of SU(d), normalized Tr(Li Lj) = d delta_ij.
/// The d-1 diagonal generators come first; for d = 2 the order is
/// sigma_z, sigma_x, sigma_y.
struct GeneratorBasis {
  Index dim;
  std::vector<Matrix> generators;
};
GeneratorBasis gellmann_basis(Index d);

/// Unitary whose columns are the vectorized orthonormal Hermitian basis
/// {1/sqrt(d), L_1/sqrt(d), ...} in the gellmann_basis order. Sparse (O(d^2)
/// nonzeros), so conjugating a superoperator into its real form costs O(d^4).
Eigen::SparseMatrix<Complex> hermitian_basis_transform(Index d);

/// Checks Tr((A (x) B)(C (x) D)^R) = Tr(A C B^T D^T) for equal square sizes.
bool four_matrix_trace_identity_check(const Matrix& a, const Matrix& b, const Matrix& c,
                                      const Matrix& d, double tol = 1e-12);

}  // namespace qchan
