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

#include "qchan/common.hpp"
#include "qchan/rng.hpp"

namespace qchan {

enum class Field { Real, Complex };

/// i.i.d. standard Gaussian entries; complex entries are (x + iy)/sqrt(2) so
/// that E|g|^2 = 1 and E Tr GG^dag = rows * cols. Fill order is column-major.
Matrix ginibre(Index rows, Index cols, Field field, RngStream& rng);

/// GUE matrix H = (G + G^dag)/sqrt(2); spectrum of H/sqrt(d) tends to the
/// semicircle on [-2, 2].
Matrix gue(Index d, RngStream& rng);

/// Complex Wishart W = G G^dag with G of size d x s. Integer s only.
Matrix wishart(Index d, Index s, RngStream& rng);

/// Haar unitary via QR of a complex Ginibre matrix with the R-diagonal phase
/// correction (plain QR is biased).
Matrix haar_unitary(Index d, RngStream& rng);

/// Haar isometry V: C^d -> C^D, V^dag V = 1_d; equivalent in distribution to
/// truncating a Haar unitary of size D to its first d columns.
Matrix haar_isometry(Index bigD, Index d, RngStream& rng);

/// Dirichlet vector on the simplex, density prop. to prod p_i^{s-1}; any s > 0.
RealVector dirichlet(Index d, double s, RngStream& rng);

/// rho = W / Tr W with W ~ Wishart(d, s): the induced measure nu_{d;s}.
Matrix induced_state(Index d, Index s, RngStream& rng);

/// rho = XX^dag / Tr XX^dag with X = (1 + U) G, U Haar, G Ginibre.
Matrix bures_state(Index d, RngStream& rng);

/// rho = XX^dag / Tr XX^dag with X = G_1 G_2 ... G_s.
Matrix fuss_catalan_state(Index d, Index order, RngStream& rng);

bool is_density_matrix(const Matrix& rho, double tol = 1e-10);

}  // namespace qchan
