// Copyright 2026 The Photonlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "photonlift/matrix.hpp"
#include "photonlift/rng.hpp"

namespace photonlift {

/**
 * Permanent by direct expansion over all n! permutations.
 * Exact up to floating-point rounding; use for small n and as the
 * reference oracle for the Ryser implementation.
 */
Complex permanent_naive(const Matrix& a);

/**
 * Permanent by Ryser's inclusion-exclusion over column subsets.
 * Subsets are walked in Gray-code order so the per-row column sums are
 * updated with one entry per step (O(2^n n) total). Requires n <= 62.
 */
Complex permanent_ryser(const Matrix& a);

/**
 * Principal logarithm of a unitary: the Hermitian K with exp(iK) = U
 * and every eigenvalue of K in (-pi, pi]. The closed upper end means a
 * -1 eigenvalue of U maps to +pi, so the log exists for every unitary.
 * Computed by complex Schur factorization; arguments within 1e-12 of
 * -pi are snapped to +pi and the result is re-symmetrized.
 */
Matrix principal_log_unitary(const Matrix& u, double tolerance = kUnitaryTol);

/** exp(iH) for Hermitian H, via eigendecomposition (result unitary). */
Matrix unitary_exp(const Matrix& hermitian);

/** exp(X) for antihermitian X (equals unitary_exp(-iX) after symmetrizing). */
Matrix unitary_exp_antihermitian(const Matrix& antihermitian);

/**
 * Haar-distributed m x m unitary: Ginibre sample, QR, then columns fixed
 * by the diag(r_jj/|r_jj|) phase correction.
 */
Matrix haar_random_unitary(Eigen::Index m, Rng& rng);

/** n1 x n2 matrix with iid standard-normal real and imaginary parts. */
Matrix random_complex_matrix(Eigen::Index n1, Eigen::Index n2, Rng& rng);

/** N x N quantum Fourier transform: entry (x, y) = exp(i 2 pi x y / N) / sqrt(N). */
Matrix qft_matrix(Eigen::Index n);

/** Permutation matrix sending basis index j to (j + shift) mod N. */
Matrix rotation_matrix(Eigen::Index n, Eigen::Index shift);

}  // namespace photonlift
