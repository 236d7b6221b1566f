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

#include "photonlift/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace photonlift {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(std::string(op) + " requires a nonempty square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

Complex permanent_naive(const Matrix& a) {
  require_square(a, "permanent");
  const Eigen::Index n = a.rows();
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    Complex product = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      product *= a(i, perm[static_cast<std::size_t>(i)]);
    }
    total += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Complex permanent_ryser(const Matrix& a) {
  require_square(a, "permanent");
  const int n = static_cast<int>(a.rows());
  if (n > 62) {
    throw CapacityError("permanent_ryser supports n <= 62, got n = " +
                        std::to_string(n));
  }
  std::vector<Complex> colsum(static_cast<std::size_t>(n), Complex(0.0));
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray_prev = 0;
  int bits = 0;
  Complex total = 0.0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t flipped = gray ^ gray_prev;
    const int j = std::countr_zero(flipped);
    const bool added = (gray & flipped) != 0;
    bits += added ? 1 : -1;
    for (int i = 0; i < n; ++i) {
      if (added) {
        colsum[static_cast<std::size_t>(i)] += a(i, j);
      } else {
        colsum[static_cast<std::size_t>(i)] -= a(i, j);
      }
    }
    Complex product = 1.0;
    for (int i = 0; i < n; ++i) {
      product *= colsum[static_cast<std::size_t>(i)];
    }
    // (-1)^n (-1)^{|X|} per the inclusion-exclusion formula.
    total += ((n + bits) % 2 == 0) ? product : -product;
    gray_prev = gray;
  }
  return total;
}

Matrix principal_log_unitary(const Matrix& u, double tolerance) {
  require_unitary(u, tolerance, "principal_log_unitary input");
  const Eigen::ComplexSchur<Matrix> schur(u);
  const Eigen::Index n = u.rows();
  RealVector angles(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double theta = std::arg(schur.matrixT()(j, j));
    if (theta <= -std::numbers::pi + 1e-12) {
      theta += 2.0 * std::numbers::pi;
    }
    angles(j) = theta;
  }
  const Matrix& q = schur.matrixU();
  Matrix k = q * angles.asDiagonal() * q.adjoint();
  return (k + k.adjoint()) / 2.0;
}

Matrix unitary_exp(const Matrix& hermitian) {
  require_square(hermitian, "unitary_exp");
  const Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  const Eigen::Index n = hermitian.rows();
  Vector phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    phases(j) = std::exp(Complex(0.0, es.eigenvalues()(j)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix unitary_exp_antihermitian(const Matrix& antihermitian) {
  const Matrix h =
      (Complex(0.0, -1.0) * antihermitian +
       (Complex(0.0, -1.0) * antihermitian).adjoint()) /
      2.0;
  return unitary_exp(h);
}

Matrix haar_random_unitary(Eigen::Index m, Rng& rng) {
  if (m < 1) {
    throw DimensionError("haar_random_unitary requires m >= 1");
  }
  const Matrix z = random_complex_matrix(m, m, rng);
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0);
  }
  return q;
}

Matrix random_complex_matrix(Eigen::Index n1, Eigen::Index n2, Rng& rng) {
  if (n1 < 1 || n2 < 1) {
    throw DimensionError("random_complex_matrix requires positive dimensions");
  }
  Matrix out(n1, n2);
  for (Eigen::Index i = 0; i < n1; ++i) {
    for (Eigen::Index j = 0; j < n2; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

Matrix qft_matrix(Eigen::Index n) {
  if (n < 1) {
    throw DimensionError("qft_matrix requires N >= 1");
  }
  Matrix out(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>(x) * static_cast<double>(y) /
                           static_cast<double>(n);
      out(x, y) = scale * std::exp(Complex(0.0, angle));
    }
  }
  return out;
}

Matrix rotation_matrix(Eigen::Index n, Eigen::Index shift) {
  if (n < 1) {
    throw DimensionError("rotation_matrix requires N >= 1");
  }
  if (shift < 0 || shift >= n) {
    throw ArgumentError("rotation_matrix shift must satisfy 0 <= shift < N");
  }
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out((j + shift) % n, j) = 1.0;
  }
  return out;
}

}  // namespace photonlift
