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

#include <complex>

#include <Eigen/Dense>

#include "photonlift/errors.hpp"

namespace photonlift {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/** Default max-norm tolerance accepted for unitary inputs. */
inline constexpr double kUnitaryTol = 1e-8;

/** Max-norm deviation of S from unitarity and the verdict at `tolerance`. */
struct UnitarityReport {
  double max_deviation;
  double tolerance;
  bool is_unitary;
};

UnitarityReport unitarity_report(const Matrix& s, double tolerance = kUnitaryTol);

/** Throws PreconditionError when s fails the unitarity check. */
void require_unitary(const Matrix& s, double tolerance = kUnitaryTol,
                     const char* role = "matrix");

/** Frobenius norm of A - B. Shapes must match. */
double frobenius_distance(const Matrix& a, const Matrix& b);

/** Hilbert-Schmidt inner product trace(A^dagger B) on square same-shape matrices. */
Complex hs_inner(const Matrix& a, const Matrix& b);

/** min over global phases of ||A - e^{i phi} B||_F. */
double min_phase_distance(const Matrix& a, const Matrix& b);

/** The aligning phase: arg max_phi Re e^{-i phi} tr(B^dagger A). */
double aligning_phase(const Matrix& a, const Matrix& b);

}  // namespace photonlift
