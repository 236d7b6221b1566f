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

#include "photonlift/matrix.hpp"

#include <string>

namespace photonlift {

UnitarityReport unitarity_report(const Matrix& s, double tolerance) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw DimensionError("unitarity check requires a nonempty square matrix");
  }
  const Matrix gram = s.adjoint() * s;
  const double dev =
      (gram - Matrix::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff();
  return UnitarityReport{dev, tolerance, dev <= tolerance};
}

void require_unitary(const Matrix& s, double tolerance, const char* role) {
  const UnitarityReport report = unitarity_report(s, tolerance);
  if (!report.is_unitary) {
    throw PreconditionError(
        std::string(role) + " is not unitary: max |S^dagger S - I| = " +
            std::to_string(report.max_deviation) + " > " +
            std::to_string(tolerance),
        report.max_deviation);
  }
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance requires equal shapes");
  }
  return (a - b).norm();
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionError("hs_inner requires equal square shapes");
  }
  return (a.adjoint() * b).trace();
}

double min_phase_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("min_phase_distance requires equal shapes");
  }
  const double overlap = std::abs((b.adjoint() * a).trace());
  const double d2 = a.squaredNorm() + b.squaredNorm() - 2.0 * overlap;
  return std::sqrt(std::max(d2, 0.0));
}

double aligning_phase(const Matrix& a, const Matrix& b) {
  const Complex t = (b.adjoint() * a).trace();
  return std::arg(t);
}

}  // namespace photonlift
