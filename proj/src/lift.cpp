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

#include "photonlift/lift.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace photonlift {

namespace {

double factorial(int n) {
  double out = 1.0;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

int checked_total(const OccupationVector& ket, const char* where) {
  int total = 0;
  for (int occupancy : ket) {
    if (occupancy < 0) {
      throw ArgumentError(std::string(where) + ": negative occupation in " +
                          format_ket(ket));
    }
    total += occupancy;
  }
  return total;
}

void require_basis_modes(const ScatteringMatrix& s, const FockBasis& in_basis,
                         const char* where) {
  if (s.modes() != in_basis.modes()) {
    throw ArgumentError(std::string(where) + ": scattering matrix has " +
                        std::to_string(s.modes()) + " modes, basis has " +
                        std::to_string(in_basis.modes()));
  }
}

}  // namespace

ScatteringMatrix::ScatteringMatrix(Matrix matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  require_unitary(matrix_, tolerance, "scattering matrix");
}

EvolutionUnitary::EvolutionUnitary(FockBasis basis, Matrix matrix,
                                   double tolerance)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != static_cast<Eigen::Index>(basis_.size())) {
    throw DimensionError("evolution matrix dimension " +
                         std::to_string(matrix_.rows()) +
                         " does not match basis size " +
                         std::to_string(basis_.size()));
  }
  require_unitary(matrix_, tolerance, "evolution matrix");
}

HermitianGenerator::HermitianGenerator(Matrix matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw DimensionError("Hermitian generator must be a nonempty square matrix");
  }
  const double dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tolerance) {
    throw PreconditionError(
        "generator is not Hermitian: max |H - H^dagger| = " + std::to_string(dev),
        dev);
  }
}

AlgebraBasis u_m_canonical_basis(int m) {
  if (m < 1) {
    throw ArgumentError("u_m_canonical_basis requires m >= 1");
  }
  std::vector<Matrix> elements;
  elements.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    Matrix e = Matrix::Zero(m, m);
    e(j, j) = Complex(0.0, 1.0);
    elements.push_back(std::move(e));
  }
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      Matrix anti = Matrix::Zero(m, m);
      anti(j, k) = 1.0;
      anti(k, j) = -1.0;
      elements.push_back(std::move(anti));
      Matrix sym = Matrix::Zero(m, m);
      sym(j, k) = Complex(0.0, 1.0);
      sym(k, j) = Complex(0.0, 1.0);
      elements.push_back(std::move(sym));
    }
  }
  return AlgebraBasis{std::move(elements), false};
}

StateVector evolve_state_heisenberg(const ScatteringMatrix& s,
                                    const OccupationVector& input,
                                    const FockBasis& in_basis) {
  require_basis_modes(s, in_basis, "evolve_state_heisenberg");
  const int m = in_basis.modes();
  if (static_cast<int>(input.size()) != m ||
      checked_total(input, "evolve_state_heisenberg") != in_basis.photons()) {
    throw ArgumentError("evolve_state_heisenberg: input " + format_ket(input) +
                        " does not fit a (" + std::to_string(m) + ", " +
                        std::to_string(in_basis.photons()) + ") basis");
  }

  // Expand prod_k (sum_j S_jk a_j^dagger)^{n_k} |0> one linear factor at a
  // time, tracking coefficients per creation-operator monomial.
  std::map<OccupationVector, Complex> poly{
      {OccupationVector(static_cast<std::size_t>(m), 0), Complex(1.0)}};
  for (int k = 0; k < m; ++k) {
    for (int t = 0; t < input[static_cast<std::size_t>(k)]; ++t) {
      std::map<OccupationVector, Complex> next;
      for (const auto& [mono, coeff] : poly) {
        for (int j = 0; j < m; ++j) {
          const Complex amp = s.matrix()(j, k);
          if (amp == Complex(0.0)) continue;
          OccupationVector bumped = mono;
          ++bumped[static_cast<std::size_t>(j)];
          next[bumped] += coeff * amp;
        }
      }
      poly = std::move(next);
    }
  }

  double prefactor = 1.0;
  for (int occupancy : input) prefactor /= std::sqrt(factorial(occupancy));

  Vector amplitudes = Vector::Zero(static_cast<Eigen::Index>(in_basis.size()));
  for (const auto& [mono, coeff] : poly) {
    const auto idx = in_basis.index_of(mono);
    if (!idx) {
      throw ArgumentError("evolve_state_heisenberg: basis lacks ket " +
                          format_ket(mono));
    }
    double weight = 1.0;
    for (int occupancy : mono) weight *= factorial(occupancy);
    amplitudes(static_cast<Eigen::Index>(*idx)) =
        prefactor * coeff * std::sqrt(weight);
  }
  return StateVector{in_basis, std::move(amplitudes)};
}

Complex transition_amplitude(const ScatteringMatrix& s,
                             const OccupationVector& input,
                             const OccupationVector& output,
                             PermanentEngine engine) {
  const int m = s.modes();
  if (static_cast<int>(input.size()) != m ||
      static_cast<int>(output.size()) != m) {
    throw ArgumentError("transition_amplitude: kets must have " +
                        std::to_string(m) + " modes");
  }
  const int n_in = checked_total(input, "transition_amplitude");
  const int n_out = checked_total(output, "transition_amplitude");
  if (n_in != n_out) {
    throw ArgumentError("transition_amplitude: photon number not conserved (" +
                        std::to_string(n_in) + " in, " + std::to_string(n_out) +
                        " out)");
  }
  if (n_in == 0) return Complex(1.0);

  // Row i of S repeated output[i] times, column j repeated input[j] times.
  Matrix sub(n_in, n_in);
  Eigen::Index row = 0;
  for (int i = 0; i < m; ++i) {
    for (int rep = 0; rep < output[static_cast<std::size_t>(i)]; ++rep) {
      Eigen::Index col = 0;
      for (int j = 0; j < m; ++j) {
        for (int cep = 0; cep < input[static_cast<std::size_t>(j)]; ++cep) {
          sub(row, col++) = s.matrix()(i, j);
        }
      }
      ++row;
    }
  }
  const Complex per = (engine == PermanentEngine::kNaive)
                          ? permanent_naive(sub)
                          : permanent_ryser(sub);
  double denom = 1.0;
  for (int occupancy : input) denom *= factorial(occupancy);
  for (int occupancy : output) denom *= factorial(occupancy);
  return per / std::sqrt(denom);
}

Matrix lift_operator(const Matrix& a, const FockBasis& in_basis) {
  const int m = in_basis.modes();
  if (a.rows() != m || a.cols() != m) {
    throw ArgumentError("lift_operator: matrix is " + std::to_string(a.rows()) +
                        "x" + std::to_string(a.cols()) + ", basis has " +
                        std::to_string(m) + " modes");
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(in_basis.size());
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t q_i = 0; q_i < in_basis.size(); ++q_i) {
    const OccupationVector& ket = in_basis.state(q_i);
    for (int l = 0; l < m; ++l) {
      const int n_l = ket[static_cast<std::size_t>(l)];
      if (n_l == 0) continue;
      for (int j = 0; j < m; ++j) {
        if (j == l) {
          out(static_cast<Eigen::Index>(q_i), static_cast<Eigen::Index>(q_i)) +=
              static_cast<double>(n_l) * a(l, l);
          continue;
        }
        OccupationVector moved = ket;
        --moved[static_cast<std::size_t>(l)];
        ++moved[static_cast<std::size_t>(j)];
        const auto p_i = in_basis.index_of(moved);
        if (!p_i) {
          throw ArgumentError("lift_operator: basis lacks ket " +
                              format_ket(moved));
        }
        const double weight = std::sqrt(
            static_cast<double>(n_l) *
            (static_cast<double>(ket[static_cast<std::size_t>(j)]) + 1.0));
        out(static_cast<Eigen::Index>(*p_i), static_cast<Eigen::Index>(q_i)) +=
            weight * a(j, l);
      }
    }
  }
  return out;
}

HermitianGenerator lift_hamiltonian(const HermitianGenerator& h_s,
                                    const FockBasis& in_basis) {
  return HermitianGenerator(lift_operator(h_s.matrix(), in_basis));
}

EvolutionUnitary s_to_u(const ScatteringMatrix& s, const FockBasis& in_basis,
                        LiftMethod method, double tolerance) {
  require_basis_modes(s, in_basis, "s_to_u");
  const Eigen::Index dim = static_cast<Eigen::Index>(in_basis.size());
  Matrix u(dim, dim);
  switch (method) {
    case LiftMethod::kHeisenberg: {
      for (std::size_t q_i = 0; q_i < in_basis.size(); ++q_i) {
        u.col(static_cast<Eigen::Index>(q_i)) =
            evolve_state_heisenberg(s, in_basis.state(q_i), in_basis).amplitudes;
      }
      break;
    }
    case LiftMethod::kPermanentNaive:
    case LiftMethod::kPermanentRyser: {
      const PermanentEngine engine = (method == LiftMethod::kPermanentNaive)
                                         ? PermanentEngine::kNaive
                                         : PermanentEngine::kRyser;
      for (std::size_t q_i = 0; q_i < in_basis.size(); ++q_i) {
        for (std::size_t p_i = 0; p_i < in_basis.size(); ++p_i) {
          u(static_cast<Eigen::Index>(p_i), static_cast<Eigen::Index>(q_i)) =
              transition_amplitude(s, in_basis.state(q_i), in_basis.state(p_i),
                                   engine);
        }
      }
      break;
    }
    case LiftMethod::kHamiltonian: {
      const Matrix h_s = principal_log_unitary(s.matrix());
      const Matrix h_u = lift_operator(h_s, in_basis);
      u = unitary_exp(h_u);
      break;
    }
  }
  return EvolutionUnitary(in_basis, std::move(u), tolerance);
}

ImageAlgebra image_algebra_basis(const FockBasis& in_basis) {
  if (in_basis.photons() < 1) {
    throw ArgumentError("image_algebra_basis requires n >= 1");
  }
  const int m = in_basis.modes();
  const AlgebraBasis canonical = u_m_canonical_basis(m);
  const std::size_t count = canonical.elements.size();

  std::vector<Matrix> raw;
  raw.reserve(count);
  for (const Matrix& x : canonical.elements) {
    raw.push_back(lift_operator(x, in_basis));
  }

  // Real Gram-Schmidt under Re tr(A^dagger B); u(M) is a real vector space.
  std::vector<Matrix> ortho;
  ortho.reserve(count);
  RealMatrix transform = RealMatrix::Zero(static_cast<Eigen::Index>(count),
                                          static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) {
    Matrix v = raw[i];
    RealVector row = RealVector::Zero(static_cast<Eigen::Index>(count));
    row(static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      const double c = hs_inner(ortho[k], v).real();
      v -= c * ortho[k];
      row -= c * transform.row(static_cast<Eigen::Index>(k)).transpose();
    }
    const double norm = std::sqrt(hs_inner(v, v).real());
    if (norm < 1e-10) {
      throw std::logic_error(
          "image_algebra_basis: lifted canonical basis is rank-deficient");
    }
    ortho.push_back(v / norm);
    transform.row(static_cast<Eigen::Index>(ortho.size() - 1)) =
        row.transpose() / norm;
  }

  return ImageAlgebra{AlgebraBasis{std::move(raw), false},
                      AlgebraBasis{std::move(ortho), true},
                      std::move(transform)};
}

}  // namespace photonlift
