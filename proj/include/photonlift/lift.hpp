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

#include <vector>

#include "photonlift/fock.hpp"
#include "photonlift/linalg.hpp"
#include "photonlift/matrix.hpp"

namespace photonlift {

/** m x m unitary description of a classical linear-optical device. */
class ScatteringMatrix {
 public:
  explicit ScatteringMatrix(Matrix matrix, double tolerance = kUnitaryTol);

  int modes() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

/** M x M unitary n-photon evolution together with its basis. */
class EvolutionUnitary {
 public:
  EvolutionUnitary(FockBasis basis, Matrix matrix,
                   double tolerance = kUnitaryTol);

  const FockBasis& basis() const { return basis_; }
  const Matrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  FockBasis basis_;
  Matrix matrix_;
};

/** Hermitian effective Hamiltonian (phases absorbed, dimensionless). */
class HermitianGenerator {
 public:
  explicit HermitianGenerator(Matrix matrix, double tolerance = 1e-10);

  const Matrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  Matrix matrix_;
};

/** A real-linear family of antihermitian matrices. */
struct AlgebraBasis {
  std::vector<Matrix> elements;
  bool orthonormalized;
};

/**
 * Canonical basis of u(m): {i E_jj}, then for each pair j < k (row-major)
 * the antisymmetric E_jk - E_kj followed by the symmetric i(E_jk + E_kj).
 */
AlgebraBasis u_m_canonical_basis(int m);

/** Which permanent implementation backs a permanent-based evolution. */
enum class PermanentEngine { kNaive, kRyser };

/** Method selector for s_to_u. */
enum class LiftMethod { kHeisenberg, kPermanentNaive, kPermanentRyser, kHamiltonian };

/**
 * Evolution of one basis ket through S in the Heisenberg picture: the
 * product of transformed creation-operator polynomials is expanded
 * symbolically over occupation monomials.
 */
StateVector evolve_state_heisenberg(const ScatteringMatrix& s,
                                    const OccupationVector& input,
                                    const FockBasis& in_basis);

/**
 * <output| U |input> from the permanent of the row/column-repeated
 * scattering submatrix, divided by sqrt of the occupation factorials.
 */
Complex transition_amplitude(const ScatteringMatrix& s,
                             const OccupationVector& input,
                             const OccupationVector& output,
                             PermanentEngine engine = PermanentEngine::kRyser);

/**
 * Complex-linear extension of the one-photon-process lift: entry (p, q)
 * collects sqrt((q_j + 1) q_l) a(j, l) over the single moves l -> j
 * taking |q> to |p>, with diagonal terms q_l a(l, l). Applied to a
 * Hermitian a it is the n-photon effective Hamiltonian; applied to an
 * antihermitian a it is the differential of the photonic homomorphism.
 */
Matrix lift_operator(const Matrix& a, const FockBasis& in_basis);

/** The n-photon effective Hamiltonian of a one-photon Hamiltonian. */
HermitianGenerator lift_hamiltonian(const HermitianGenerator& h_s,
                                    const FockBasis& in_basis);

/**
 * The n-photon evolution U = phi(S) on the given basis. `tolerance` is
 * the unitarity bound enforced on the result; loosen it when S itself
 * is only approximately unitary (print-rounded data).
 */
EvolutionUnitary s_to_u(const ScatteringMatrix& s, const FockBasis& in_basis,
                        LiftMethod method = LiftMethod::kPermanentRyser,
                        double tolerance = kUnitaryTol);

/**
 * Image algebra of the lift: the raw lifted canonical basis, its real
 * Gram-Schmidt orthonormalization under Re tr(A^dagger B), and the
 * change of basis with orthonormal[k] = sum_l transform(k, l) * raw[l].
 */
struct ImageAlgebra {
  AlgebraBasis raw;
  AlgebraBasis orthonormal;
  RealMatrix transform;
};

ImageAlgebra image_algebra_basis(const FockBasis& in_basis);

}  // namespace photonlift
