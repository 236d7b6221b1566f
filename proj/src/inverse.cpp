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

#include "photonlift/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace photonlift {

namespace {

struct AdjointProjection {
  bool in_image;
  double max_residual;
  /** Coefficients of U o_j U^dagger in the orthonormal basis, per j. */
  std::vector<RealVector> coefficients;
};

AdjointProjection project_adjoint(const Matrix& u, const ImageAlgebra& algebra,
                                  double tolerance) {
  const std::size_t count = algebra.orthonormal.elements.size();
  AdjointProjection out{true, 0.0, {}};
  out.coefficients.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const Matrix conjugated =
        u * algebra.orthonormal.elements[j] * u.adjoint();
    RealVector coeff(static_cast<Eigen::Index>(count));
    Matrix recon = Matrix::Zero(u.rows(), u.cols());
    for (std::size_t k = 0; k < count; ++k) {
      coeff(static_cast<Eigen::Index>(k)) =
          hs_inner(algebra.orthonormal.elements[k], conjugated).real();
      recon += coeff(static_cast<Eigen::Index>(k)) *
               algebra.orthonormal.elements[k];
    }
    out.max_residual =
        std::max(out.max_residual, (conjugated - recon).norm());
    out.coefficients.push_back(std::move(coeff));
    if (out.max_residual > tolerance) {
      out.in_image = false;
      return out;
    }
  }
  return out;
}

/**
 * Reconstructs S from the pulled-back adjoint action on u(m). The action
 * on i E_jj gives i s_j s_j^dagger, so each column is the dominant
 * eigenvector; the action on i(E_1j + E_j1) fixes the phase of column j
 * relative to column 1.
 */
Matrix reconstruct_scattering(const std::vector<RealVector>& gamma,
                              const ImageAlgebra& algebra, int m) {
  const std::size_t count = algebra.raw.elements.size();
  const AlgebraBasis canonical = u_m_canonical_basis(m);

  // gamma is expressed over the orthonormal basis; pull back to the raw
  // lifted generators, whose coefficients transfer verbatim to u(m).
  std::vector<Matrix> ad_s;
  ad_s.reserve(count);
  for (const RealVector& g : gamma) {
    const RealVector beta = algebra.transform.transpose() * g;
    Matrix action = Matrix::Zero(m, m);
    for (std::size_t l = 0; l < count; ++l) {
      action += beta(static_cast<Eigen::Index>(l)) * canonical.elements[l];
    }
    ad_s.push_back(std::move(action));
  }

  std::vector<Vector> columns;
  columns.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    Matrix projector = ad_s[static_cast<std::size_t>(j)] / Complex(0.0, 1.0);
    projector = (projector + projector.adjoint()) / 2.0;
    const Eigen::SelfAdjointEigenSolver<Matrix> es(projector);
    columns.push_back(es.eigenvectors().col(m - 1));
  }

  // Global phase convention: first nonzero entry of column 1 real positive.
  Vector& first = columns[0];
  for (Eigen::Index i = 0; i < first.size(); ++i) {
    if (std::abs(first(i)) > 1e-8) {
      first *= std::exp(Complex(0.0, -std::arg(first(i))));
      break;
    }
  }

  Matrix s(m, m);
  s.col(0) = columns[0];
  for (int j = 1; j < m; ++j) {
    // i(E_1j + E_j1) sits right after the antisymmetric element of the
    // (0, j) pair in the canonical ordering.
    const std::size_t pair_index =
        static_cast<std::size_t>(m) + 2 * static_cast<std::size_t>(j - 1) + 1;
    const Matrix coupler = ad_s[pair_index] / Complex(0.0, 1.0);
    const Complex z = columns[0].adjoint() * coupler * columns[static_cast<std::size_t>(j)];
    const double mag = std::abs(z);
    const Complex phase = (mag > 0.0) ? std::conj(z) / mag : Complex(1.0);
    s.col(j) = columns[static_cast<std::size_t>(j)] * phase;
  }
  return s;
}

InverseResult attempt_inverse(const Matrix& u, const FockBasis& in_basis,
                              const ImageAlgebra& algebra, int m,
                              double tolerance) {
  const AdjointProjection projection = project_adjoint(u, algebra, tolerance);
  if (!projection.in_image) {
    return InverseResult{InverseResult::Status::kNotInImage, std::nullopt,
                         projection.max_residual, 0.0, 0.0, std::nullopt};
  }
  const Matrix s = reconstruct_scattering(projection.coefficients, algebra, m);
  const UnitarityReport report = unitarity_report(s);
  if (!report.is_unitary) {
    return InverseResult{InverseResult::Status::kNotInImage, std::nullopt,
                         std::max(projection.max_residual, report.max_deviation),
                         0.0, 0.0, std::nullopt};
  }
  ScatteringMatrix scattering(s);
  const EvolutionUnitary lifted = s_to_u(scattering, in_basis);
  const double distance = min_phase_distance(lifted.matrix(), u);
  const double acceptance =
      10.0 * tolerance * std::sqrt(static_cast<double>(in_basis.size()));
  if (distance > acceptance) {
    return InverseResult{InverseResult::Status::kNotInImage, std::nullopt,
                         std::max(projection.max_residual, distance), 0.0, 0.0,
                         std::nullopt};
  }
  const double phase = aligning_phase(u, lifted.matrix());
  return InverseResult{InverseResult::Status::kRealizable,
                       std::move(scattering), projection.max_residual, phase,
                       distance, std::nullopt};
}

}  // namespace

std::pair<ScatteringMatrix, EvolutionUnitary> rand_image_unitary(
    const FockBasis& in_basis, Rng& rng) {
  ScatteringMatrix s(haar_random_unitary(in_basis.modes(), rng));
  EvolutionUnitary u = s_to_u(s, in_basis);
  return {std::move(s), std::move(u)};
}

InverseResult s_from_u(const EvolutionUnitary& target, int modes,
                       const SFromUOptions& options) {
  const FockBasis& in_basis = target.basis();
  if (in_basis.modes() != modes) {
    throw ArgumentError("s_from_u: basis has " +
                        std::to_string(in_basis.modes()) + " modes, expected " +
                        std::to_string(modes));
  }
  if (static_cast<std::uint64_t>(target.dim()) !=
      dimension(modes, in_basis.photons())) {
    throw ArgumentError("s_from_u: target dimension does not match (m, n)");
  }
  const ImageAlgebra algebra = image_algebra_basis(in_basis);
  InverseResult direct =
      attempt_inverse(target.matrix(), in_basis, algebra, modes,
                      options.tolerance);
  if (direct.realizable() || !options.try_permutations) {
    return direct;
  }

  const std::size_t dim = in_basis.size();
  if (dim > options.permutation_cap && !options.force_permutations) {
    throw CapacityError("s_from_u: M = " + std::to_string(dim) +
                        " exceeds the permutation cap " +
                        std::to_string(options.permutation_cap) +
                        "; pass force to sweep all M! orderings");
  }

  // Lexicographic sweep over reorderings P U P^T of the basis states.
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  double worst_residual = direct.max_residual;
  while (std::next_permutation(perm.begin(), perm.end())) {
    Matrix permuted(target.dim(), target.dim());
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        permuted(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            target.matrix()(static_cast<Eigen::Index>(perm[i]),
                            static_cast<Eigen::Index>(perm[j]));
      }
    }
    InverseResult result =
        attempt_inverse(permuted, in_basis, algebra, modes, options.tolerance);
    if (result.realizable()) {
      result.permutation = perm;
      return result;
    }
    worst_residual = std::min(worst_residual, result.max_residual);
  }
  direct.max_residual = worst_residual;
  return direct;
}

ToponogovReport toponogov(const EvolutionUnitary& target, int modes,
                          const ToponogovOptions& options) {
  if (options.tries < 1) {
    throw ArgumentError("toponogov requires tries >= 1");
  }
  const FockBasis& in_basis = target.basis();
  if (in_basis.modes() != modes) {
    throw ArgumentError("toponogov: basis has " +
                        std::to_string(in_basis.modes()) + " modes, expected " +
                        std::to_string(modes));
  }
  const ImageAlgebra algebra = image_algebra_basis(in_basis);
  const std::size_t count = algebra.orthonormal.elements.size();
  const AlgebraBasis canonical = u_m_canonical_basis(modes);
  const Rng base(options.seed);

  std::vector<ToponogovAttempt> attempts;
  attempts.reserve(static_cast<std::size_t>(options.tries));
  for (int t = 0; t < options.tries; ++t) {
    Rng rng = base.child(static_cast<std::uint64_t>(t));
    Matrix s = haar_random_unitary(modes, rng);
    Matrix u0 = s_to_u(ScatteringMatrix(s), in_basis).matrix();
    double distance = frobenius_distance(target.matrix(), u0);
    std::vector<double> trace{distance};
    int iterations = 0;

    // Projects an antihermitian direction onto the image algebra and
    // returns the step both upstairs (u(M)) and downstairs (u(m)).
    const auto project = [&](const Matrix& direction) {
      RealVector gamma(static_cast<Eigen::Index>(count));
      Matrix step_big = Matrix::Zero(u0.rows(), u0.cols());
      for (std::size_t k = 0; k < count; ++k) {
        gamma(static_cast<Eigen::Index>(k)) =
            hs_inner(algebra.orthonormal.elements[k], direction).real();
        step_big += gamma(static_cast<Eigen::Index>(k)) *
                    algebra.orthonormal.elements[k];
      }
      const RealVector beta = algebra.transform.transpose() * gamma;
      Matrix step_m = Matrix::Zero(modes, modes);
      for (std::size_t l = 0; l < count; ++l) {
        step_m += beta(static_cast<Eigen::Index>(l)) * canonical.elements[l];
      }
      return std::pair<Matrix, Matrix>(std::move(step_big), std::move(step_m));
    };

    for (int it = 1; it <= options.max_iter; ++it) {
      const Matrix gap = target.matrix() * u0.adjoint();
      // Primary move: project the principal log (full step, then half).
      // The log projection has stationary points away from distance
      // minima, so when it fails to descend we fall back to the
      // projected antihermitian part of the gap, which is the distance
      // gradient on the image orbit and descends whenever nonzero.
      const auto [log_big, log_m] =
          project(Complex(0.0, 1.0) * principal_log_unitary(gap));
      const auto [grad_big, grad_m] = project((gap - gap.adjoint()) / 2.0);

      bool moved = false;
      Matrix u_next;
      double d_next = distance;
      const auto try_direction = [&](const Matrix& big, const Matrix& small,
                                     double scale) {
        u_next = unitary_exp_antihermitian(scale * big) * u0;
        d_next = frobenius_distance(target.matrix(), u_next);
        if (d_next < distance) {
          s = unitary_exp_antihermitian(scale * small) * s;
          moved = true;
        }
        return moved;
      };
      const struct {
        const Matrix& big;
        const Matrix& small;
        int max_halvings;
      } moves[] = {{log_big, log_m, 1}, {grad_big, grad_m, 40}};
      for (const auto& move : moves) {
        if (move.big.norm() < 1e-13) continue;
        double scale = 1.0;
        for (int halving = 0; halving <= move.max_halvings && !moved;
             ++halving) {
          try_direction(move.big, move.small, scale);
          scale /= 2.0;
        }
        if (moved) break;
      }
      if (!moved) {
        // First-order stationary but possibly a saddle: probe random
        // algebra directions at small scales; descent is only accepted,
        // so true local minima end the attempt.
        for (int probe = 0; probe < 12 && !moved; ++probe) {
          RealVector coeffs(static_cast<Eigen::Index>(count));
          for (std::size_t k = 0; k < count; ++k) {
            coeffs(static_cast<Eigen::Index>(k)) = rng.normal();
          }
          Matrix probe_big = Matrix::Zero(u0.rows(), u0.cols());
          for (std::size_t k = 0; k < count; ++k) {
            probe_big += coeffs(static_cast<Eigen::Index>(k)) *
                         algebra.orthonormal.elements[k];
          }
          const RealVector beta = algebra.transform.transpose() * coeffs;
          Matrix probe_m = Matrix::Zero(modes, modes);
          for (std::size_t l = 0; l < count; ++l) {
            probe_m += beta(static_cast<Eigen::Index>(l)) * canonical.elements[l];
          }
          const double norm = probe_big.norm();
          if (norm < 1e-13) continue;
          probe_big /= norm;
          probe_m /= norm;
          for (double eps : {0.5, 0.1, 0.02}) {
            if (try_direction(probe_big, probe_m, eps) ||
                try_direction(-probe_big, -probe_m, eps)) {
              break;
            }
          }
        }
      }
      if (!moved) break;  // no probed direction descends: local optimum

      u0 = u_next;
      const double improvement = distance - d_next;
      distance = d_next;
      trace.push_back(distance);
      iterations = it;
      if (improvement < options.conv_tol) break;
    }

    ScatteringMatrix scattering(s);
    EvolutionUnitary approx = s_to_u(scattering, in_basis);
    const double final_distance =
        frobenius_distance(target.matrix(), approx.matrix());
    attempts.push_back(ToponogovAttempt{std::move(scattering),
                                        std::move(approx), final_distance,
                                        iterations, false,
                                        static_cast<std::size_t>(t),
                                        std::move(trace)});
  }

  // Flag repeats of earlier tries, then report sorted by distance.
  for (std::size_t i = 0; i < attempts.size(); ++i) {
    for (std::size_t j = 0; j < i && !attempts[i].duplicate; ++j) {
      if (frobenius_distance(attempts[i].approximation.matrix(),
                             attempts[j].approximation.matrix()) <=
          options.dedupe_tol) {
        attempts[i].duplicate = true;
      }
    }
  }
  std::stable_sort(attempts.begin(), attempts.end(),
                   [](const ToponogovAttempt& a, const ToponogovAttempt& b) {
                     if (a.distance != b.distance) return a.distance < b.distance;
                     return a.try_index < b.try_index;
                   });
  return ToponogovReport{std::move(attempts), 0, true};
}

}  // namespace photonlift
