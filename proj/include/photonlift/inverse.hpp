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

#include <cstdint>
#include <optional>
#include <vector>

#include "photonlift/lift.hpp"
#include "photonlift/rng.hpp"

namespace photonlift {

/** Haar-random S and its n-photon evolution U = phi(S). */
std::pair<ScatteringMatrix, EvolutionUnitary> rand_image_unitary(
    const FockBasis& in_basis, Rng& rng);

/** Outcome of the exact inverse problem. */
struct InverseResult {
  enum class Status { kRealizable, kNotInImage };

  Status status;
  /** Recovered scattering matrix (set when realizable). */
  std::optional<ScatteringMatrix> scattering;
  /**
   * Largest residual seen. For kNotInImage this is the adjoint projection
   * residual that failed (or the verification distance when the adjoint
   * test passed but reconstruction did not verify).
   */
  double max_residual;
  /** Global phase with phi(S) e^{i phase} ~ U, when realizable. */
  double phase;
  /** min-phase Frobenius distance of phi(S) to the target, when realizable. */
  double distance;
  /** Basis reordering that made the target realizable, if one was needed. */
  std::optional<std::vector<std::size_t>> permutation;

  bool realizable() const { return status == Status::kRealizable; }
};

struct SFromUOptions {
  double tolerance = 1e-6;
  /** Retry over basis-state reorderings when the direct attempt fails. */
  bool try_permutations = false;
  /** Largest M for which the M! reordering sweep is allowed... */
  std::size_t permutation_cap = 8;
  /** ...unless forced. */
  bool force_permutations = false;
};

/**
 * Decides whether the target evolution lies in the image of the photonic
 * homomorphism and recovers S when it does. The adjoint action of the
 * target on the orthonormal image algebra must close (residual test);
 * the pulled-back action on u(m) then yields the columns of S up to
 * phases, which are chained off column 1. A final phi(S) comparison
 * (up to global phase, threshold 10 * tolerance * sqrt(M)) guards
 * against adjoint-preserving unitaries outside the image.
 */
InverseResult s_from_u(const EvolutionUnitary& target, int modes,
                       const SFromUOptions& options = {});

struct ToponogovAttempt {
  ScatteringMatrix scattering;
  EvolutionUnitary approximation;
  double distance;
  int iterations;
  bool duplicate;
  std::size_t try_index;
  /** Frobenius distance to the target after each accepted step. */
  std::vector<double> distance_trace;
};

struct ToponogovReport {
  /** Sorted ascending by (distance, try index). */
  std::vector<ToponogovAttempt> attempts;
  std::size_t best_index;
  bool deduplicated;
};

struct ToponogovOptions {
  int tries = 1;
  double conv_tol = 1e-8;
  int max_iter = 1000;
  std::uint64_t seed = 0;
  double dedupe_tol = 1e-4;
};

/**
 * Locally optimal approximation of a target evolution by an image-group
 * unitary. Each try starts from a random phi(S0) (child RNG stream per
 * try), takes the principal log of U U0^dagger, projects it onto the
 * image algebra, and retracts with the matrix exponential; a step that
 * would increase the distance is halved once and the try stops if it
 * still increases. Distances are therefore non-increasing per attempt.
 */
ToponogovReport toponogov(const EvolutionUnitary& target, int modes,
                          const ToponogovOptions& options);

}  // namespace photonlift
