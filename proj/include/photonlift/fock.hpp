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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "photonlift/matrix.hpp"

namespace photonlift {

/** Photon counts per mode; the ket |n_1 ... n_m>. */
using OccupationVector = std::vector<int>;

/** "|n1 n2 ... nm>" rendering, used in messages and text formats. */
std::string format_ket(const OccupationVector& ket);

/** Hilbert-space dimension binomial(m+n-1, n), exact in 64-bit integers. */
std::uint64_t dimension(int modes, int photons);

/** Normalization tolerance accepted for state inputs. */
inline constexpr double kStateNormTol = 1e-6;

/** Relative singular-value cutoff for Schmidt ranks. */
inline constexpr double kSchmidtRankTol = 1e-6;

/**
 * Ordered basis of the n-photon m-mode space. States are stored in
 * lexicographically descending order by default ((n,0,...,0) first) and
 * the ordering fixes all matrix and vector indexing built on top.
 */
class FockBasis {
 public:
  FockBasis(int modes, int photons, std::vector<OccupationVector> states);

  int modes() const { return modes_; }
  int photons() const { return photons_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<OccupationVector>& states() const { return states_; }
  const OccupationVector& state(std::size_t i) const { return states_[i]; }

  std::optional<std::size_t> index_of(const OccupationVector& ket) const;

  bool operator==(const FockBasis& other) const {
    return modes_ == other.modes_ && photons_ == other.photons_ &&
           states_ == other.states_;
  }

 private:
  int modes_;
  int photons_;
  std::vector<OccupationVector> states_;
  std::map<OccupationVector, std::size_t> index_;
};

/** All occupation vectors of (modes, photons), descending lexicographic. */
FockBasis basis(int modes, int photons);

/**
 * Default basis reordered so `priority` states come first (in the given
 * order), followed by the remaining states in default order.
 */
FockBasis subspace_basis(int modes, int photons,
                         const std::vector<OccupationVector>& priority);

/** Amplitudes over a FockBasis. */
struct StateVector {
  FockBasis basis;
  Vector amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/** Weighted superposition of the given kets in `in_basis`. */
StateVector state_in_basis(const std::vector<OccupationVector>& terms,
                           const std::vector<Complex>& weights,
                           const FockBasis& in_basis);

/**
 * Shortest prefix of terms, sorted by descending probability (ties by
 * basis index), whose cumulative probability reaches `cumulative`.
 */
std::vector<std::pair<OccupationVector, Complex>> leading_terms(
    const StateVector& state, double cumulative);

/**
 * Smallest leading-term truncation whose renormalized state keeps
 * fidelity |<psi|psi~>|^2 > threshold; weights come back renormalized.
 */
std::pair<std::vector<OccupationVector>, std::vector<Complex>>
state_leading_fidelity(const StateVector& state, double fidelity);

/** Zeroes terms with probability below p_min and renormalizes. */
StateVector state_leading_terms(const StateVector& state, double p_min);

/**
 * Schmidt rank of each subsystem (a run of `grouping[i]` consecutive
 * modes) against the rest. Local indices run over every occupation
 * pattern of the subsystem's modes with 0..n photons.
 */
std::vector<int> schmidt_rank_vector(const StateVector& state,
                                     const std::vector<int>& grouping,
                                     double tol_rel = kSchmidtRankTol);

}  // namespace photonlift
