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

#include "photonlift/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/SVD>

namespace photonlift {

namespace {

void append_occupations(int modes, int photons, OccupationVector& prefix,
                        std::vector<OccupationVector>& out) {
  if (modes == 1) {
    prefix.push_back(photons);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = photons; k >= 0; --k) {
    prefix.push_back(k);
    append_occupations(modes - 1, photons - k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<OccupationVector> occupations_with_total(int modes, int photons) {
  std::vector<OccupationVector> out;
  OccupationVector prefix;
  prefix.reserve(static_cast<std::size_t>(modes));
  append_occupations(modes, photons, prefix, out);
  return out;
}

void require_valid_ket(const OccupationVector& ket, int modes, int photons,
                       const char* where) {
  if (static_cast<int>(ket.size()) != modes) {
    throw ArgumentError(std::string(where) + ": ket " + format_ket(ket) +
                        " has " + std::to_string(ket.size()) + " modes, expected " +
                        std::to_string(modes));
  }
  int total = 0;
  for (int occupancy : ket) {
    if (occupancy < 0) {
      throw ArgumentError(std::string(where) + ": negative occupation in " +
                          format_ket(ket));
    }
    total += occupancy;
  }
  if (total != photons) {
    throw ArgumentError(std::string(where) + ": ket " + format_ket(ket) +
                        " carries " + std::to_string(total) + " photons, expected " +
                        std::to_string(photons));
  }
}

void require_normalized(const StateVector& state, const char* where) {
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > kStateNormTol) {
    throw PreconditionError(std::string(where) + " requires a normalized state, |psi| = " +
                                std::to_string(norm),
                            std::abs(norm - 1.0));
  }
}

/** Term indices sorted by descending probability, ties by basis index. */
std::vector<std::size_t> sorted_term_indices(const Vector& amplitudes) {
  std::vector<std::size_t> order(static_cast<std::size_t>(amplitudes.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::norm(amplitudes(static_cast<Eigen::Index>(a))) >
           std::norm(amplitudes(static_cast<Eigen::Index>(b)));
  });
  return order;
}

}  // namespace

std::string format_ket(const OccupationVector& ket) {
  std::string out = "|";
  for (std::size_t i = 0; i < ket.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ket[i]);
  }
  out += '>';
  return out;
}

std::uint64_t dimension(int modes, int photons) {
  if (modes < 1 || photons < 0) {
    throw ArgumentError("dimension requires m >= 1 and n >= 0");
  }
  // binomial(m+n-1, n), exact; overflow raises rather than wrapping.
  const std::uint64_t top = static_cast<std::uint64_t>(modes) +
                            static_cast<std::uint64_t>(photons) - 1;
  std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(photons),
                                            top - static_cast<std::uint64_t>(photons));
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (top - k + i) / i;
    if (result > UINT64_MAX) {
      throw CapacityError("dimension(" + std::to_string(modes) + ", " +
                          std::to_string(photons) + ") exceeds 64-bit range");
    }
  }
  return static_cast<std::uint64_t>(result);
}

FockBasis::FockBasis(int modes, int photons, std::vector<OccupationVector> states)
    : modes_(modes), photons_(photons), states_(std::move(states)) {
  if (modes_ < 1 || photons_ < 0) {
    throw ArgumentError("FockBasis requires m >= 1 and n >= 0");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    require_valid_ket(states_[i], modes_, photons_, "FockBasis");
    if (!index_.emplace(states_[i], i).second) {
      throw ArgumentError("FockBasis: duplicate state " + format_ket(states_[i]));
    }
  }
}

std::optional<std::size_t> FockBasis::index_of(const OccupationVector& ket) const {
  const auto it = index_.find(ket);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FockBasis basis(int modes, int photons) {
  if (modes < 1 || photons < 0) {
    throw ArgumentError("basis requires m >= 1 and n >= 0");
  }
  dimension(modes, photons);  // capacity guard
  return FockBasis(modes, photons, occupations_with_total(modes, photons));
}

FockBasis subspace_basis(int modes, int photons,
                         const std::vector<OccupationVector>& priority) {
  std::set<OccupationVector> seen;
  std::vector<OccupationVector> states;
  for (const auto& ket : priority) {
    require_valid_ket(ket, modes, photons, "subspace_basis");
    if (!seen.insert(ket).second) {
      throw ArgumentError("subspace_basis: duplicate priority state " +
                          format_ket(ket));
    }
    states.push_back(ket);
  }
  for (auto& ket : occupations_with_total(modes, photons)) {
    if (seen.find(ket) == seen.end()) {
      states.push_back(std::move(ket));
    }
  }
  return FockBasis(modes, photons, std::move(states));
}

StateVector state_in_basis(const std::vector<OccupationVector>& terms,
                           const std::vector<Complex>& weights,
                           const FockBasis& in_basis) {
  if (terms.size() != weights.size()) {
    throw ArgumentError("state_in_basis: " + std::to_string(terms.size()) +
                        " terms vs " + std::to_string(weights.size()) + " weights");
  }
  Vector amplitudes = Vector::Zero(static_cast<Eigen::Index>(in_basis.size()));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto idx = in_basis.index_of(terms[i]);
    if (!idx) {
      throw ArgumentError("state_in_basis: ket " + format_ket(terms[i]) +
                          " is not in the basis");
    }
    amplitudes(static_cast<Eigen::Index>(*idx)) += weights[i];
  }
  return StateVector{in_basis, std::move(amplitudes)};
}

std::vector<std::pair<OccupationVector, Complex>> leading_terms(
    const StateVector& state, double cumulative) {
  if (cumulative <= 0.0 || cumulative > 1.0) {
    throw ArgumentError("leading_terms requires cumulative in (0, 1]");
  }
  require_normalized(state, "leading_terms");
  std::vector<std::pair<OccupationVector, Complex>> out;
  double sum = 0.0;
  for (std::size_t i : sorted_term_indices(state.amplitudes)) {
    const Complex amp = state.amplitudes(static_cast<Eigen::Index>(i));
    if (std::norm(amp) == 0.0) break;
    out.emplace_back(state.basis.state(i), amp);
    sum += std::norm(amp);
    if (sum >= cumulative) break;
  }
  return out;
}

std::pair<std::vector<OccupationVector>, std::vector<Complex>>
state_leading_fidelity(const StateVector& state, double fidelity) {
  if (fidelity <= 0.0 || fidelity >= 1.0) {
    throw ArgumentError("state_leading_fidelity requires 0 < F < 1");
  }
  require_normalized(state, "state_leading_fidelity");
  // For a leading-term truncation, |<psi|psi~>|^2 equals the kept probability.
  std::vector<OccupationVector> terms;
  std::vector<Complex> weights;
  double kept = 0.0;
  for (std::size_t i : sorted_term_indices(state.amplitudes)) {
    const Complex amp = state.amplitudes(static_cast<Eigen::Index>(i));
    if (std::norm(amp) == 0.0) break;
    terms.push_back(state.basis.state(i));
    weights.push_back(amp);
    kept += std::norm(amp);
    if (kept > fidelity) break;
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (Complex& w : weights) w *= scale;
  return {std::move(terms), std::move(weights)};
}

StateVector state_leading_terms(const StateVector& state, double p_min) {
  if (p_min < 0.0) {
    throw ArgumentError("state_leading_terms requires p_min >= 0");
  }
  require_normalized(state, "state_leading_terms");
  Vector amplitudes = state.amplitudes;
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    if (std::norm(amplitudes(i)) < p_min) {
      amplitudes(i) = 0.0;
    }
  }
  const double remaining = amplitudes.norm();
  if (remaining == 0.0) {
    throw DegenerateStateError(
        "state_leading_terms: threshold removed every term");
  }
  amplitudes /= remaining;
  return StateVector{state.basis, std::move(amplitudes)};
}

std::vector<int> schmidt_rank_vector(const StateVector& state,
                                     const std::vector<int>& grouping,
                                     double tol_rel) {
  require_normalized(state, "schmidt_rank_vector");
  const int m = state.basis.modes();
  const int n = state.basis.photons();
  int covered = 0;
  for (int g : grouping) {
    if (g < 1) {
      throw ArgumentError("schmidt_rank_vector: subsystem sizes must be >= 1");
    }
    covered += g;
  }
  if (covered != m) {
    throw ArgumentError("schmidt_rank_vector: grouping covers " +
                        std::to_string(covered) + " of " + std::to_string(m) +
                        " modes");
  }

  // Local index space: every pattern of the subsystem's modes with 0..n
  // photons; unreachable combinations stay zero and do not affect rank.
  const auto patterns_up_to = [n](int modes_count) {
    std::vector<OccupationVector> all;
    for (int k = 0; k <= n; ++k) {
      auto part = occupations_with_total(modes_count, k);
      all.insert(all.end(), part.begin(), part.end());
    }
    std::map<OccupationVector, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
    return index;
  };

  std::vector<int> ranks;
  int start = 0;
  for (int g : grouping) {
    const auto local_index = patterns_up_to(g);
    const auto rest_index = (g == m) ? std::map<OccupationVector, std::size_t>{{{}, 0}}
                                     : patterns_up_to(m - g);
    Matrix coeff = Matrix::Zero(static_cast<Eigen::Index>(local_index.size()),
                                static_cast<Eigen::Index>(rest_index.size()));
    for (std::size_t i = 0; i < state.basis.size(); ++i) {
      const Complex amp = state.amplitudes(static_cast<Eigen::Index>(i));
      if (amp == Complex(0.0)) continue;
      const OccupationVector& ket = state.basis.state(i);
      OccupationVector local(ket.begin() + start, ket.begin() + start + g);
      OccupationVector rest;
      rest.reserve(static_cast<std::size_t>(m - g));
      rest.insert(rest.end(), ket.begin(), ket.begin() + start);
      rest.insert(rest.end(), ket.begin() + start + g, ket.end());
      coeff(static_cast<Eigen::Index>(local_index.at(local)),
            static_cast<Eigen::Index>(rest_index.at(rest))) += amp;
    }
    const Eigen::JacobiSVD<Matrix> svd(coeff);
    const auto& sv = svd.singularValues();
    const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * tol_rel;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > cutoff && sv(i) > 0.0) ++rank;
    }
    ranks.push_back(rank);
    start += g;
  }
  return ranks;
}

}  // namespace photonlift
