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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "helpers.hpp"
#include "photonlift/fock.hpp"
#include "photonlift/inverse.hpp"
#include "photonlift/lift.hpp"

namespace photonlift {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector bell_state() {
  const FockBasis b = basis(4, 2);
  return state_in_basis({{1, 0, 1, 0}, {0, 1, 0, 1}},
                        {kInvSqrt2, kInvSqrt2}, b);
}

TEST_CASE("dimension formula", "[fock]") {
  CHECK(dimension(2, 3) == 4);
  CHECK(dimension(3, 2) == 6);
  CHECK(dimension(5, 4) == 70);
  CHECK(dimension(1, 0) == 1);
  CHECK(dimension(4, 0) == 1);
  CHECK_THROWS_AS(dimension(64, 64), CapacityError);
  CHECK_THROWS_AS(dimension(0, 1), ArgumentError);
}

TEST_CASE("default basis ordering", "[fock]") {
  const FockBasis b23 = basis(2, 3);
  const std::vector<OccupationVector> expected23{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  CHECK(b23.states() == expected23);

  const FockBasis b32 = basis(3, 2);
  const std::vector<OccupationVector> expected32{{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                                 {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(b32.states() == expected32);

  const FockBasis b15 = basis(1, 5);
  CHECK(b15.states() == std::vector<OccupationVector>{{5}});
}

TEST_CASE("basis size and strict descending order", "[fock][property]") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 0; n <= 8 - m + 1; ++n) {
      const FockBasis b = basis(m, n);
      CHECK(b.size() == dimension(m, n));
      for (std::size_t i = 1; i < b.size(); ++i) {
        CHECK(b.state(i - 1) > b.state(i));
      }
    }
  }
}

TEST_CASE("subspace basis reorders priorities first", "[fock]") {
  const FockBasis swapped = subspace_basis(2, 1, {{0, 1}});
  CHECK(swapped.states() == std::vector<OccupationVector>{{0, 1}, {1, 0}});

  const std::vector<OccupationVector> holes{{0, 1, 1, 1, 1},
                                            {1, 0, 1, 1, 1},
                                            {1, 1, 0, 1, 1},
                                            {1, 1, 1, 0, 1},
                                            {1, 1, 1, 1, 0}};
  const FockBasis b = subspace_basis(5, 4, holes);
  CHECK(b.size() == 70);
  for (std::size_t i = 0; i < holes.size(); ++i) {
    CHECK(b.state(i) == holes[i]);
  }

  CHECK(subspace_basis(3, 2, {}) == basis(3, 2));
  CHECK_THROWS_AS(subspace_basis(2, 1, {{1, 0}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(subspace_basis(2, 1, {{2, 0}}), ArgumentError);
}

TEST_CASE("state_in_basis places weights at the right kets", "[fock]") {
  const StateVector bell = bell_state();
  const auto i0 = bell.basis.index_of({1, 0, 1, 0});
  const auto i1 = bell.basis.index_of({0, 1, 0, 1});
  REQUIRE(i0);
  REQUIRE(i1);
  CHECK(std::abs(bell.amplitudes(static_cast<Eigen::Index>(*i0)) -
                 Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(bell.amplitudes(static_cast<Eigen::Index>(*i1)) -
                 Complex(kInvSqrt2)) < 1e-15);
  CHECK(bell.amplitudes.cwiseAbs().sum() ==
        Catch::Approx(2 * kInvSqrt2).margin(1e-14));

  const FockBasis b = basis(2, 1);
  const StateVector zero = state_in_basis({}, {}, b);
  CHECK(zero.amplitudes.cwiseAbs().maxCoeff() == 0.0);

  const StateVector unit = state_in_basis({{0, 1}}, {1.0}, b);
  CHECK(std::abs(unit.amplitudes(1) - Complex(1.0)) == 0.0);

  CHECK_THROWS_WITH(state_in_basis({{2, 0}}, {1.0}, b),
                    Catch::Matchers::ContainsSubstring("|2 0>"));
}

TEST_CASE("state_in_basis read-back identity", "[fock][property]") {
  const FockBasis b = basis(3, 3);
  Rng rng(42);
  std::vector<OccupationVector> terms{{3, 0, 0}, {1, 1, 1}, {0, 2, 1}};
  std::vector<Complex> weights;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    weights.emplace_back(rng.normal(), rng.normal());
  }
  const StateVector st = state_in_basis(terms, weights, b);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto idx = b.index_of(terms[i]);
    REQUIRE(idx);
    CHECK(st.amplitudes(static_cast<Eigen::Index>(*idx)) == weights[i]);
  }
}

TEST_CASE("leading_terms prefix logic", "[fock]") {
  const FockBasis b = basis(2, 3);  // four kets
  const StateVector uniform =
      state_in_basis(b.states(), {0.5, 0.5, 0.5, 0.5}, b);
  CHECK(leading_terms(uniform, 0.99).size() == 4);

  const double eps = 1e-3;
  const StateVector skewed = state_in_basis(
      {{3, 0}, {0, 3}}, {std::sqrt(1.0 - eps), std::sqrt(eps)}, b);
  const auto top = leading_terms(skewed, 0.99);
  REQUIRE(top.size() == 1);
  CHECK(top.front().first == OccupationVector{3, 0});

  StateVector not_normalized = uniform;
  not_normalized.amplitudes *= 2.0;
  CHECK_THROWS_AS(leading_terms(not_normalized, 0.9), PreconditionError);
}

TEST_CASE("random interferometer output needs many leading terms", "[fock]") {
  // A Haar-random 5-mode interferometer on 4 photons spreads one input
  // ket over most of the 70-dimensional space.
  const FockBasis b = basis(5, 4);
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    Rng rng(seed);
    const ScatteringMatrix s(haar_random_unitary(5, rng));
    const StateVector out =
        evolve_state_heisenberg(s, {1, 1, 1, 1, 0}, b);
    CHECK(leading_terms(out, 0.99).size() > 50);
    CHECK(leading_terms(out, 0.90).size() > 30);
  }
}

TEST_CASE("state_leading_fidelity keeps the smallest sufficient prefix",
          "[fock]") {
  const FockBasis b = basis(4, 2);
  const double eps = 1e-3;
  const StateVector nearly = state_in_basis(
      {{0, 1, 0, 1}, {1, 0, 1, 0}}, {std::sqrt(1.0 - eps), std::sqrt(eps)}, b);
  const auto [terms, weights] = state_leading_fidelity(nearly, 0.99);
  REQUIRE(terms.size() == 1);
  CHECK(terms.front() == OccupationVector{0, 1, 0, 1});
  CHECK(std::abs(weights.front() - Complex(1.0)) < 1e-12);

  const StateVector two = state_in_basis({{0, 1, 0, 1}, {1, 0, 1, 0}},
                                         {std::sqrt(0.8), std::sqrt(0.2)}, b);
  CHECK(state_leading_fidelity(two, 0.75).first.size() == 1);

  const StateVector ket = state_in_basis({{2, 0, 0, 0}}, {1.0}, b);
  const auto [kt, kw] = state_leading_fidelity(ket, 0.5);
  CHECK(kt == std::vector<OccupationVector>{{2, 0, 0, 0}});
  CHECK(std::abs(kw.front() - Complex(1.0)) < 1e-14);
}

TEST_CASE("state_leading_terms thresholding", "[fock]") {
  const StateVector bell = bell_state();
  const StateVector same = state_leading_terms(bell, 0.0);
  CHECK((same.amplitudes - bell.amplitudes).norm() == 0.0);

  CHECK_THROWS_AS(state_leading_terms(bell, 0.6), DegenerateStateError);

  const FockBasis b = basis(4, 2);
  const double eps = 1e-3;
  const StateVector nearly = state_in_basis(
      {{0, 1, 0, 1}, {1, 0, 1, 0}}, {std::sqrt(1.0 - eps), std::sqrt(eps)}, b);
  const StateVector cleaned = state_leading_terms(nearly, 0.01);
  const auto idx = b.index_of({0, 1, 0, 1});
  REQUIRE(idx);
  CHECK(std::abs(cleaned.amplitudes(static_cast<Eigen::Index>(*idx)) -
                 Complex(1.0)) < 1e-12);
}

TEST_CASE("schmidt rank vector on the printed examples", "[fock][schmidt]") {
  CHECK(schmidt_rank_vector(bell_state(), {2, 2}) == std::vector<int>{2, 2});

  // Three photons in 4+2+2 modes carrying orbital angular momentum.
  const FockBasis b8 = basis(8, 3);
  const StateVector psi422 = state_in_basis({{0, 0, 0, 1, 0, 1, 0, 1},
                                             {0, 0, 1, 0, 0, 1, 1, 0},
                                             {0, 1, 0, 0, 1, 0, 0, 1},
                                             {1, 0, 0, 0, 1, 0, 1, 0}},
                                            {0.5, 0.5, 0.5, 0.5}, b8);
  CHECK(schmidt_rank_vector(psi422, {4, 2, 2}) == std::vector<int>{4, 2, 2});

  const FockBasis b4 = basis(4, 2);
  const StateVector product = state_in_basis({{0, 1, 0, 1}}, {1.0}, b4);
  CHECK(schmidt_rank_vector(product, {2, 2}) == std::vector<int>{1, 1});
}

TEST_CASE("schmidt rank of the almost-separable state", "[fock][schmidt]") {
  const FockBasis b = basis(4, 2);
  const double eps = 1e-3;
  const StateVector nearly = state_in_basis(
      {{0, 1, 0, 1}, {1, 0, 1, 0}}, {std::sqrt(1.0 - eps), std::sqrt(eps)}, b);
  CHECK(schmidt_rank_vector(nearly, {2, 2}) == std::vector<int>{2, 2});

  const auto [terms, weights] = state_leading_fidelity(nearly, 0.99);
  const StateVector cleaned = state_in_basis(terms, weights, b);
  CHECK(schmidt_rank_vector(cleaned, {2, 2}) == std::vector<int>{1, 1});
}

TEST_CASE("schmidt rank properties", "[fock][schmidt][property]") {
  const FockBasis b = basis(4, 2);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const StateVector ket = state_in_basis({b.state(i)}, {1.0}, b);
    CHECK(schmidt_rank_vector(ket, {2, 2}) == std::vector<int>{1, 1});
    CHECK(schmidt_rank_vector(ket, {1, 1, 1, 1}) ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(schmidt_rank_vector(ket, {1, 2, 1}) == std::vector<int>{1, 1, 1});
    CHECK(schmidt_rank_vector(ket, {3, 1}) == std::vector<int>{1, 1});
  }

  StateVector bell = bell_state();
  bell.amplitudes *= std::exp(Complex(0.0, 1.234));
  CHECK(schmidt_rank_vector(bell, {2, 2}) == std::vector<int>{2, 2});
  CHECK(schmidt_rank_vector(bell, {3, 1}) ==
        schmidt_rank_vector(bell_state(), {3, 1}));

  CHECK_THROWS_AS(schmidt_rank_vector(bell, {2, 1}), ArgumentError);
  CHECK_THROWS_AS(schmidt_rank_vector(bell, {2, 0, 2}), ArgumentError);
}

}  // namespace
}  // namespace photonlift
