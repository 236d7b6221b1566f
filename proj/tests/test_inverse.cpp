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
#include "photonlift/inverse.hpp"

namespace photonlift {
namespace {

using test::max_abs_diff;
using test::random_unitary;

TEST_CASE("rand_image_unitary contracts", "[rand-im-u]") {
  const FockBasis b = basis(3, 2);
  Rng rng(5);
  const auto [s, u] = rand_image_unitary(b, rng);
  CHECK(unitarity_report(u.matrix()).is_unitary);

  // One photon: U is S itself.
  const FockBasis b1 = basis(3, 1);
  Rng rng1(6);
  const auto [s1, u1] = rand_image_unitary(b1, rng1);
  CHECK(max_abs_diff(s1.matrix(), u1.matrix()) < 1e-12);

  Rng a(7), c(7);
  const auto [sa, ua] = rand_image_unitary(b, a);
  const auto [sc, uc] = rand_image_unitary(b, c);
  CHECK(max_abs_diff(sa.matrix(), sc.matrix()) == 0.0);
  CHECK(max_abs_diff(ua.matrix(), uc.matrix()) == 0.0);
}

TEST_CASE("s_from_u round-trips random scattering matrices", "[s-from-u]") {
  int trial = 0;
  for (int m : {2, 3}) {
    for (int n : {2, 3}) {
      const FockBasis b = basis(m, n);
      for (int rep = 0; rep < 5; ++rep) {
        const ScatteringMatrix s0(random_unitary(m, 8800 + trial++));
        const EvolutionUnitary target = s_to_u(s0, b);
        const InverseResult result = s_from_u(target, m);
        REQUIRE(result.realizable());
        const EvolutionUnitary lifted = s_to_u(*result.scattering, b);
        CHECK(min_phase_distance(lifted.matrix(), target.matrix()) <= 1e-6);
      }
    }
  }
}

TEST_CASE("membership verdict ignores a global phase", "[s-from-u][property]") {
  const FockBasis b = basis(3, 2);
  const ScatteringMatrix s0(random_unitary(3, 12));
  const Matrix u = s_to_u(s0, b).matrix();
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    const double alpha = 2.0 * 3.14159265358979 * rng.uniform01();
    const EvolutionUnitary target(b, std::exp(Complex(0, alpha)) * u);
    CHECK(s_from_u(target, 3).realizable());
  }
}

TEST_CASE("the 6x6 QFT is not reachable with 3 modes and 2 photons",
          "[s-from-u]") {
  const FockBasis b = basis(3, 2);
  const EvolutionUnitary target(b, qft_matrix(6));
  const InverseResult result = s_from_u(target, 3);
  CHECK_FALSE(result.realizable());
  // The rejection is decisive, not borderline.
  CHECK(result.max_residual >= 10.0 * 1e-6);
}

TEST_CASE("identity target recovers a phase-diagonal S", "[s-from-u]") {
  const FockBasis b = basis(3, 2);
  const EvolutionUnitary target(b, Matrix::Identity(6, 6));
  const InverseResult result = s_from_u(target, 3);
  REQUIRE(result.realizable());
  const Matrix s = result.scattering->matrix();
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) {
      if (i != j) CHECK(std::abs(s(i, j)) < 1e-8);
    }
  }
  CHECK(min_phase_distance(s_to_u(*result.scattering, b).matrix(),
                           target.matrix()) <= 1e-6);
}

TEST_CASE("basis reorderings recover a permuted image member", "[s-from-u]") {
  const FockBasis b = basis(2, 2);  // M = 3, 6 orderings
  const ScatteringMatrix s0(random_unitary(2, 99));
  const Matrix u = s_to_u(s0, b).matrix();
  Matrix permuted(3, 3);
  const std::vector<int> perm{2, 0, 1};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      permuted(i, j) = u(perm[static_cast<std::size_t>(i)],
                         perm[static_cast<std::size_t>(j)]);
    }
  }
  const EvolutionUnitary target(b, permuted);
  CHECK_FALSE(s_from_u(target, 2).realizable());

  SFromUOptions options;
  options.try_permutations = true;
  const InverseResult result = s_from_u(target, 2, options);
  CHECK(result.realizable());
  CHECK(result.permutation.has_value());
}

TEST_CASE("permutation sweep respects the size cap", "[s-from-u]") {
  const FockBasis b = basis(3, 2);  // M = 6
  const EvolutionUnitary target(b, qft_matrix(6));
  SFromUOptions options;
  options.try_permutations = true;
  options.permutation_cap = 4;
  CHECK_THROWS_AS(s_from_u(target, 3, options), CapacityError);
}

TEST_CASE("toponogov is a fixed point on image members", "[toponogov]") {
  const FockBasis b = basis(3, 2);
  // The target is exactly the try-0 starting point of seed 17.
  Rng stream = Rng(17).child(0);
  const auto [s0, u0] = rand_image_unitary(b, stream);
  ToponogovOptions options;
  options.tries = 1;
  options.seed = 17;
  const ToponogovReport report = toponogov(u0, 3, options);
  REQUIRE(report.attempts.size() == 1);
  CHECK(report.attempts[0].distance <= 1e-8);
  CHECK(report.attempts[0].iterations <= 1);
}

TEST_CASE("toponogov approximates the 6x6 QFT", "[toponogov][slow]") {
  const FockBasis b = basis(3, 2);
  const EvolutionUnitary target(b, qft_matrix(6));
  ToponogovOptions options;
  options.tries = 5;
  options.seed = 2;
  const ToponogovReport report = toponogov(target, 3, options);
  REQUIRE(report.attempts.size() == 5);
  CHECK(report.attempts.front().distance < 2.75);
  for (std::size_t i = 1; i < report.attempts.size(); ++i) {
    CHECK(report.attempts[i - 1].distance <= report.attempts[i].distance);
  }
}

TEST_CASE("toponogov attempts are monotone and stay in the image",
          "[toponogov][property]") {
  const FockBasis b = basis(2, 3);
  const EvolutionUnitary target(b, random_unitary(4, 314));
  ToponogovOptions options;
  options.tries = 6;
  options.seed = 9;
  const ToponogovReport report = toponogov(target, 2, options);
  for (const ToponogovAttempt& attempt : report.attempts) {
    for (std::size_t i = 1; i < attempt.distance_trace.size(); ++i) {
      CHECK(attempt.distance_trace[i] <= attempt.distance_trace[i - 1] + 1e-12);
    }
    // Never worse than the initial random guess.
    CHECK(attempt.distance <=
          attempt.distance_trace.front() + 1e-9);
    const EvolutionUnitary lifted = s_to_u(attempt.scattering, b);
    CHECK(max_abs_diff(lifted.matrix(), attempt.approximation.matrix()) < 1e-8);
  }
}

TEST_CASE("toponogov argument checks", "[toponogov]") {
  const FockBasis b = basis(2, 2);
  const EvolutionUnitary target(b, Matrix::Identity(3, 3));
  ToponogovOptions options;
  options.tries = 0;
  CHECK_THROWS_AS(toponogov(target, 2, options), ArgumentError);
}

}  // namespace
}  // namespace photonlift
