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

#include "photonlift/linalg.hpp"
#include "photonlift/matrix.hpp"
#include "photonlift/rng.hpp"

namespace photonlift::test {

inline Matrix random_unitary(Eigen::Index m, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(m, rng);
}

inline Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols,
                              std::uint64_t seed) {
  Rng rng(seed);
  return random_complex_matrix(rows, cols, rng);
}

inline Matrix random_hermitian(Eigen::Index m, std::uint64_t seed) {
  const Matrix g = random_gaussian(m, m, seed);
  return (g + g.adjoint()) / 2.0;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace photonlift::test
