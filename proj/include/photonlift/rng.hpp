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
#include <random>

namespace photonlift {

/**
 * Seedable random stream with a fixed splitting rule.
 *
 * The generator is mt19937_64 seeded with splitmix64(seed). Independent
 * child streams for trial t are derived as
 * splitmix64(seed + 0x9E3779B97F4A7C15 * (t + 1)), so trials can run in
 * any order (or concurrently) and still reproduce. Uniform doubles come
 * from the top 53 bits of the engine output; normals use Box-Muller on
 * those uniforms. None of this delegates to std distributions, so the
 * sequence is identical across standard libraries.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /** Independent stream for trial `index` of this seed. */
  Rng child(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

  /** Uniform on [0, 1). */
  double uniform01();

  /** Standard normal deviate. */
  double normal();

  std::uint64_t next_u64();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/** splitmix64 step; the seed/stream mixing function used by Rng. */
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace photonlift
