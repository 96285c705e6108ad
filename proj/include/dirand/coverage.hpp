// Copyright 2026 The qutrit-dirand Authors
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

#include "dirand/qutrit.hpp"

namespace dirand {

/// Squared Schmidt coefficients uniform on the 2-simplex.
SchmidtVector sample_schmidt(std::mt19937_64& rng);

/// Schmidt coefficients of a Haar-random pure state on C^3 (x) C^3.
SchmidtVector sample_schmidt_haar(std::mt19937_64& rng);

enum class SamplingMeasure { kUniformSimplex, kHaar };

/// Probability that a uniform-simplex state passes the coverage predicate:
/// the failing region is three disjoint corners of area (1/9)^2 each
/// against a triangle of area 1/2, leaving 1 - 6/81 = 25/27.
inline constexpr double kCoverageAnalytic = 25.0 / 27.0;

struct CoverageResult {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
  double halfwidth = 0.0;  // binomial 95% normal-approximation half-width
};

/// Single-stream estimate driven by the caller's generator.
CoverageResult monte_carlo_coverage(std::uint64_t n, std::mt19937_64& rng,
                                    SamplingMeasure measure =
                                        SamplingMeasure::kUniformSimplex);

/// Parallel estimate. Samples are split into fixed-size blocks, block b
/// seeded from (seed, b), so the result does not depend on `workers`
/// (0 = hardware concurrency).
CoverageResult monte_carlo_coverage(std::uint64_t n, std::uint64_t seed,
                                    unsigned workers = 0,
                                    SamplingMeasure measure =
                                        SamplingMeasure::kUniformSimplex);

}  // namespace dirand
