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

#include "catch_amalgamated.hpp"

#include <random>

#include "dirand/coverage.hpp"
#include "dirand/errors.hpp"
#include "dirand/povm.hpp"

using namespace dirand;

TEST_CASE("analytic coverage constant", "[coverage]") {
  CHECK(std::abs(kCoverageAnalytic - 25.0 / 27.0) < 1e-16);
  CHECK(std::abs(kCoverageAnalytic - 0.925926) < 1e-6);
}

TEST_CASE("samplers return normalized Schmidt vectors", "[coverage][property]") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    for (const SchmidtVector& a : {sample_schmidt(rng), sample_schmidt_haar(rng)}) {
      const auto s = a.squares();
      CHECK(std::abs(s[0] + s[1] + s[2] - 1.0) < 1e-12);
      CHECK(a.min() > 0.0);
    }
  }
}

TEST_CASE("simplex sampler has the uniform marginal mean", "[coverage]") {
  std::mt19937_64 rng(42);
  double mean = 0.0;
  const int n = 200000;
  for (int t = 0; t < n; ++t) mean += sample_schmidt(rng).squares()[0];
  mean /= n;
  CHECK(std::abs(mean - 1.0 / 3.0) < 0.003);
}

TEST_CASE("fixed seed is bit reproducible", "[coverage]") {
  const CoverageResult a = monte_carlo_coverage(10, 7);
  const CoverageResult b = monte_carlo_coverage(10, 7);
  CHECK(a.hits == b.hits);
  CHECK(a.fraction == b.fraction);
  CHECK(a.samples == 10);
}

TEST_CASE("result does not depend on the worker count", "[coverage]") {
  const CoverageResult one = monte_carlo_coverage(300000, 99, 1);
  const CoverageResult three = monte_carlo_coverage(300000, 99, 3);
  CHECK(one.hits == three.hits);
}

TEST_CASE("estimate agrees with 25/27", "[coverage]") {
  const CoverageResult r = monte_carlo_coverage(400000, 5);
  CHECK(std::abs(r.fraction - kCoverageAnalytic) < 4.0 * r.halfwidth / 1.96 + 1e-12);
  CHECK(r.halfwidth > 0.0);
  std::mt19937_64 rng(5);
  const CoverageResult s = monte_carlo_coverage(100000, rng);
  CHECK(std::abs(s.fraction - kCoverageAnalytic) < 0.005);
}

TEST_CASE("Haar-induced coverage is reported separately", "[coverage]") {
  const CoverageResult r =
      monte_carlo_coverage(100000, 3, 0, SamplingMeasure::kHaar);
  CHECK(r.fraction > 0.5);
  CHECK(r.fraction <= 1.0);
}

TEST_CASE("zero samples is an error", "[coverage]") {
  CHECK_THROWS_AS(monte_carlo_coverage(0, 1), DomainError);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(monte_carlo_coverage(0, rng), DomainError);
}
