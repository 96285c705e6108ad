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

#include "dirand/coverage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "dirand/errors.hpp"
#include "dirand/povm.hpp"

namespace dirand {

namespace {

constexpr std::uint64_t kBlockSize = 1u << 16;

double unit_open(std::mt19937_64& rng) {
  // (0, 1]: 53 random bits, never zero
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::array<double, 3> simplex_amplitudes(std::mt19937_64& rng) {
  std::array<double, 3> e;
  for (double& x : e) x = -std::log(unit_open(rng));
  const double s = e[0] + e[1] + e[2];
  return {std::sqrt(e[0] / s), std::sqrt(e[1] / s), std::sqrt(e[2] / s)};
}

double standard_normal(std::mt19937_64& rng) {
  // Box-Muller, one value per call
  const double u1 = unit_open(rng);
  const double u2 = unit_open(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::array<double, 3> haar_amplitudes(std::mt19937_64& rng) {
  CMatrix g(3, 3);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      g(i, j) = Complex(standard_normal(rng), standard_normal(rng));
  g /= g.norm();
  Eigen::JacobiSVD<CMatrix> svd(g);
  const RVector s = svd.singularValues();
  return {s(0), s(1), s(2)};
}

std::array<double, 3> draw(std::mt19937_64& rng, SamplingMeasure measure) {
  return measure == SamplingMeasure::kHaar ? haar_amplitudes(rng)
                                           : simplex_amplitudes(rng);
}

SchmidtVector draw_valid(std::mt19937_64& rng, SamplingMeasure measure) {
  for (;;) {
    const std::array<double, 3> a = draw(rng, measure);
    if (std::min({a[0], a[1], a[2]}) >= default_tolerances().degeneracy) {
      return SchmidtVector::normalized(a[0], a[1], a[2]);
    }
  }
}

CoverageResult finish(std::uint64_t n, std::uint64_t hits) {
  CoverageResult r;
  r.samples = n;
  r.hits = hits;
  r.fraction = static_cast<double>(hits) / static_cast<double>(n);
  r.halfwidth = 1.96 * std::sqrt(r.fraction * (1.0 - r.fraction) /
                                 static_cast<double>(n));
  return r;
}

}  // namespace

SchmidtVector sample_schmidt(std::mt19937_64& rng) {
  return draw_valid(rng, SamplingMeasure::kUniformSimplex);
}

SchmidtVector sample_schmidt_haar(std::mt19937_64& rng) {
  return draw_valid(rng, SamplingMeasure::kHaar);
}

CoverageResult monte_carlo_coverage(std::uint64_t n, std::mt19937_64& rng,
                                    SamplingMeasure measure) {
  if (n == 0) throw DomainError("monte_carlo_coverage: need n >= 1");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (coverage_predicate(draw(rng, measure))) ++hits;
  }
  return finish(n, hits);
}

CoverageResult monte_carlo_coverage(std::uint64_t n, std::uint64_t seed,
                                    unsigned workers, SamplingMeasure measure) {
  if (n == 0) throw DomainError("monte_carlo_coverage: need n >= 1");
  const std::uint64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, blocks));

  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> hits(workers, 0);
  auto run = [&](unsigned w) {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(b),
                        static_cast<std::uint32_t>(b >> 32)};
      std::mt19937_64 rng(seq);
      const std::uint64_t count = std::min(kBlockSize, n - b * kBlockSize);
      for (std::uint64_t i = 0; i < count; ++i) {
        if (coverage_predicate(draw(rng, measure))) ++hits[w];
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (std::thread& t : pool) t.join();

  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  return finish(n, total);
}

}  // namespace dirand
