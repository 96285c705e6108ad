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
#include <optional>

#include "dirand/bell.hpp"
#include "dirand/coverage.hpp"
#include "dirand/report.hpp"
#include "dirand/tolerances.hpp"

namespace dirand {

struct BoundsReport {
  ClassicalBound w1_classical;
  ClassicalBound w2_classical;
  double beta_local;
  double beta_quantum;
  double w1_value;
  double w2_value;
  AliceConvention w2_convention;
  double enumeration_seconds;
  bool pass;
};

/// Enumerated classical bounds and ideal quantum values of W1 and W2.
BoundsReport run_bounds(const Tolerances& tol = default_tolerances());
Json bounds_to_json(const BoundsReport& b);

struct CoverageOptions {
  std::uint64_t samples;
  std::uint64_t seed;
  unsigned workers = 0;
};

/// Coverage is consistent when the estimate lies within four binomial
/// standard errors (plus rounding) of 25/27.
bool coverage_consistent(const CoverageResult& c);

struct CertificationReport {
  Json json;
  bool pass = false;
};

/// Full chain for one state: bounds, relations, steering, POVM,
/// statistics, guessing probability and the adversary corpus.
/// Throws CoverageError / DomainError for inadmissible alpha.
CertificationReport certify(const SchmidtVector& alpha,
                            const Tolerances& tol = default_tolerances(),
                            std::optional<CoverageOptions> coverage = {});

}  // namespace dirand
