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

#include <array>
#include <string>

#include <nlohmann/json.hpp>

#include "dirand/coverage.hpp"
#include "dirand/linalg.hpp"
#include "dirand/povm.hpp"
#include "dirand/randomness.hpp"
#include "dirand/statistics.hpp"
#include "dirand/tolerances.hpp"

namespace dirand {

using Json = nlohmann::json;

/// Complex numbers are [re, im]; matrices are arrays of rows.
Json to_json(Complex z);
Json to_json(const CMatrix& m);
Json to_json(const Eigen::MatrixXd& m);
Complex complex_from_json(const Json& j);
CMatrix cmatrix_from_json(const Json& j);
Eigen::MatrixXd rmatrix_from_json(const Json& j);

/// {alpha, elements, params{lambda_first, lambda_mid, lambda_last, mu,
/// permutation}}
Json povm_to_json(const ExtremalPovm& povm, const SchmidtVector& alpha);
Povm povm_from_json(const Json& j);

/// {alpha, entries: [{prep, j, k, probs}]}
Json statistics_to_json(const StatisticsTable& t);
/// Throws DomainError on a malformed document.
StatisticsTable statistics_from_json(const Json& j);

/// {G, Hmin_bits, marginal}
Json guessing_to_json(const GuessingReport& g);
Json coverage_to_json(const CoverageResult& c);
Json tolerances_to_json(const Tolerances& t);

}  // namespace dirand
