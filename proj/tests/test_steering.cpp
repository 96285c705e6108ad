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

#include "dirand/errors.hpp"
#include "dirand/steering.hpp"
#include "test_util.hpp"

using namespace dirand;

TEST_CASE("steering coefficients", "[steering]") {
  const SteeringCoefficients m = steering_coefficients(SchmidtVector::maximal());
  CHECK(std::abs(m.gamma - 0.5) < 1e-15);
  CHECK(std::abs(m.delta[0] + 1.0) < 1e-15);
  CHECK(std::abs(m.delta[1]) < 1e-15);
  CHECK(std::abs(m.delta[2]) < 1e-15);
  const SchmidtVector a(1.0 / std::sqrt(2.0), 0.5, 0.5);
  CHECK(std::abs(steering_coefficients(a).gamma - oracle::kGammaSqrtHalf) < 1e-15);
  CHECK(std::abs(oracle::kGammaSqrtHalf - 3.0 / (3.0 * std::sqrt(2.0) + 2.0)) < 1e-15);
}

TEST_CASE("delta_0 is always -1", "[steering][property]") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const SchmidtVector a = testutil::admissible_alpha(rng);
    const SteeringCoefficients c = steering_coefficients(a);
    CHECK(std::abs(c.delta[0] + 1.0) < 1e-13);
    CHECK(std::abs(c.gamma - oracle::steering_gamma(a.values())) < 1e-14);
  }
}

TEST_CASE("degenerate states are rejected", "[steering]") {
  Tolerances t;
  t.degeneracy = 0.1;
  const SchmidtVector a = SchmidtVector::normalized(1.0, 0.05, 1.0);
  CHECK_THROWS_AS(steering_coefficients(a, t), DegenerateStateError);
}

TEST_CASE("ideal quantum value is 3", "[steering][property]") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    const SchmidtVector a = testutil::admissible_alpha(rng);
    const SteeringQuantumValue q = steering_quantum_value(a);
    CHECK(std::abs(q.value - 3.0) < 1e-9);
    CHECK(q.convention.a6_adjoint);
    CHECK_FALSE(q.convention.a7_squared);
  }
  CHECK(resolved_steering_convention().describe() == "A6=Z^dag, A7=X");
}

TEST_CASE("steering operator is Hermitian", "[steering]") {
  const SchmidtVector a = SchmidtVector::normalized(0.6, 0.57, 0.5616);
  const CMatrix w = build_steering_operator(a, clock_z().adjoint(), shift_x());
  CHECK(is_hermitian(w, 1e-14));
}

TEST_CASE("LHS bound at the maximally entangled state", "[steering]") {
  const LhsBound b = steering_lhs_bound(SchmidtVector::maximal());
  CHECK(std::abs(b.value - oracle::kLhsMaximal) < 1e-12);
  CHECK(std::abs(b.margin - (3.0 - b.value)) < 1e-15);
}

TEST_CASE("LHS bound matches brute force and stays below 3",
          "[steering][property]") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const SchmidtVector a = testutil::admissible_alpha(rng);
    const LhsBound b = steering_lhs_bound(a);
    CHECK(std::abs(b.value - oracle::lhs_bound_bruteforce(a.values())) < 1e-8);
    CHECK(b.value < 3.0 - 1e-6);
  }
}

TEST_CASE("certified Alice branches reach 3 under their maps", "[steering]") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 10; ++t) {
    const SchmidtVector a = testutil::admissible_alpha(rng);
    const BranchSteeringValue p1 = steering_value_for_branch(a, AliceBranch::kP1);
    const BranchSteeringValue p2 = steering_value_for_branch(a, AliceBranch::kP2);
    CHECK(p1.map == ObservableMap::kConjugate);
    CHECK(p2.map == ObservableMap::kAdjoint);
    CHECK(std::abs(p1.value - 3.0) < 1e-9);
    CHECK(std::abs(p2.value - 3.0) < 1e-9);
  }
}

TEST_CASE("observable maps", "[steering]") {
  const CMatrix m = omega_power(1) * shift_x() * clock_z();
  CHECK(max_abs_diff(apply_map(ObservableMap::kAdjoint, m), m.adjoint()) == 0.0);
  CHECK(max_abs_diff(apply_map(ObservableMap::kTranspose, m), m.transpose()) == 0.0);
  CHECK(to_string(ObservableMap::kConjugate) == "conjugate");
  CHECK(to_string(AliceBranch::kP2) == "P2");
}
