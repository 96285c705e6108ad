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

#include "dirand/linalg.hpp"
#include "dirand/qutrit.hpp"
#include "dirand/tolerances.hpp"

namespace dirand {

/// gamma = 3 (sum_{i!=j} a_i/a_j)^{-1},
/// delta_k = -(gamma/3) sum_{i!=j} (a_i/a_j) omega^{-kj}.
struct SteeringCoefficients {
  double gamma;
  std::array<Complex, 3> delta;
};

SteeringCoefficients steering_coefficients(
    const SchmidtVector& alpha, const Tolerances& tol = default_tolerances());

/// W3 = A6 (x) Z + gamma A7 (x) X + delta_1 1 (x) Z + h.c., Alice first.
/// Bob (trusted) holds Z and X.
CMatrix build_steering_operator(const SchmidtVector& alpha, const CMatrix& a6,
                                const CMatrix& a7,
                                const Tolerances& tol = default_tolerances());

/// Which candidate ideal realization is used for (A6, A7).
struct SteeringConvention {
  bool a6_adjoint = false;  // Z or Z^dag
  bool a7_squared = false;  // X or X^2

  CMatrix a6() const;
  CMatrix a7() const;
  std::string describe() const;
};

struct SteeringQuantumValue {
  double value;
  SteeringConvention convention;
};

/// <psi(alpha)|W3|psi(alpha)> on the ideal realization. Tries the four
/// (A6, A7) candidates in the order (Z,X), (Z,X^2), (Z^dag,X), (Z^dag,X^2)
/// and returns the first reaching 3 within tol.steering_value.
/// Throws ConventionError if none does.
SteeringQuantumValue steering_quantum_value(
    const SchmidtVector& alpha, const Tolerances& tol = default_tolerances());

/// Convention resolved once on the maximally entangled state.
const SteeringConvention& resolved_steering_convention();

struct LhsBound {
  double value;
  std::array<int, 2> argmax;  // omega exponents assigned to A6, A7
  double margin;              // 3 - value
};

/// max over a6, a7 in {1, w, w^2} of the top eigenvalue of
/// a6 Z + gamma a7 X + delta_1 Z + h.c.
LhsBound steering_lhs_bound(const SchmidtVector& alpha,
                            const Tolerances& tol = default_tolerances());

/// Alice-side certified branches: P1 -> (Z, X), P2 -> (Z, X^2).
enum class AliceBranch { kP1, kP2 };
std::string to_string(AliceBranch b);

struct SteeringPair {
  CMatrix a6;
  CMatrix a7;
};

SteeringPair certified_alice_observables(AliceBranch branch);

/// How a branch pair is mapped before evaluation on psi(alpha).
enum class ObservableMap { kIdentity, kConjugate, kTranspose, kAdjoint };
std::string to_string(ObservableMap m);
CMatrix apply_map(ObservableMap m, const CMatrix& a);

struct BranchSteeringValue {
  double value;
  ObservableMap map;
};

/// Quantum value of one certified branch; tries the four maps in the order
/// declared and returns the first reaching 3.
BranchSteeringValue steering_value_for_branch(
    const SchmidtVector& alpha, AliceBranch branch,
    const Tolerances& tol = default_tolerances());

/// <W3> from correlator tables: c60 = <A_6 B_0> table, c71 = <A_7 B_1>
/// table (3x3, indexed [l][m]).
double steering_value_from_correlators(const SchmidtVector& alpha,
                                       const CMatrix& c60, const CMatrix& c71);

}  // namespace dirand
