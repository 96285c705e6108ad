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

#include "dirand/steering.hpp"

#include <cmath>
#include <limits>

#include "dirand/errors.hpp"

namespace dirand {

SteeringCoefficients steering_coefficients(const SchmidtVector& alpha,
                                           const Tolerances& tol) {
  if (alpha.min() < tol.degeneracy) {
    throw DegenerateStateError("steering_coefficients: degenerate alpha");
  }
  double ratio_sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) ratio_sum += alpha[i] / alpha[j];
  SteeringCoefficients c{3.0 / ratio_sum, {}};
  for (int k = 0; k < 3; ++k) {
    Complex s{0.0, 0.0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) s += (alpha[i] / alpha[j]) * omega_power(-k * j);
    c.delta[k] = -(c.gamma / 3.0) * s;
  }
  return c;
}

CMatrix build_steering_operator(const SchmidtVector& alpha, const CMatrix& a6,
                                const CMatrix& a7, const Tolerances& tol) {
  const SteeringCoefficients c = steering_coefficients(alpha, tol);
  const CMatrix z = clock_z();
  const CMatrix x = shift_x();
  const CMatrix half = tensor(a6, z) + c.gamma * tensor(a7, x) +
                       c.delta[1] * tensor(identity(a6.rows()), z);
  return half + CMatrix(half.adjoint());
}

CMatrix SteeringConvention::a6() const {
  return a6_adjoint ? CMatrix(clock_z().adjoint()) : clock_z();
}

CMatrix SteeringConvention::a7() const {
  return a7_squared ? weyl(2, 0) : shift_x();
}

std::string SteeringConvention::describe() const {
  return std::string("A6=") + (a6_adjoint ? "Z^dag" : "Z") +
         ", A7=" + (a7_squared ? "X^2" : "X");
}

SteeringQuantumValue steering_quantum_value(const SchmidtVector& alpha,
                                            const Tolerances& tol) {
  const Ket psi = partial_state(alpha);
  for (bool adj : {false, true}) {
    for (bool sq : {false, true}) {
      const SteeringConvention conv{adj, sq};
      const CMatrix w = build_steering_operator(alpha, conv.a6(), conv.a7(), tol);
      const double v = expectation(psi.amplitudes(), w).real();
      if (std::abs(v - 3.0) <= tol.steering_value) return {v, conv};
    }
  }
  throw ConventionError("no (A6, A7) convention reaches <W3> = 3");
}

const SteeringConvention& resolved_steering_convention() {
  static const SteeringConvention conv =
      steering_quantum_value(SchmidtVector::maximal()).convention;
  return conv;
}

LhsBound steering_lhs_bound(const SchmidtVector& alpha, const Tolerances& tol) {
  const SteeringCoefficients c = steering_coefficients(alpha, tol);
  const CMatrix z = clock_z();
  const CMatrix x = shift_x();
  LhsBound best{-std::numeric_limits<double>::infinity(), {0, 0}, 0.0};
  for (int s6 = 0; s6 < 3; ++s6) {
    for (int s7 = 0; s7 < 3; ++s7) {
      const CMatrix half = omega_power(s6) * z + c.gamma * omega_power(s7) * x +
                           c.delta[1] * z;
      const CMatrix h = half + CMatrix(half.adjoint());
      const double top = hermitian_eigenvalues3(h)[0];
      if (top > best.value + 1e-13) best = {top, {s6, s7}, 0.0};
    }
  }
  best.margin = 3.0 - best.value;
  return best;
}

std::string to_string(AliceBranch b) {
  return b == AliceBranch::kP1 ? "P1" : "P2";
}

SteeringPair certified_alice_observables(AliceBranch branch) {
  return {clock_z(), branch == AliceBranch::kP1 ? shift_x() : weyl(2, 0)};
}

std::string to_string(ObservableMap m) {
  switch (m) {
    case ObservableMap::kIdentity:
      return "identity";
    case ObservableMap::kConjugate:
      return "conjugate";
    case ObservableMap::kTranspose:
      return "transpose";
    default:
      return "adjoint";
  }
}

CMatrix apply_map(ObservableMap m, const CMatrix& a) {
  switch (m) {
    case ObservableMap::kIdentity:
      return a;
    case ObservableMap::kConjugate:
      return a.conjugate();
    case ObservableMap::kTranspose:
      return a.transpose();
    default:
      return a.adjoint();
  }
}

BranchSteeringValue steering_value_for_branch(const SchmidtVector& alpha,
                                              AliceBranch branch,
                                              const Tolerances& tol) {
  const SteeringPair pair = certified_alice_observables(branch);
  const Ket psi = partial_state(alpha);
  for (ObservableMap m : {ObservableMap::kIdentity, ObservableMap::kConjugate,
                          ObservableMap::kTranspose, ObservableMap::kAdjoint}) {
    const CMatrix w = build_steering_operator(alpha, apply_map(m, pair.a6),
                                              apply_map(m, pair.a7), tol);
    const double v = expectation(psi.amplitudes(), w).real();
    if (std::abs(v - 3.0) <= tol.steering_value) return {v, m};
  }
  throw ConventionError("no map of the branch observables reaches <W3> = 3");
}

double steering_value_from_correlators(const SchmidtVector& alpha,
                                       const CMatrix& c60, const CMatrix& c71) {
  const SteeringCoefficients c = steering_coefficients(alpha);
  // <B_0> is the (l=0, m=1) entry of any table with Bob input 0.
  const Complex half = c60(1, 1) + c.gamma * c71(1, 1) + c.delta[1] * c60(0, 1);
  return 2.0 * half.real();
}

}  // namespace dirand
