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
#include <functional>
#include <string>
#include <vector>

#include "dirand/linalg.hpp"
#include "dirand/qutrit.hpp"
#include "dirand/tolerances.hpp"

namespace dirand {

/// Three-outcome measurement in observable form A = sum_a omega^a F_a.
/// Projective observables are unitary with spectrum in {1, omega, omega^2}.
struct Observable {
  CMatrix matrix;
  bool projective = true;

  /// Validates unitarity and A^3 = 1 (equivalently the omega spectrum).
  static Observable projective_from(CMatrix m, double tol = 1e-10);
  /// Generalized observable; only requires A^dag A <= 1.
  static Observable general_from(CMatrix m, double tol = 1e-10);
};

bool has_omega_spectrum(const CMatrix& m, double tol = 1e-10);

/// Bob-side power inside a Bell term: B_k or B_k^dag.
enum class BobPower { kPlain, kAdjoint };

struct BellTerm {
  int alice_slot;
  int bob_slot;
  BobPower power;
  Complex coeff;
};

/// Correlation-form functional over three Alice and three Bob slots:
/// W = sum_terms coeff * A_slot (x) B_slot^(power) + h.c.
/// The slots map onto global measurement inputs of the protocol.
struct BellFunctional {
  std::string name;
  std::array<int, 3> alice_inputs{0, 1, 2};
  std::array<int, 3> bob_inputs{0, 1, 2};
  std::vector<BellTerm> terms;

  Complex coefficient(int alice_slot, int bob_slot,
                      BobPower power = BobPower::kPlain) const;
};

/// lambda/27 sum_{jk} omega^{jk} A_j (x) B_k + h.c. on inputs j,k = 0..2.
BellFunctional build_w1_functional();
/// Same pattern on Alice inputs 3..5 against the Bob triple
/// (B_0, B_2^dag, B_3).
BellFunctional build_w2_functional();

struct DeterministicStrategy {
  std::array<int, 3> alice{0, 0, 0};
  std::array<int, 3> bob{0, 0, 0};
  friend bool operator==(const DeterministicStrategy&,
                         const DeterministicStrategy&) = default;
};

struct ClassicalBound {
  double value;
  DeterministicStrategy argmax;
};

/// Value of the functional when every <A_j B_k> is replaced by
/// omega^{a_j + b_k} (omega^{a_j - b_k} on adjoint terms).
double deterministic_value(const BellFunctional& f,
                           const DeterministicStrategy& s);

/// Exhaustive maximum over all 3^3 * 3^3 deterministic strategies; ties go
/// to the lexicographically first strategy (alice digits, then bob).
ClassicalBound classical_bound(const BellFunctional& f);

/// Closed forms 2cos(pi/9)/(3 sqrt 3) and 2/(3 sqrt 3).
double beta_local();
double beta_quantum();

/// Z, X, omega X^2 Z^2.
std::array<Observable, 3> bob_ideal_first();

/// Alice construction lambda^* / sqrt(3) sum_k omega^{-jk} B_k^*; with
/// kPlain the complex conjugation of the B_k is skipped.
enum class AliceConvention { kConjugated, kPlain };
std::string to_string(AliceConvention c);

Observable alice_optimal(int j, const std::array<CMatrix, 3>& bob,
                         AliceConvention convention =
                             AliceConvention::kConjugated);

/// Hermitian 9x9 operator of the functional for the given slot operators.
CMatrix bell_operator(const BellFunctional& f,
                      const std::array<CMatrix, 3>& alice,
                      const std::array<CMatrix, 3>& bob);

/// <psi|W|psi>. Throws ContractError if the imaginary residue exceeds
/// tol.imag_residue.
double bell_value(const BellFunctional& f, const Ket& state,
                  const std::array<CMatrix, 3>& alice,
                  const std::array<CMatrix, 3>& bob,
                  const Tolerances& tol = default_tolerances());

/// Transposition branch of the certified Bob observables.
enum class CertifiedBranch { kQ1, kQ2 };
std::string to_string(CertifiedBranch b);

/// Bob's four certified observables k = 0..3 in one branch:
/// Q1 = (Z, X, omega X^2 Z^2, omega^2 X^2 Z), Q2 = their transposes.
std::array<CMatrix, 4> bob_certified(CertifiedBranch branch);

struct W2Realization {
  std::array<Observable, 3> alice;   // A_3, A_4, A_5
  std::array<CMatrix, 3> bob_slots;  // B_0, B_2, B_3 (W2 applies the dagger)
  AliceConvention convention;
  double value;
};

/// Ideal A_3..A_5 from the W1 Alice pattern applied to (B_0, B_2^dag, B_3).
/// Tries the conjugated convention first, then the plain one; the passing
/// convention must give valid observables and reach beta_Q within 1e-9.
W2Realization w2_ideal_realization();
std::array<Observable, 3> w2_ideal_alice();

/// W1 Alice observables A_0..A_2 for the ideal Bob triple.
std::array<Observable, 3> w1_ideal_alice();

/// p(a,b) -> <A_l B_m> = sum_ab omega^{al+bm} p(a,b), indexed [l][m].
CMatrix fourier_correlators(const Eigen::MatrixXd& probs, double tol = 1e-12);
/// Inverse transform; the result is real up to rounding.
Eigen::MatrixXd inverse_fourier(const CMatrix& correlators);

/// Evaluates the functional from correlator tables. `correlators(j, k)`
/// returns the 3x3 table for global Alice input j and Bob input k.
double bell_value_from_correlators(
    const BellFunctional& f,
    const std::function<CMatrix(int, int)>& correlators);

struct RelationCheck {
  bool holds;
  std::array<double, 3> residuals;
};

/// B_0^dag = -w{B_2^dag, B_3}, B_3^dag = -w{B_0, B_2^dag},
/// B_2 = -w{B_3, B_0}, all in Frobenius norm.
RelationCheck check_anticommutator_relations(
    const CMatrix& b0, const CMatrix& b2, const CMatrix& b3,
    const Tolerances& tol = default_tolerances());

/// (-omega {B_0, B_2^dag})^dag
CMatrix reconstruct_b3(const CMatrix& b0, const CMatrix& b2);

/// Q1: X^p Z^q, Q2: Z^q X^{2p}.
CMatrix certified_weyl_block(int p, int q, CertifiedBranch branch);

}  // namespace dirand
