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
#include <vector>

#include "dirand/linalg.hpp"
#include "dirand/qutrit.hpp"
#include "dirand/tolerances.hpp"

namespace dirand {

/// Ordered list of qutrit effects; outcome a is elements[a].
struct Povm {
  std::vector<CMatrix> elements;

  std::size_t size() const { return elements.size(); }
  const CMatrix& operator[](std::size_t a) const { return elements.at(a); }
  CMatrix sum() const;
};

struct ExtremalPovmParams {
  double lambda_first;  // weight of |0><0|, outcome 0
  double lambda_mid;    // shared weight of the seven phase vectors
  double lambda_last;   // weight of |2><2|, outcome 8
  std::array<double, 3> mu;
  /// Canonical relabeling: canonical coefficient i is alpha[permutation[i]].
  std::array<int, 3> permutation{0, 1, 2};
};

struct ExtremalPovm {
  Povm povm;
  ExtremalPovmParams params;
};

/// At least two Schmidt coefficients strictly above 1/3.
bool coverage_predicate(const SchmidtVector& alpha);
bool coverage_predicate(const std::array<double, 3>& alpha);

/// Nine-outcome rank-one POVM R_0 = l_f |0><0|, R_8 = l_l |2><2|,
/// R_a = l_m |a_a><a_a| with
/// |a_a> = mu_0|0> + mu_1 e^{2 pi i (a-1)/7}|1> + mu_2 e^{6 pi i (a-1)/7}|2>.
/// Requires alpha_0 > 1/3 and alpha_2 > 1/3 as given (no relabeling);
/// throws CoverageError otherwise.
ExtremalPovm build_extremal_povm(const SchmidtVector& alpha);

/// Permutation moving two coefficients above 1/3 to positions 0 and 2
/// (identity when already canonical). Throws CoverageError if the coverage
/// predicate fails.
std::array<int, 3> canonical_relabeling(const SchmidtVector& alpha);

/// Builds the POVM in the canonical labels and maps it back to the
/// original basis; params.permutation records the relabeling.
ExtremalPovm build_extremal_povm_relabeled(const SchmidtVector& alpha);

struct PovmValidation {
  bool psd = false;
  bool complete = false;
  bool rank_one = false;
  bool lin_independent = false;
  double min_eigenvalue = 0.0;
  double completeness_error = 0.0;
  double max_second_eigenvalue = 0.0;
  int gram_rank = 0;

  bool all() const { return psd && complete && rank_one && lin_independent; }
};

/// Throws DomainError unless the POVM has 9 elements of dimension 3.
PovmValidation validate_povm(const Povm& povm,
                             const Tolerances& tol = default_tolerances());

struct EqualProbabilityCheck {
  bool holds;
  std::vector<double> values;  // Tr[R_a rho_A]
  double max_deviation;
};

EqualProbabilityCheck equal_probability_check(
    const Povm& povm, const SchmidtVector& alpha,
    const Tolerances& tol = default_tolerances());

/// r[a](p, q) = <psi(alpha)| R_a (x) X^p Z^q |psi(alpha)>.
struct CoefficientTable {
  std::vector<CMatrix> r;

  std::size_t size() const { return r.size(); }
  Complex operator()(std::size_t a, int p, int q) const { return r.at(a)(p, q); }
};

/// Computed as Tr[(P R_a P)^T X^p Z^q].
CoefficientTable expansion_coefficients(const Povm& povm,
                                        const SchmidtVector& alpha);

/// P^{-1} (X^k Z^l)^* P^{-1}
CMatrix expansion_basis_element(int k, int l, const SchmidtVector& alpha);

/// R_a = (1/3) sum_{kl} r[a](k,l) P^{-1} (X^k Z^l)^* P^{-1}; the 1/3 makes
/// this the exact inverse of expansion_coefficients.
Povm reconstruct_from_coefficients(const CoefficientTable& table,
                                   const SchmidtVector& alpha);

/// Each element identity/9.
Povm uniform_povm();
/// Computational-basis projectors followed by six zero elements.
Povm padded_computational_povm();
/// Mixture with equal weight of the computational-basis measurement
/// (outcomes 0..2) and the X eigenbasis (outcomes 3..5); outcomes 6..8 are
/// zero. Complete but not extremal.
Povm mixed_projective_povm();
/// The two components of mixed_projective_povm, each padded to 9 outcomes.
std::array<Povm, 2> mixed_projective_components();

}  // namespace dirand
