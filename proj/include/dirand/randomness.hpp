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
#include <vector>

#include "dirand/linalg.hpp"
#include "dirand/povm.hpp"
#include "dirand/qutrit.hpp"
#include "dirand/statistics.hpp"
#include "dirand/tolerances.hpp"

namespace dirand {

struct GuessingReport {
  double guessing_probability;
  double min_entropy_bits;
  std::array<double, 9> marginal;
};

/// -log2 G for 0 < G <= 1; DomainError otherwise.
double min_entropy(double guessing_probability);

/// Reduces the adversary's guess to sup over convex weights of
/// sum_a q_a r^a_00 = max_a r^a_00. Requires r^a_00 = 1/9 for every a
/// (within tol.equal_prob), otherwise throws CertificationInapplicable.
GuessingReport guessing_probability_ideal(
    const SchmidtVector& alpha, const Povm& povm,
    const Tolerances& tol = default_tolerances());

/// Finite-dimensional adversary acting on the second preparation.
///
/// Global space ordering is A' A'' B' B'' E with A', B' qutrits. B'' is a
/// qubit whose |0> / |1> carry the Q1 / Q2 transposition branches. The state
/// is psi(alpha)_{A'B'} (x) xi_{A''B''E}; Eve measures {Z_e} and guesses
/// a = e.
struct EveStrategy {
  std::string name;
  int alice_junk_dim = 1;
  int eve_dim = 1;
  CVector xi;                            // A'' (x) B'' (x) E
  std::vector<CMatrix> eve_povm;         // on E
  std::vector<CMatrix> alice_povm;       // nine effects on A' (x) A''
  std::array<CMatrix, 2> alice_steering; // A6, A7 on A' (x) A''
  std::array<CMatrix, 4> bob;            // B_0..B_3 on B' (x) B''

  static constexpr int kBobJunkDim = 2;

  /// q_{b,e} = || (1 (x) Q_b (x) sqrt(Z_e)) xi ||^2, b = 0 (Q1) or 1 (Q2).
  double branch_weight(int branch, int eve_outcome) const;
};

/// Bob's certified observables on B' (x) B'': M (x) Q1 + M^T (x) Q2.
std::array<CMatrix, 4> certified_bob_with_branches();

/// Eve holds nothing; the devices act in the Q1 branch only.
EveStrategy trivial_eve(const Povm& povm);
/// Eve keeps a classical copy of the branch label; Alice's device applies
/// R_a in branch Q1 and R_a^T in branch Q2.
EveStrategy branch_copy_eve(const Povm& povm, double q1 = 0.5);
/// Branch superposition correlated with non-orthogonal Eve states, read out
/// with a three-outcome measurement in a rotated basis.
EveStrategy branch_mixing_eve(const Povm& povm, double q1 = 0.3,
                              double overlap = 0.6);
/// Alice's junk carries an extra qubit maximally entangled with Eve, who
/// performs a four-outcome tetrahedral POVM.
EveStrategy entangled_junk_eve(const Povm& povm, double q1 = 0.5);
/// Eve prepares one of several POVM components of a non-extremal Alice
/// measurement and records which (labels c = 0.. on A'' and E).
EveStrategy splitting_eve(const std::vector<Povm>& components,
                          const std::vector<double>& weights);
/// Copy of `s` with B_1 replaced by Z, which breaks the statistics.
EveStrategy with_perturbed_bob(EveStrategy s);

/// Corpus of statistics-compatible strategies for an extremal POVM.
std::vector<EveStrategy> eve_corpus(const Povm& povm);

/// Max-norm deviation of the strategy's preparation-2 statistics
/// (j = 6, 7, 8; k = 0..3) from the ideal ones for (alpha, povm).
double strategy_deviation(const EveStrategy& s, const SchmidtVector& alpha,
                          const Povm& povm);

struct EveAttackResult {
  double value;          // sum_a <Psi| R_a (x) 1 (x) Z_a |Psi>
  double max_deviation;  // compatibility residual
};

/// Throws IncompatibleStrategy when the deviation exceeds tol.compatibility.
EveAttackResult eve_attack_value(const EveStrategy& s,
                                 const SchmidtVector& alpha, const Povm& povm,
                                 const Tolerances& tol = default_tolerances());

/// Conditional data for one (branch, Eve outcome) with nonzero weight.
struct ConditionalTerm {
  int branch;
  int eve_outcome;
  double weight;
  CoefficientTable table;
  bool valid_povm;
  double deviation_from_ideal;
};

struct DecompositionReport {
  bool convex_identity = false;    // (i) sum q r~ = r
  bool conditionals_valid = false; // (ii) every conditional POVM is valid
  bool conditionals_match = false; // (iii) r~ = r for every (b, e)
  double convex_error = 0.0;
  double max_conditional_deviation = 0.0;
  double total_weight = 0.0;
  std::vector<ConditionalTerm> terms;

  bool passed() const {
    return convex_identity && conditionals_valid && conditionals_match;
  }
  /// "i", "ii", "iii" for the first failing clause, empty if all pass.
  std::string failing_clause() const;
};

/// Conditional coefficient tables of Alice's device for each
/// (branch, Eve outcome) and the three checks on them. Gated on
/// statistics compatibility like eve_attack_value.
DecompositionReport decomposition_check(
    const Povm& povm, const EveStrategy& s, const SchmidtVector& alpha,
    const Tolerances& tol = default_tolerances());

}  // namespace dirand
