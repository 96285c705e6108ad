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

#include "dirand/bell.hpp"
#include "dirand/povm.hpp"
#include "dirand/qutrit.hpp"
#include "dirand/steering.hpp"

namespace dirand {

inline constexpr int kAliceInputs = 9;  // j = 0..8, j = 8 has nine outcomes
inline constexpr int kBobInputs = 4;    // k = 0..3
inline constexpr int kPovmInput = 8;

/// Measurement devices and the two prepared states of the protocol.
/// Alice inputs: 0..2 W1 triple, 3..5 W2 triple, 6..7 steering, 8 POVM.
struct ProtocolRealization {
  std::array<std::vector<CMatrix>, kAliceInputs> alice_effects;
  std::array<std::array<CMatrix, 3>, kBobInputs> bob_effects;
  Ket prep1 = max_entangled();
  Ket prep2 = max_entangled();
  AliceConvention w2_convention = AliceConvention::kConjugated;
  SteeringConvention steering_convention;
};

/// Ideal devices for alpha with a caller-supplied nine-outcome POVM.
ProtocolRealization ideal_realization(const SchmidtVector& alpha,
                                      const Povm& povm);

/// Full behavior p(a,b|j,k,prep), prep in {1,2}.
class StatisticsTable {
 public:
  explicit StatisticsTable(SchmidtVector alpha);

  static int alice_outcomes(int j) { return j == kPovmInput ? 9 : 3; }

  const Eigen::MatrixXd& at(int prep, int j, int k) const;
  Eigen::MatrixXd& at(int prep, int j, int k);
  const SchmidtVector& alpha() const { return alpha_; }

 private:
  static std::size_t index(int prep, int j, int k);
  SchmidtVector alpha_;
  std::vector<Eigen::MatrixXd> probs_;
};

/// Born-rule table of a realization.
StatisticsTable statistics_of(const ProtocolRealization& r,
                              const SchmidtVector& alpha);

/// Ideal behavior with the (relabeled) extremal POVM at j = 8.
/// Throws CoverageError for inadmissible alpha.
StatisticsTable ideal_statistics(const SchmidtVector& alpha);

/// Largest |sum_ab p - 1| over all entries.
double normalization_residual(const StatisticsTable& t);
/// Largest change of a one-party marginal under the other party's input.
double nonsignaling_residual(const StatisticsTable& t);

/// Fourier correlators of a three-outcome entry (j < 8).
CMatrix correlators(const StatisticsTable& t, int prep, int j, int k);

double w1_from_statistics(const StatisticsTable& t);
double w2_from_statistics(const StatisticsTable& t);
double steering_from_statistics(const StatisticsTable& t);

/// Alice's j = 8 outcome distribution in preparation `prep`.
std::array<double, 9> povm_marginal(const StatisticsTable& t, int prep = 2);

}  // namespace dirand
