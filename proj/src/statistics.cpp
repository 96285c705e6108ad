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

#include "dirand/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "dirand/errors.hpp"

namespace dirand {

namespace {

std::vector<CMatrix> effects_of(const CMatrix& observable) {
  const std::array<CMatrix, 3> p = order3_projectors(observable);
  return {p.begin(), p.end()};
}

void check_indices(int prep, int j, int k) {
  if (prep < 1 || prep > 2 || j < 0 || j >= kAliceInputs || k < 0 ||
      k >= kBobInputs) {
    throw DomainError("statistics index out of range");
  }
}

}  // namespace

ProtocolRealization ideal_realization(const SchmidtVector& alpha,
                                      const Povm& povm) {
  if (povm.size() != 9) throw DomainError("ideal_realization: need 9 effects");
  ProtocolRealization r;
  const std::array<Observable, 3> w1 = w1_ideal_alice();
  const W2Realization w2 = w2_ideal_realization();
  r.w2_convention = w2.convention;
  for (int j = 0; j < 3; ++j) {
    r.alice_effects[j] = effects_of(w1[j].matrix);
    r.alice_effects[3 + j] = effects_of(w2.alice[j].matrix);
  }
  r.steering_convention = resolved_steering_convention();
  r.alice_effects[6] = effects_of(r.steering_convention.a6());
  r.alice_effects[7] = effects_of(r.steering_convention.a7());
  r.alice_effects[8] = povm.elements;

  const std::array<CMatrix, 4> bob = bob_certified(CertifiedBranch::kQ1);
  for (int k = 0; k < kBobInputs; ++k) {
    const std::array<CMatrix, 3> p = order3_projectors(bob[k]);
    r.bob_effects[k] = p;
  }
  r.prep1 = max_entangled();
  r.prep2 = partial_state(alpha);
  return r;
}

StatisticsTable::StatisticsTable(SchmidtVector alpha)
    : alpha_(alpha), probs_(2 * kAliceInputs * kBobInputs) {
  for (int prep = 1; prep <= 2; ++prep)
    for (int j = 0; j < kAliceInputs; ++j)
      for (int k = 0; k < kBobInputs; ++k)
        probs_[index(prep, j, k)] = Eigen::MatrixXd::Zero(alice_outcomes(j), 3);
}

std::size_t StatisticsTable::index(int prep, int j, int k) {
  check_indices(prep, j, k);
  return static_cast<std::size_t>(((prep - 1) * kAliceInputs + j) * kBobInputs +
                                  k);
}

const Eigen::MatrixXd& StatisticsTable::at(int prep, int j, int k) const {
  return probs_[index(prep, j, k)];
}

Eigen::MatrixXd& StatisticsTable::at(int prep, int j, int k) {
  return probs_[index(prep, j, k)];
}

StatisticsTable statistics_of(const ProtocolRealization& r,
                              const SchmidtVector& alpha) {
  StatisticsTable t(alpha);
  for (int prep = 1; prep <= 2; ++prep) {
    const CVector& psi =
        (prep == 1 ? r.prep1 : r.prep2).amplitudes();
    for (int j = 0; j < kAliceInputs; ++j) {
      const std::vector<CMatrix>& fa = r.alice_effects[j];
      for (int k = 0; k < kBobInputs; ++k) {
        Eigen::MatrixXd& p = t.at(prep, j, k);
        for (std::size_t a = 0; a < fa.size(); ++a)
          for (int b = 0; b < 3; ++b)
            p(static_cast<Eigen::Index>(a), b) =
                expectation(psi, tensor(fa[a], r.bob_effects[k][b])).real();
      }
    }
  }
  return t;
}

StatisticsTable ideal_statistics(const SchmidtVector& alpha) {
  const ExtremalPovm povm = build_extremal_povm_relabeled(alpha);
  return statistics_of(ideal_realization(alpha, povm.povm), alpha);
}

double normalization_residual(const StatisticsTable& t) {
  double worst = 0.0;
  for (int prep = 1; prep <= 2; ++prep)
    for (int j = 0; j < kAliceInputs; ++j)
      for (int k = 0; k < kBobInputs; ++k)
        worst = std::max(worst, std::abs(t.at(prep, j, k).sum() - 1.0));
  return worst;
}

double nonsignaling_residual(const StatisticsTable& t) {
  double worst = 0.0;
  for (int prep = 1; prep <= 2; ++prep) {
    for (int j = 0; j < kAliceInputs; ++j) {
      const Eigen::VectorXd ref = t.at(prep, j, 0).rowwise().sum();
      for (int k = 1; k < kBobInputs; ++k) {
        const Eigen::VectorXd m = t.at(prep, j, k).rowwise().sum();
        worst = std::max(worst, (m - ref).cwiseAbs().maxCoeff());
      }
    }
    for (int k = 0; k < kBobInputs; ++k) {
      const Eigen::RowVectorXd ref = t.at(prep, 0, k).colwise().sum();
      for (int j = 1; j < kAliceInputs; ++j) {
        const Eigen::RowVectorXd m = t.at(prep, j, k).colwise().sum();
        worst = std::max(worst, (m - ref).cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

CMatrix correlators(const StatisticsTable& t, int prep, int j, int k) {
  if (j == kPovmInput) {
    throw DomainError("correlators: input 8 has nine outcomes");
  }
  return fourier_correlators(t.at(prep, j, k), 1e-10);
}

double w1_from_statistics(const StatisticsTable& t) {
  return bell_value_from_correlators(
      build_w1_functional(),
      [&](int j, int k) { return correlators(t, 1, j, k); });
}

double w2_from_statistics(const StatisticsTable& t) {
  return bell_value_from_correlators(
      build_w2_functional(),
      [&](int j, int k) { return correlators(t, 1, j, k); });
}

double steering_from_statistics(const StatisticsTable& t) {
  return steering_value_from_correlators(t.alpha(), correlators(t, 2, 6, 0),
                                         correlators(t, 2, 7, 1));
}

std::array<double, 9> povm_marginal(const StatisticsTable& t, int prep) {
  const Eigen::VectorXd m = t.at(prep, kPovmInput, 0).rowwise().sum();
  std::array<double, 9> out{};
  for (int a = 0; a < 9; ++a) out[a] = m(a);
  return out;
}

}  // namespace dirand
