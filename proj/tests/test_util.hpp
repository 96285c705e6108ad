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
#include <cmath>
#include <random>

#include "dirand/linalg.hpp"
#include "dirand/povm.hpp"
#include "dirand/qutrit.hpp"
#include "oracles.hpp"

namespace testutil {

inline oracle::Mat to_oracle(const dirand::CMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<oracle::C>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline double diff(const dirand::CMatrix& a, const oracle::Mat& b) {
  return oracle::max_diff(to_oracle(a), b);
}

inline dirand::CMatrix random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  dirand::CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return (m + m.adjoint()) / 2.0;
}

/// Admissible Schmidt vector: uniform simplex draws that pass the coverage
/// predicate and keep every coefficient above `floor`.
inline dirand::SchmidtVector admissible_alpha(std::mt19937_64& rng,
                                              double floor = 0.05) {
  std::exponential_distribution<double> e;
  for (;;) {
    double s[3], t = 0.0;
    for (double& x : s) t += (x = e(rng));
    std::array<double, 3> a{};
    for (int i = 0; i < 3; ++i) a[i] = std::sqrt(s[i] / t);
    if (a[0] < floor || a[1] < floor || a[2] < floor) continue;
    if (!dirand::coverage_predicate(a)) continue;
    return dirand::SchmidtVector::normalized(a[0], a[1], a[2]);
  }
}

}  // namespace testutil
