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

// Reference computations written without the library's linear algebra.
#pragma once

#include <array>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

C w(int n);
Mat zeros(int n);
Mat eye(int n);
Mat shift();
Mat clock();
Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat scale(C s, const Mat& a);
Mat adj(const Mat& a);
Mat conj(const Mat& a);
Mat transp(const Mat& a);
Mat kron(const Mat& a, const Mat& b);
Mat power(const Mat& a, int n);
double max_diff(const Mat& a, const Mat& b);
double frob(const Mat& a);

/// Max over all 3^6 deterministic assignments of
/// 2 Re[lambda/27 sum_jk w^{jk} w^{a_j + s_k b_k}].
double classical_bound_bruteforce(std::array<int, 3> bob_sign);

/// <Phi| W1 |Phi> with every product spelled out.
double w1_quantum_direct();

/// sum_{ij} a_i a_j <i|R|j><i|W|j> = <psi(a)| R (x) W |psi(a)>
C local_expectation(const std::array<double, 3>& alpha, const Mat& r,
                    const Mat& w);

/// Partial trace over the second factor by explicit index sums.
Mat trace_second(const Mat& rho, int da, int db);

/// Largest eigenvalue of a 3x3 Hermitian matrix by shifted power iteration.
double top_eigenvalue(const Mat& m);

/// max over a6, a7 in {1, w, w^2} of the top eigenvalue of
/// a6 Z + g a7 X + d1 Z + h.c.
double lhs_bound_bruteforce(const std::array<double, 3>& alpha);

double steering_gamma(const std::array<double, 3>& alpha);

// Values frozen from an independent numpy session.
inline constexpr double kLhsMaximal = 2.186140661634507;
inline constexpr double kGammaSqrtHalf = 0.4805658615255611;  // (1/sqrt2, 1/2, 1/2)
inline constexpr double kBetaL = 0.36168785837749945;
inline constexpr double kBetaQ = 0.3849001794597505;
inline constexpr double kHminIdeal = 3.169925001442312;

}  // namespace oracle
