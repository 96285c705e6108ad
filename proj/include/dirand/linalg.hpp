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
#include <complex>

#include <Eigen/Dense>

namespace dirand {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

CMatrix identity(Eigen::Index dim);

/// Kronecker product, left factor is the most significant index.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

inline CMatrix dagger(const CMatrix& m) { return m.adjoint(); }
inline CMatrix conjugate(const CMatrix& m) { return m.conjugate(); }
inline CMatrix transpose(const CMatrix& m) { return m.transpose(); }
inline Complex trace(const CMatrix& m) { return m.trace(); }

/// Integer power of a square matrix, n >= 0.
CMatrix matrix_power(const CMatrix& m, int n);

inline double frobenius_norm(const CMatrix& m) { return m.norm(); }
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool is_hermitian(const CMatrix& m, double tol);
bool is_unitary(const CMatrix& m, double tol);

/// <psi|op|psi>
Complex expectation(const CVector& psi, const CMatrix& op);

/// Partial trace of an operator on C^{dim_a} (x) C^{dim_b}.
CMatrix trace_out_second(const CMatrix& rho, Eigen::Index dim_a,
                         Eigen::Index dim_b);
CMatrix trace_out_first(const CMatrix& rho, Eigen::Index dim_a,
                        Eigen::Index dim_b);

struct HermitianEigen {
  RVector values;   // descending
  CMatrix vectors;  // column i pairs with values(i)
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Throws ContractError if `m` is not Hermitian within `hermitian_tol`.
HermitianEigen hermitian_eigs(const CMatrix& m, double hermitian_tol = 1e-10);

/// Eigenvalues of a 3x3 Hermitian matrix from the characteristic cubic
/// (trigonometric form). Falls back to the iterative solver next to a
/// repeated root and when the closed form fails its trace/determinant
/// self-check at 1e-11.
std::array<double, 3> hermitian_eigenvalues3(const CMatrix& m,
                                             double hermitian_tol = 1e-10);

/// Principal square root of a positive semidefinite matrix; eigenvalues
/// below zero by rounding are clamped.
CMatrix psd_sqrt(const CMatrix& m);

/// Row-major vectorization, used for Gram matrices of operator lists.
CVector vectorize(const CMatrix& m);

}  // namespace dirand
