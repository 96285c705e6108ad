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

#include "dirand/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "dirand/errors.hpp"

namespace dirand {

CMatrix identity(Eigen::Index dim) { return CMatrix::Identity(dim, dim); }

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector tensor(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix matrix_power(const CMatrix& m, int n) {
  if (m.rows() != m.cols()) throw ContractError("matrix_power: non-square");
  if (n < 0) throw ContractError("matrix_power: negative exponent");
  CMatrix out = identity(m.rows());
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractError("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

bool is_unitary(const CMatrix& m, double tol) {
  return m.rows() == m.cols() &&
         (m * m.adjoint() - identity(m.rows())).norm() <= tol;
}

Complex expectation(const CVector& psi, const CMatrix& op) {
  if (op.rows() != psi.size() || op.cols() != psi.size()) {
    throw ContractError("expectation: dimension mismatch");
  }
  return psi.dot(op * psi);
}

CMatrix trace_out_second(const CMatrix& rho, Eigen::Index dim_a,
                         Eigen::Index dim_b) {
  if (rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b) {
    throw ContractError("trace_out_second: dimension mismatch");
  }
  CMatrix out = CMatrix::Zero(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i)
    for (Eigen::Index j = 0; j < dim_a; ++j)
      for (Eigen::Index k = 0; k < dim_b; ++k)
        out(i, j) += rho(i * dim_b + k, j * dim_b + k);
  return out;
}

CMatrix trace_out_first(const CMatrix& rho, Eigen::Index dim_a,
                        Eigen::Index dim_b) {
  if (rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b) {
    throw ContractError("trace_out_first: dimension mismatch");
  }
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (Eigen::Index i = 0; i < dim_b; ++i)
    for (Eigen::Index j = 0; j < dim_b; ++j)
      for (Eigen::Index k = 0; k < dim_a; ++k)
        out(i, j) += rho(k * dim_b + i, k * dim_b + j);
  return out;
}

HermitianEigen hermitian_eigs(const CMatrix& m, double hermitian_tol) {
  if (!is_hermitian(m, hermitian_tol)) {
    throw ContractError("hermitian_eigs: input is not Hermitian");
  }
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ContractError("hermitian_eigs: solver did not converge");
  }
  // Eigen returns ascending order.
  const Eigen::Index n = m.rows();
  HermitianEigen out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

std::array<double, 3> hermitian_eigenvalues3(const CMatrix& m,
                                             double hermitian_tol) {
  if (m.rows() != 3 || m.cols() != 3) {
    throw ContractError("hermitian_eigenvalues3: expects a 3x3 matrix");
  }
  if (!is_hermitian(m, hermitian_tol)) {
    throw ContractError("hermitian_eigenvalues3: input is not Hermitian");
  }
  const double a00 = m(0, 0).real();
  const double a11 = m(1, 1).real();
  const double a22 = m(2, 2).real();
  const double off = std::norm(m(0, 1)) + std::norm(m(0, 2)) +
                     std::norm(m(1, 2));
  const double q = (a00 + a11 + a22) / 3.0;
  const double p2 = (a00 - q) * (a00 - q) + (a11 - q) * (a11 - q) +
                    (a22 - q) * (a22 - q) + 2.0 * off;
  if (p2 == 0.0) return {q, q, q};

  const double p = std::sqrt(p2 / 6.0);
  const CMatrix b = (m - q * identity(3)) / p;
  const double r = std::clamp(0.5 * b.determinant().real(), -1.0, 1.0);
  // acos loses half the digits next to a repeated root.
  if (1.0 - std::abs(r) < 1e-4) {
    const HermitianEigen full = hermitian_eigs(m, hermitian_tol);
    return {full.values(0), full.values(1), full.values(2)};
  }
  const double phi = std::acos(r) / 3.0;
  const double e0 = q + 2.0 * p * std::cos(phi);
  const double e2 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double e1 = 3.0 * q - e0 - e2;
  std::array<double, 3> vals{e0, e1, e2};
  std::sort(vals.begin(), vals.end(), std::greater<>());

  // Self-check: sum of squares and determinant must match.
  const double scale = std::max(1.0, m.norm());
  const double sq = vals[0] * vals[0] + vals[1] * vals[1] + vals[2] * vals[2];
  const double det = vals[0] * vals[1] * vals[2];
  const double sq_err = std::abs(sq - m.squaredNorm()) / (scale * scale);
  const double det_err =
      std::abs(det - m.determinant().real()) / (scale * scale * scale);
  if (sq_err > 1e-11 || det_err > 1e-11) {
    const HermitianEigen full = hermitian_eigs(m, hermitian_tol);
    return {full.values(0), full.values(1), full.values(2)};
  }
  return vals;
}

CMatrix psd_sqrt(const CMatrix& m) {
  const HermitianEigen e = hermitian_eigs(m, 1e-9);
  const Eigen::Index n = m.rows();
  CMatrix out = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = std::max(0.0, e.values(i));
    out += std::sqrt(v) * e.vectors.col(i) * e.vectors.col(i).adjoint();
  }
  return out;
}

CVector vectorize(const CMatrix& m) {
  CVector out(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

}  // namespace dirand
