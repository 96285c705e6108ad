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

#include "dirand/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dirand/errors.hpp"

namespace dirand {

namespace {

constexpr double kThird = 1.0 / 3.0;

std::string describe(const SchmidtVector& alpha) {
  std::ostringstream s;
  s << "(" << alpha[0] << ", " << alpha[1] << ", " << alpha[2] << ")";
  return s.str();
}

}  // namespace

CMatrix Povm::sum() const {
  if (elements.empty()) throw DomainError("empty POVM");
  CMatrix s = CMatrix::Zero(elements[0].rows(), elements[0].cols());
  for (const CMatrix& e : elements) s += e;
  return s;
}

bool coverage_predicate(const std::array<double, 3>& alpha) {
  return std::count_if(alpha.begin(), alpha.end(),
                       [](double a) { return a > kThird; }) >= 2;
}

bool coverage_predicate(const SchmidtVector& alpha) {
  return coverage_predicate(alpha.values());
}

ExtremalPovm build_extremal_povm(const SchmidtVector& alpha) {
  if (!(alpha[0] > kThird && alpha[2] > kThird)) {
    throw CoverageError("coverage predicate failed: need alpha_0 > 1/3 and "
                        "alpha_2 > 1/3, got " + describe(alpha));
  }
  ExtremalPovmParams par;
  par.lambda_first = 1.0 / (9.0 * alpha[0] * alpha[0]);
  par.lambda_last = 1.0 / (9.0 * alpha[2] * alpha[2]);
  par.lambda_mid = (3.0 - par.lambda_first - par.lambda_last) / 7.0;
  par.mu = {std::sqrt((1.0 - par.lambda_first) / (7.0 * par.lambda_mid)),
            std::sqrt(1.0 / (7.0 * par.lambda_mid)),
            std::sqrt((1.0 - par.lambda_last) / (7.0 * par.lambda_mid))};

  Povm povm;
  povm.elements.reserve(9);
  CMatrix first = CMatrix::Zero(3, 3);
  first(0, 0) = par.lambda_first;
  povm.elements.push_back(first);
  for (int a = 1; a <= 7; ++a) {
    const double phase = 2.0 * std::numbers::pi * (a - 1) / 7.0;
    CVector v(3);
    v(0) = par.mu[0];
    v(1) = std::polar(par.mu[1], phase);
    v(2) = std::polar(par.mu[2], 3.0 * phase);
    povm.elements.push_back(par.lambda_mid * v * v.adjoint());
  }
  CMatrix last = CMatrix::Zero(3, 3);
  last(2, 2) = par.lambda_last;
  povm.elements.push_back(last);
  return {std::move(povm), par};
}

std::array<int, 3> canonical_relabeling(const SchmidtVector& alpha) {
  if (!coverage_predicate(alpha)) {
    throw CoverageError("coverage predicate failed for alpha = " +
                        describe(alpha));
  }
  if (alpha[0] > kThird && alpha[2] > kThird) return {0, 1, 2};
  if (alpha[0] > kThird) return {0, 2, 1};  // alpha_0, alpha_1 large
  return {1, 0, 2};                         // alpha_1, alpha_2 large
}

ExtremalPovm build_extremal_povm_relabeled(const SchmidtVector& alpha) {
  const std::array<int, 3> perm = canonical_relabeling(alpha);
  const SchmidtVector canon(alpha[perm[0]], alpha[perm[1]], alpha[perm[2]]);
  ExtremalPovm out = build_extremal_povm(canon);
  out.params.permutation = perm;
  // canonical |i> is original |perm[i]>
  const CMatrix u = permutation_matrix(perm);
  for (CMatrix& e : out.povm.elements) e = u * e * u.adjoint();
  return out;
}

PovmValidation validate_povm(const Povm& povm, const Tolerances& tol) {
  if (povm.size() != 9) throw DomainError("validate_povm: expects 9 elements");
  for (const CMatrix& e : povm.elements) {
    if (e.rows() != 3 || e.cols() != 3) {
      throw DomainError("validate_povm: elements must be 3x3");
    }
  }
  PovmValidation v;
  v.min_eigenvalue = std::numeric_limits<double>::infinity();
  bool hermitian = true;
  bool rank_one = true;
  for (const CMatrix& e : povm.elements) {
    if (!is_hermitian(e, tol.hermitian)) {
      hermitian = false;
      rank_one = false;
      continue;
    }
    const std::array<double, 3> ev = hermitian_eigenvalues3(e, tol.hermitian);
    v.min_eigenvalue = std::min(v.min_eigenvalue, ev[2]);
    v.max_second_eigenvalue = std::max(v.max_second_eigenvalue, ev[1]);
    if (!(ev[0] > tol.rank_one && ev[1] <= tol.rank_one)) rank_one = false;
  }
  v.psd = hermitian && v.min_eigenvalue >= -tol.psd;
  v.rank_one = rank_one;
  v.completeness_error = (povm.sum() - identity(3)).norm();
  v.complete = v.completeness_error <= tol.completeness;

  CMatrix gram(9, 9);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      gram(a, b) = vectorize(povm[a]).dot(vectorize(povm[b]));
  Eigen::JacobiSVD<CMatrix> svd(gram);
  const RVector sv = svd.singularValues();
  const double largest = sv.size() ? sv(0) : 0.0;
  v.gram_rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (largest > 0.0 && sv(i) > tol.gram_rank * largest) ++v.gram_rank;
  v.lin_independent = v.gram_rank == 9;
  return v;
}

EqualProbabilityCheck equal_probability_check(const Povm& povm,
                                              const SchmidtVector& alpha,
                                              const Tolerances& tol) {
  const std::array<double, 3> sq = alpha.squares();
  EqualProbabilityCheck out{true, {}, 0.0};
  for (const CMatrix& e : povm.elements) {
    double v = 0.0;
    for (int i = 0; i < 3; ++i) v += e(i, i).real() * sq[i];
    out.values.push_back(v);
    out.max_deviation = std::max(out.max_deviation, std::abs(v - 1.0 / 9.0));
  }
  out.holds = out.max_deviation <= tol.equal_prob;
  return out;
}

CoefficientTable expansion_coefficients(const Povm& povm,
                                        const SchmidtVector& alpha) {
  const SchmidtFilter f = schmidt_filter(alpha);
  std::array<CMatrix, 9> w;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) w[3 * p + q] = weyl(p, q);
  CoefficientTable table;
  for (const CMatrix& e : povm.elements) {
    const CMatrix m = (f.p * e * f.p).transpose();
    CMatrix r(3, 3);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) r(p, q) = (m * w[3 * p + q]).trace();
    table.r.push_back(r);
  }
  return table;
}

CMatrix expansion_basis_element(int k, int l, const SchmidtVector& alpha) {
  const SchmidtFilter f = schmidt_filter(alpha);
  return f.p_inv * weyl(k, l).conjugate() * f.p_inv;
}

Povm reconstruct_from_coefficients(const CoefficientTable& table,
                                   const SchmidtVector& alpha) {
  std::array<CMatrix, 9> basis;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      basis[3 * k + l] = expansion_basis_element(k, l, alpha);
  Povm out;
  for (const CMatrix& r : table.r) {
    CMatrix e = CMatrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) e += r(k, l) * basis[3 * k + l];
    out.elements.push_back(e / 3.0);
  }
  return out;
}

Povm uniform_povm() {
  return Povm{std::vector<CMatrix>(9, identity(3) / 9.0)};
}

Povm padded_computational_povm() {
  Povm out{std::vector<CMatrix>(9, CMatrix::Zero(3, 3))};
  for (int b = 0; b < 3; ++b) out.elements[b](b, b) = 1.0;
  return out;
}

std::array<Povm, 2> mixed_projective_components() {
  Povm comp = padded_computational_povm();
  Povm fourier{std::vector<CMatrix>(9, CMatrix::Zero(3, 3))};
  const MubObservable x = mub_observable(1);
  for (int b = 0; b < 3; ++b) fourier.elements[3 + b] = x.projectors[b];
  return {comp, fourier};
}

Povm mixed_projective_povm() {
  const std::array<Povm, 2> parts = mixed_projective_components();
  Povm out;
  for (int a = 0; a < 9; ++a) {
    out.elements.push_back(0.5 * parts[0][a] + 0.5 * parts[1][a]);
  }
  return out;
}

}  // namespace dirand
