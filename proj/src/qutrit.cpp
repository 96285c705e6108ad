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

#include "dirand/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dirand/errors.hpp"

namespace dirand {

namespace {

int mod3(long n) { return static_cast<int>(((n % 3) + 3) % 3); }

void check_r(int r) {
  if (r < 0 || r > 3) throw DomainError("MUB index must be in 0..3");
}

}  // namespace

Complex omega_power(long n) {
  switch (mod3(n)) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {-0.5, std::sqrt(3.0) / 2.0};
    default:
      return {-0.5, -std::sqrt(3.0) / 2.0};
  }
}

Complex bell_phase() { return std::polar(1.0, -std::numbers::pi / 18.0); }

CMatrix shift_x() {
  CMatrix x = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) x((i + 1) % 3, i) = 1.0;
  return x;
}

CMatrix clock_z() {
  CMatrix z = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) z(i, i) = omega_power(i);
  return z;
}

CMatrix weyl(int p, int q) {
  return matrix_power(shift_x(), mod3(p)) * matrix_power(clock_z(), mod3(q));
}

MubObservable mub_observable(int r) {
  check_r(r);
  MubObservable out;
  if (r == 0) {
    out.matrix = clock_z();
    for (int b = 0; b < 3; ++b) {
      out.eigenvectors[b] = CVector::Zero(3);
      out.eigenvectors[b](b) = 1.0;
    }
  } else {
    // XZ^s with s = r - 1: v_i = omega^{s i(i-1)/2 - b i} / sqrt 3
    const int s = r - 1;
    out.matrix = weyl(1, s);
    for (int b = 0; b < 3; ++b) {
      CVector v(3);
      for (int i = 0; i < 3; ++i) {
        v(i) = omega_power(s * i * (i - 1) / 2 - b * i) / std::sqrt(3.0);
      }
      out.eigenvectors[b] = v;
    }
  }
  for (int b = 0; b < 3; ++b) {
    out.projectors[b] = out.eigenvectors[b] * out.eigenvectors[b].adjoint();
  }
  return out;
}

CMatrix relabel_conjugate(int r) {
  check_r(r);
  static constexpr std::array<int, 4> shift{0, 0, 2, 1};
  const MubObservable m = mub_observable(r);
  CMatrix out = CMatrix::Zero(3, 3);
  for (int b = 0; b < 3; ++b) {
    out += omega_power(shift[r] - b) * m.projectors[b];
  }
  return out;
}

CMatrix relabel_target(int r) {
  check_r(r);
  switch (r) {
    case 0:
      return weyl(0, 2);
    case 1:
      return weyl(2, 0);
    case 2:
      return weyl(2, 2);
    default:
      return weyl(2, 1);
  }
}

std::array<CMatrix, 3> order3_projectors(const CMatrix& u) {
  const CMatrix u2 = u * u;
  const CMatrix id = identity(u.rows());
  std::array<CMatrix, 3> out;
  for (int a = 0; a < 3; ++a) {
    out[a] = (id + omega_power(-a) * u + omega_power(-2 * a) * u2) / 3.0;
  }
  return out;
}

SchmidtVector::SchmidtVector(double a0, double a1, double a2,
                             const Tolerances& tol)
    : values_{a0, a1, a2} {
  for (double a : values_) {
    if (!std::isfinite(a)) throw DomainError("Schmidt coefficient not finite");
    if (a < tol.degeneracy) {
      std::ostringstream msg;
      msg << "Schmidt coefficient " << a << " below degeneracy floor "
          << tol.degeneracy;
      throw DegenerateStateError(msg.str());
    }
  }
  const double norm2 = a0 * a0 + a1 * a1 + a2 * a2;
  if (std::abs(norm2 - 1.0) > tol.unit_norm) {
    std::ostringstream msg;
    msg << "Schmidt vector not normalized: sum of squares = " << norm2;
    throw DomainError(msg.str());
  }
}

SchmidtVector SchmidtVector::normalized(double a0, double a1, double a2,
                                        const Tolerances& tol) {
  if (!(a0 > 0.0 && a1 > 0.0 && a2 > 0.0)) {
    throw DomainError("Schmidt coefficients must be strictly positive");
  }
  const double n = std::sqrt(a0 * a0 + a1 * a1 + a2 * a2);
  return SchmidtVector(a0 / n, a1 / n, a2 / n, tol);
}

SchmidtVector SchmidtVector::maximal() {
  const double a = 1.0 / std::sqrt(3.0);
  return SchmidtVector(a, a, a);
}

std::array<double, 3> SchmidtVector::squares() const {
  return {values_[0] * values_[0], values_[1] * values_[1],
          values_[2] * values_[2]};
}

double SchmidtVector::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

Ket::Ket(CVector amplitudes, double tol) : amps_(std::move(amplitudes)) {
  if (std::abs(amps_.norm() - 1.0) > tol) {
    throw DomainError("Ket is not unit norm");
  }
}

Ket max_entangled() {
  CVector v = CVector::Zero(9);
  for (int i = 0; i < 3; ++i) v(4 * i) = 1.0 / std::sqrt(3.0);
  return Ket(v);
}

Ket partial_state(const SchmidtVector& alpha) {
  CVector v = CVector::Zero(9);
  for (int i = 0; i < 3; ++i) v(4 * i) = alpha[i];
  return Ket(v);
}

CMatrix reduced_state_first(const Ket& psi) {
  if (psi.dim() != 9) throw ContractError("reduced_state_first: expects dim 9");
  const CVector& v = psi.amplitudes();
  return trace_out_second(v * v.adjoint(), 3, 3);
}

SchmidtFilter schmidt_filter(const SchmidtVector& alpha,
                             const Tolerances& tol) {
  if (alpha.min() < tol.degeneracy) {
    throw DegenerateStateError("schmidt_filter: coefficient below floor");
  }
  SchmidtFilter f{CMatrix::Zero(3, 3), CMatrix::Zero(3, 3)};
  for (int i = 0; i < 3; ++i) {
    f.p(i, i) = alpha[i];
    f.p_inv(i, i) = 1.0 / alpha[i];
  }
  return f;
}

CMatrix permutation_matrix(const std::array<int, 3>& perm) {
  CMatrix out = CMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) out(perm[i], i) = 1.0;
  return out;
}

}  // namespace dirand
