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

#include "dirand/bell.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dirand/errors.hpp"

namespace dirand {

bool has_omega_spectrum(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || !is_unitary(m, tol)) return false;
  return (m * m * m - identity(m.rows())).norm() <= tol;
}

Observable Observable::projective_from(CMatrix m, double tol) {
  if (!has_omega_spectrum(m, tol)) {
    throw DomainError("observable is not unitary with spectrum {1,w,w^2}");
  }
  return Observable{std::move(m), true};
}

Observable Observable::general_from(CMatrix m, double tol) {
  const HermitianEigen e = hermitian_eigs(m.adjoint() * m, 1e-9);
  if (e.values(0) > 1.0 + tol) {
    throw DomainError("generalized observable violates A^dag A <= 1");
  }
  const bool proj = has_omega_spectrum(m, tol);
  return Observable{std::move(m), proj};
}

Complex BellFunctional::coefficient(int alice_slot, int bob_slot,
                                    BobPower power) const {
  Complex c{0.0, 0.0};
  for (const BellTerm& t : terms) {
    if (t.alice_slot == alice_slot && t.bob_slot == bob_slot &&
        t.power == power) {
      c += t.coeff;
    }
  }
  return c;
}

BellFunctional build_w1_functional() {
  BellFunctional f;
  f.name = "W1";
  f.alice_inputs = {0, 1, 2};
  f.bob_inputs = {0, 1, 2};
  const Complex pre = bell_phase() / 27.0;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      f.terms.push_back({j, k, BobPower::kPlain, pre * omega_power(j * k)});
  return f;
}

BellFunctional build_w2_functional() {
  BellFunctional f;
  f.name = "W2";
  f.alice_inputs = {3, 4, 5};
  f.bob_inputs = {0, 2, 3};
  const Complex pre = bell_phase() / 27.0;
  // slot 1 is B_2, which enters as B_2^dag
  static constexpr std::array<BobPower, 3> powers{
      BobPower::kPlain, BobPower::kAdjoint, BobPower::kPlain};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      f.terms.push_back({j, k, powers[k], pre * omega_power(j * k)});
  return f;
}

double deterministic_value(const BellFunctional& f,
                           const DeterministicStrategy& s) {
  Complex sum{0.0, 0.0};
  for (const BellTerm& t : f.terms) {
    const int b = s.bob[t.bob_slot];
    const int exponent =
        s.alice[t.alice_slot] + (t.power == BobPower::kPlain ? b : -b);
    sum += t.coeff * omega_power(exponent);
  }
  return 2.0 * sum.real();
}

ClassicalBound classical_bound(const BellFunctional& f) {
  ClassicalBound best{-std::numeric_limits<double>::infinity(), {}};
  DeterministicStrategy s;
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    // most significant digit first gives lexicographic order
    for (int i = 5; i >= 0; --i) {
      const int digit = rest % 3;
      rest /= 3;
      if (i < 3)
        s.alice[i] = digit;
      else
        s.bob[i - 3] = digit;
    }
    const double v = deterministic_value(f, s);
    if (v > best.value + 1e-13) best = {v, s};
  }
  return best;
}

double beta_local() {
  return 2.0 * std::cos(std::numbers::pi / 9.0) / (3.0 * std::sqrt(3.0));
}

double beta_quantum() { return 2.0 / (3.0 * std::sqrt(3.0)); }

std::array<Observable, 3> bob_ideal_first() {
  return {Observable::projective_from(clock_z()),
          Observable::projective_from(shift_x()),
          Observable::projective_from(omega_power(1) * weyl(2, 2))};
}

std::string to_string(AliceConvention c) {
  return c == AliceConvention::kConjugated ? "conjugated" : "plain";
}

Observable alice_optimal(int j, const std::array<CMatrix, 3>& bob,
                         AliceConvention convention) {
  CMatrix a = CMatrix::Zero(bob[0].rows(), bob[0].cols());
  for (int k = 0; k < 3; ++k) {
    const CMatrix& b = bob[k];
    a += omega_power(-j * k) *
         (convention == AliceConvention::kConjugated ? CMatrix(b.conjugate())
                                                     : b);
  }
  a *= std::conj(bell_phase()) / std::sqrt(3.0);
  return Observable::general_from(std::move(a));
}

CMatrix bell_operator(const BellFunctional& f,
                      const std::array<CMatrix, 3>& alice,
                      const std::array<CMatrix, 3>& bob) {
  const Eigen::Index dim = alice[0].rows() * bob[0].rows();
  CMatrix w = CMatrix::Zero(dim, dim);
  for (const BellTerm& t : f.terms) {
    const CMatrix& b = bob[t.bob_slot];
    w += t.coeff * tensor(alice[t.alice_slot],
                          t.power == BobPower::kPlain ? b : CMatrix(b.adjoint()));
  }
  return w + CMatrix(w.adjoint());
}

double bell_value(const BellFunctional& f, const Ket& state,
                  const std::array<CMatrix, 3>& alice,
                  const std::array<CMatrix, 3>& bob, const Tolerances& tol) {
  const CMatrix w = bell_operator(f, alice, bob);
  if (w.rows() != state.dim()) {
    throw ContractError("bell_value: state dimension does not match operators");
  }
  const Complex v = expectation(state.amplitudes(), w);
  if (std::abs(v.imag()) > tol.imag_residue) {
    std::ostringstream msg;
    msg << "bell_value: imaginary residue " << v.imag();
    throw ContractError(msg.str());
  }
  return v.real();
}

std::string to_string(CertifiedBranch b) {
  return b == CertifiedBranch::kQ1 ? "Q1" : "Q2";
}

std::array<CMatrix, 4> bob_certified(CertifiedBranch branch) {
  std::array<CMatrix, 4> q1{clock_z(), shift_x(), omega_power(1) * weyl(2, 2),
                            omega_power(2) * weyl(2, 1)};
  if (branch == CertifiedBranch::kQ1) return q1;
  for (CMatrix& m : q1) m = m.transpose().eval();
  return q1;
}

W2Realization w2_ideal_realization() {
  const std::array<CMatrix, 4> b = bob_certified(CertifiedBranch::kQ1);
  const std::array<CMatrix, 3> slots{b[0], b[2], b[3]};
  const std::array<CMatrix, 3> triple{b[0], b[2].adjoint(), b[3]};
  const BellFunctional w2 = build_w2_functional();
  for (AliceConvention c :
       {AliceConvention::kConjugated, AliceConvention::kPlain}) {
    std::array<Observable, 3> alice;
    bool valid = true;
    for (int j = 0; j < 3; ++j) {
      alice[j] = alice_optimal(j, triple, c);
      valid = valid && alice[j].projective;
    }
    if (!valid) continue;
    const double v = bell_value(
        w2, max_entangled(),
        {alice[0].matrix, alice[1].matrix, alice[2].matrix}, slots);
    if (std::abs(v - beta_quantum()) <= 1e-9) return {alice, slots, c, v};
  }
  throw ConventionError("no Alice convention reaches beta_Q for W2");
}

std::array<Observable, 3> w2_ideal_alice() {
  return w2_ideal_realization().alice;
}

std::array<Observable, 3> w1_ideal_alice() {
  const std::array<Observable, 3> b = bob_ideal_first();
  const std::array<CMatrix, 3> mats{b[0].matrix, b[1].matrix, b[2].matrix};
  return {alice_optimal(0, mats), alice_optimal(1, mats),
          alice_optimal(2, mats)};
}

CMatrix fourier_correlators(const Eigen::MatrixXd& probs, double tol) {
  if (probs.rows() != 3 || probs.cols() != 3) {
    throw DomainError("fourier_correlators: expects a 3x3 table");
  }
  if (probs.minCoeff() < -tol) {
    throw DomainError("fourier_correlators: negative probability");
  }
  if (std::abs(probs.sum() - 1.0) > tol) {
    throw DomainError("fourier_correlators: table is not normalized");
  }
  CMatrix c = CMatrix::Zero(3, 3);
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          c(l, m) += omega_power(a * l + b * m) * probs(a, b);
  return c;
}

Eigen::MatrixXd inverse_fourier(const CMatrix& correlators) {
  if (correlators.rows() != 3 || correlators.cols() != 3) {
    throw DomainError("inverse_fourier: expects a 3x3 table");
  }
  Eigen::MatrixXd p(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Complex s{0.0, 0.0};
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          s += omega_power(-(a * l + b * m)) * correlators(l, m);
      p(a, b) = s.real() / 9.0;
    }
  return p;
}

double bell_value_from_correlators(
    const BellFunctional& f,
    const std::function<CMatrix(int, int)>& correlators) {
  Complex sum{0.0, 0.0};
  for (const BellTerm& t : f.terms) {
    const CMatrix c =
        correlators(f.alice_inputs[t.alice_slot], f.bob_inputs[t.bob_slot]);
    sum += t.coeff * c(1, t.power == BobPower::kPlain ? 1 : 2);
  }
  return 2.0 * sum.real();
}

RelationCheck check_anticommutator_relations(const CMatrix& b0,
                                             const CMatrix& b2,
                                             const CMatrix& b3,
                                             const Tolerances& tol) {
  const Complex w = omega_power(1);
  auto anti = [](const CMatrix& x, const CMatrix& y) -> CMatrix {
    return x * y + y * x;
  };
  const CMatrix b2d = b2.adjoint();
  RelationCheck out;
  out.residuals[0] = (CMatrix(b0.adjoint()) + w * anti(b2d, b3)).norm();
  out.residuals[1] = (CMatrix(b3.adjoint()) + w * anti(b0, b2d)).norm();
  out.residuals[2] = (b2 + w * anti(b3, b0)).norm();
  out.holds = out.residuals[0] <= tol.relation &&
              out.residuals[1] <= tol.relation &&
              out.residuals[2] <= tol.relation;
  return out;
}

CMatrix reconstruct_b3(const CMatrix& b0, const CMatrix& b2) {
  const CMatrix b2d = b2.adjoint();
  const CMatrix inner = -omega_power(1) * (b0 * b2d + b2d * b0);
  return inner.adjoint();
}

CMatrix certified_weyl_block(int p, int q, CertifiedBranch branch) {
  if (branch == CertifiedBranch::kQ1) return weyl(p, q);
  return matrix_power(clock_z(), ((q % 3) + 3) % 3) *
         matrix_power(shift_x(), ((2 * p) % 3 + 3) % 3);
}

}  // namespace dirand
