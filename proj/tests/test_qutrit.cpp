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

#include "catch_amalgamated.hpp"

#include "dirand/errors.hpp"
#include "dirand/qutrit.hpp"
#include "test_util.hpp"

using namespace dirand;

TEST_CASE("clock and shift", "[qutrit]") {
  CHECK(testutil::diff(shift_x(), oracle::shift()) == 0.0);
  CHECK(testutil::diff(clock_z(), oracle::clock()) < 1e-15);
  const Complex w = omega_power(1);
  CHECK(max_abs_diff(clock_z() * shift_x(), w * shift_x() * clock_z()) < 1e-15);
  CHECK(max_abs_diff(matrix_power(shift_x(), 3), identity(3)) < 1e-15);
  CHECK(max_abs_diff(matrix_power(clock_z(), 3), identity(3)) < 1e-15);
}

TEST_CASE("omega powers reduce exactly", "[qutrit]") {
  CHECK(omega_power(0) == Complex(1.0, 0.0));
  CHECK(omega_power(3) == omega_power(0));
  CHECK(omega_power(-1) == omega_power(2));
  CHECK(omega_power(-5) == omega_power(1));
  CHECK(std::abs(omega_power(1) + omega_power(2) + 1.0) < 1e-15);
}

TEST_CASE("Weyl operators reduce indices mod 3", "[qutrit]") {
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      const oracle::Mat ref = oracle::mul(oracle::power(oracle::shift(), p),
                                          oracle::power(oracle::clock(), q));
      CHECK(testutil::diff(weyl(p, q), ref) < 1e-14);
      CHECK(max_abs_diff(weyl(p + 3, q - 3), weyl(p, q)) < 1e-15);
    }
}

TEST_CASE("Weyl operators are trace orthogonal", "[qutrit][property]") {
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      const Complex t = (weyl(a / 3, a % 3).adjoint() * weyl(b / 3, b % 3)).trace();
      CHECK(std::abs(t - (a == b ? 3.0 : 0.0)) < 1e-14);
    }
}

TEST_CASE("MUB observables have omega eigenvectors", "[qutrit]") {
  for (int r = 0; r < 4; ++r) {
    const MubObservable m = mub_observable(r);
    CMatrix sum = CMatrix::Zero(3, 3);
    for (int b = 0; b < 3; ++b) {
      const CVector& v = m.eigenvectors[b];
      CHECK(std::abs(v.norm() - 1.0) < 1e-14);
      CHECK((m.matrix * v - omega_power(b) * v).norm() < 1e-14);
      CHECK(max_abs_diff(m.projectors[b], v * v.adjoint()) < 1e-14);
      sum += omega_power(b) * m.projectors[b];
    }
    CHECK(max_abs_diff(sum, m.matrix) < 1e-14);
  }
  CHECK_THROWS_AS(mub_observable(4), DomainError);
}

TEST_CASE("the four bases are mutually unbiased", "[qutrit][property]") {
  for (int r = 0; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          const double o = std::norm(mub_observable(r).eigenvectors[b].dot(
              mub_observable(s).eigenvectors[c]));
          CHECK(std::abs(o - 1.0 / 3.0) < 1e-14);
        }
}

TEST_CASE("relabeled conjugates reproduce the Weyl partners", "[qutrit]") {
  const CMatrix x = shift_x(), z = clock_z();
  const std::array<CMatrix, 4> want{z * z, x * x, x * x * z * z, x * x * z};
  for (int r = 0; r < 4; ++r) {
    CHECK(max_abs_diff(relabel_target(r), want[r]) < 1e-14);
    CHECK(max_abs_diff(relabel_conjugate(r), relabel_target(r)) < 1e-14);
  }
}

TEST_CASE("order-3 projectors resolve the unitary", "[qutrit]") {
  const CMatrix u = omega_power(1) * shift_x() * shift_x() * clock_z() * clock_z();
  const std::array<CMatrix, 3> p = order3_projectors(u);
  CMatrix sum = CMatrix::Zero(3, 3), rebuilt = CMatrix::Zero(3, 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(max_abs_diff(p[a] * p[a], p[a]) < 1e-14);
    sum += p[a];
    rebuilt += omega_power(a) * p[a];
  }
  CHECK(max_abs_diff(sum, identity(3)) < 1e-14);
  CHECK(max_abs_diff(rebuilt, u) < 1e-14);
}

TEST_CASE("Schmidt vectors validate", "[qutrit]") {
  const SchmidtVector m = SchmidtVector::maximal();
  CHECK(std::abs(m[0] - 1.0 / std::sqrt(3.0)) < 1e-15);
  CHECK_THROWS_AS(SchmidtVector(0.6, 0.6, 0.6), DomainError);
  CHECK_THROWS_AS(SchmidtVector(1.0, 0.0, 0.0), DegenerateStateError);
  CHECK_THROWS_AS(SchmidtVector::normalized(1.0, 1e-9, 1.0), DegenerateStateError);
  CHECK_THROWS_AS(SchmidtVector::normalized(1.0, -0.5, 1.0), DomainError);
  CHECK_THROWS_AS(SchmidtVector::normalized(1.0, std::nan(""), 1.0), DomainError);
  const SchmidtVector n = SchmidtVector::normalized(3.0, 4.0, 12.0);
  CHECK(std::abs(n[1] - 4.0 / 13.0) < 1e-15);
  CHECK(std::abs(n.min() - 3.0 / 13.0) < 1e-15);
}

TEST_CASE("partial states and reduced states", "[qutrit]") {
  const SchmidtVector a = SchmidtVector::normalized(0.6, 0.57, 0.5616);
  const Ket psi = partial_state(a);
  CHECK(psi.dim() == 9);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(psi.amplitudes()(4 * i) - a[i]) < 1e-15);
  const CMatrix rho = reduced_state_first(psi);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(rho(i, i) - a[i] * a[i]) < 1e-15);
  CHECK(std::abs(rho(0, 1)) < 1e-15);
  const Ket phi = max_entangled();
  CHECK(max_abs_diff(reduced_state_first(phi), identity(3) / 3.0) < 1e-15);
  CHECK_THROWS_AS(Ket(CVector::Ones(3)), DomainError);
}

TEST_CASE("Schmidt filter and permutations", "[qutrit]") {
  const SchmidtVector a = SchmidtVector::normalized(0.2, 0.5, 0.8);
  const SchmidtFilter f = schmidt_filter(a);
  CHECK(max_abs_diff(f.p * f.p_inv, identity(3)) < 1e-14);
  const CMatrix u = permutation_matrix({2, 0, 1});
  CVector e0 = CVector::Zero(3);
  e0(0) = 1.0;
  CHECK(std::abs((u * e0)(2) - 1.0) < 1e-15);
  CHECK(is_unitary(u, 1e-15));
}
