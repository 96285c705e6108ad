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

#include <chrono>
#include <random>

#include "dirand/bell.hpp"
#include "dirand/errors.hpp"
#include "test_util.hpp"

using namespace dirand;

namespace {

std::array<CMatrix, 3> mats(const std::array<Observable, 3>& o) {
  return {o[0].matrix, o[1].matrix, o[2].matrix};
}

}  // namespace

TEST_CASE("closed-form bounds", "[bell]") {
  CHECK(std::abs(beta_local() - oracle::kBetaL) < 1e-15);
  CHECK(std::abs(beta_quantum() - oracle::kBetaQ) < 1e-15);
  CHECK(beta_local() < beta_quantum());
}

TEST_CASE("W1 classical bound by enumeration", "[bell]") {
  const auto start = std::chrono::steady_clock::now();
  const ClassicalBound b = classical_bound(build_w1_functional());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(std::abs(b.value - beta_local()) < 1e-9);
  CHECK(std::abs(b.value - oracle::classical_bound_bruteforce({1, 1, 1})) < 1e-14);
  CHECK(secs < 1.0);
  CHECK(std::abs(deterministic_value(build_w1_functional(), b.argmax) - b.value) <
        1e-15);
}

TEST_CASE("W2 classical bound equals W1", "[bell]") {
  const ClassicalBound b = classical_bound(build_w2_functional());
  CHECK(std::abs(b.value - beta_local()) < 1e-9);
  CHECK(std::abs(b.value - oracle::classical_bound_bruteforce({1, -1, 1})) < 1e-14);
}

TEST_CASE("argmax is the lexicographically first maximizer", "[bell]") {
  const BellFunctional f = build_w1_functional();
  const ClassicalBound b = classical_bound(f);
  for (int code = 0; code < 729; ++code) {
    DeterministicStrategy s;
    int c = code;
    for (int i = 2; i >= 0; --i) { s.bob[i] = c % 3; c /= 3; }
    for (int i = 2; i >= 0; --i) { s.alice[i] = c % 3; c /= 3; }
    if (s == b.argmax) break;
    CHECK(deterministic_value(f, s) < b.value - 1e-13);
  }
}

TEST_CASE("deterministic values never exceed the bound", "[bell][property]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(0, 2);
  const BellFunctional f = build_w1_functional();
  for (int t = 0; t < 500; ++t) {
    DeterministicStrategy s;
    for (int i = 0; i < 3; ++i) { s.alice[i] = d(rng); s.bob[i] = d(rng); }
    CHECK(deterministic_value(f, s) <= beta_local() + 1e-15);
  }
}

TEST_CASE("ideal W1 realization reaches beta_Q", "[bell]") {
  const double v = bell_value(build_w1_functional(), max_entangled(),
                              mats(w1_ideal_alice()), mats(bob_ideal_first()));
  CHECK(std::abs(v - beta_quantum()) < 1e-10);
  CHECK(std::abs(v - oracle::w1_quantum_direct()) < 1e-14);
}

TEST_CASE("ideal Alice observables are projective", "[bell]") {
  for (const Observable& a : w1_ideal_alice()) {
    CHECK(a.projective);
    CHECK(is_unitary(a.matrix, 1e-12));
    CHECK(has_omega_spectrum(a.matrix));
  }
  for (const Observable& a : w2_ideal_alice()) CHECK(has_omega_spectrum(a.matrix));
}

TEST_CASE("W2 realization resolves the conjugated convention", "[bell]") {
  const W2Realization r = w2_ideal_realization();
  CHECK(r.convention == AliceConvention::kConjugated);
  CHECK(std::abs(r.value - beta_quantum()) < 1e-9);
  // the unconjugated construction does not give projective observables
  const std::array<CMatrix, 3> slots{r.bob_slots[0], r.bob_slots[1].adjoint(),
                                     r.bob_slots[2]};
  CHECK_FALSE(alice_optimal(0, slots, AliceConvention::kPlain).projective);
}

TEST_CASE("Observable validation", "[bell]") {
  CHECK_THROWS_AS(Observable::projective_from(2.0 * identity(3)), DomainError);
  CHECK_NOTHROW(Observable::general_from(0.5 * shift_x()));
  CHECK_THROWS_AS(Observable::general_from(2.0 * shift_x()), DomainError);
  CHECK_FALSE(has_omega_spectrum(identity(3) * Complex(0, 1)));
}

TEST_CASE("Bell values must be real", "[bell]") {
  std::array<CMatrix, 3> bad{identity(3), identity(3), identity(3)};
  CHECK_NOTHROW(bell_value(build_w1_functional(), max_entangled(), bad, bad));
  const double v = bell_value(build_w1_functional(), max_entangled(), bad, bad);
  CHECK(std::abs(v - deterministic_value(build_w1_functional(), {})) < 1e-14);
}

TEST_CASE("certified triples satisfy the anticommutator relations", "[bell]") {
  for (CertifiedBranch br : {CertifiedBranch::kQ1, CertifiedBranch::kQ2}) {
    const std::array<CMatrix, 4> b = bob_certified(br);
    const RelationCheck r = check_anticommutator_relations(b[0], b[2], b[3]);
    CHECK(r.holds);
    for (double x : r.residuals) CHECK(x <= 1e-10);
    CHECK(max_abs_diff(reconstruct_b3(b[0], b[2]), b[3]) < 1e-15);
  }
}

TEST_CASE("Q1 triple and reconstruction", "[bell]") {
  const CMatrix x = shift_x(), z = clock_z();
  const Complex w = omega_power(1);
  const CMatrix b2 = w * x * x * z * z;
  const CMatrix b3 = w * w * x * x * z;
  CHECK(max_abs_diff(reconstruct_b3(z, b2), b3) < 1e-15);
  // Q2: transposes of Q1
  const std::array<CMatrix, 4> q1 = bob_certified(CertifiedBranch::kQ1);
  const std::array<CMatrix, 4> q2 = bob_certified(CertifiedBranch::kQ2);
  for (int k = 0; k < 4; ++k) CHECK(max_abs_diff(q2[k], q1[k].transpose()) == 0.0);
  CHECK(max_abs_diff(q2[2], x * z * z) < 1e-15);
  CHECK(max_abs_diff(reconstruct_b3(z, x * z * z), q2[3]) < 1e-15);
}

TEST_CASE("a non-certified triple fails the relations", "[bell]") {
  const CMatrix x = shift_x(), z = clock_z();
  const Complex w = omega_power(1);
  const RelationCheck r = check_anticommutator_relations(z, w * x * x * z * z, x * z);
  CHECK_FALSE(r.holds);
}

TEST_CASE("certified Weyl blocks", "[bell]") {
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      CHECK(max_abs_diff(certified_weyl_block(p, q, CertifiedBranch::kQ1),
                         weyl(p, q)) < 1e-15);
      CHECK(max_abs_diff(certified_weyl_block(p, q, CertifiedBranch::kQ2),
                         weyl(p, q).transpose()) < 1e-14);
    }
}

TEST_CASE("Fourier correlators invert", "[bell]") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd p(3, 3);
  for (int i = 0; i < 9; ++i) p(i / 3, i % 3) = u(rng);
  p /= p.sum();
  const CMatrix f = fourier_correlators(p);
  CHECK(std::abs(f(0, 0) - 1.0) < 1e-14);
  CHECK((inverse_fourier(f) - p).cwiseAbs().maxCoeff() < 1e-15);
  Eigen::MatrixXd bad = p;
  bad(0, 0) += 0.1;
  CHECK_THROWS_AS(fourier_correlators(bad), DomainError);
  bad = p;
  bad(0, 0) = -0.01;
  bad(0, 1) += 0.01 + p(0, 0);
  CHECK_THROWS_AS(fourier_correlators(bad), DomainError);
}
