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

#include <random>

#include "dirand/errors.hpp"
#include "dirand/randomness.hpp"
#include "test_util.hpp"

using namespace dirand;

namespace {

Povm extremal(const SchmidtVector& a) { return build_extremal_povm_relabeled(a).povm; }

}  // namespace

TEST_CASE("min-entropy", "[randomness]") {
  CHECK(std::abs(min_entropy(1.0 / 9.0) - oracle::kHminIdeal) < 1e-12);
  CHECK(min_entropy(1.0) == 0.0);
  CHECK(std::abs(min_entropy(0.5) - 1.0) < 1e-15);
  CHECK_THROWS_AS(min_entropy(0.0), DomainError);
  CHECK_THROWS_AS(min_entropy(1.5), DomainError);
}

TEST_CASE("ideal guessing probability is 1/9", "[randomness]") {
  for (const SchmidtVector& a :
       {SchmidtVector::maximal(), SchmidtVector::normalized(0.6, 0.57, 0.5616)}) {
    const GuessingReport g = guessing_probability_ideal(a, extremal(a));
    CHECK(std::abs(g.guessing_probability - 1.0 / 9.0) < 1e-12);
    CHECK(std::abs(g.min_entropy_bits - 2.0 * std::log2(3.0)) < 1e-9);
    CHECK(std::abs(g.min_entropy_bits + std::log2(g.guessing_probability)) < 1e-12);
    double s = 0.0;
    for (double m : g.marginal) s += m;
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("guessing marginal equals the statistics marginal", "[randomness]") {
  const SchmidtVector a = SchmidtVector::normalized(0.6, 0.57, 0.5616);
  const GuessingReport g = guessing_probability_ideal(a, extremal(a));
  const std::array<double, 9> m = povm_marginal(ideal_statistics(a));
  for (int e = 0; e < 9; ++e) CHECK(std::abs(g.marginal[e] - m[e]) < 1e-14);
}

TEST_CASE("padded projective POVM is not certifiable", "[randomness]") {
  CHECK_THROWS_AS(
      guessing_probability_ideal(SchmidtVector::maximal(), padded_computational_povm()),
      CertificationInapplicable);
}

TEST_CASE("corpus strategies are valid", "[randomness]") {
  const Povm p = extremal(SchmidtVector::maximal());
  for (const EveStrategy& s : eve_corpus(p)) {
    CHECK(std::abs(s.xi.norm() - 1.0) < 1e-14);
    CHECK(s.eve_dim <= 4);
    CMatrix sum = CMatrix::Zero(s.eve_dim, s.eve_dim);
    for (const CMatrix& z : s.eve_povm) {
      sum += z;
      CHECK(hermitian_eigs(z).values.minCoeff() > -1e-14);
    }
    CHECK(max_abs_diff(sum, identity(s.eve_dim)) < 1e-14);
    double q = 0.0;
    for (int b = 0; b < 2; ++b)
      for (std::size_t e = 0; e < s.eve_povm.size(); ++e)
        q += s.branch_weight(b, static_cast<int>(e));
    CHECK(std::abs(q - 1.0) < 1e-12);
  }
}

TEST_CASE("every corpus strategy guesses with probability 1/9",
          "[randomness][property]") {
  std::mt19937_64 rng(61);
  std::vector<SchmidtVector> alphas{SchmidtVector::maximal(),
                                    SchmidtVector::normalized(0.6, 0.57, 0.5616)};
  for (int t = 0; t < 5; ++t) alphas.push_back(testutil::admissible_alpha(rng));
  for (const SchmidtVector& a : alphas) {
    const Povm p = extremal(a);
    for (const EveStrategy& s : eve_corpus(p)) {
      INFO(s.name);
      const EveAttackResult r = eve_attack_value(s, a, p);
      CHECK(std::abs(r.value - 1.0 / 9.0) <= 1e-10);
      CHECK(r.max_deviation <= 1e-9);
    }
  }
}

TEST_CASE("branch-copy Eve with equal weights", "[randomness]") {
  const SchmidtVector a = SchmidtVector::maximal();
  const Povm p = extremal(a);
  const EveStrategy s = branch_copy_eve(p, 0.5);
  CHECK(std::abs(s.branch_weight(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(s.branch_weight(1, 1) - 0.5) < 1e-15);
  CHECK(s.branch_weight(0, 1) < 1e-30);
  CHECK(std::abs(eve_attack_value(s, a, p).value - 1.0 / 9.0) < 1e-10);
}

TEST_CASE("perturbed Bob breaks compatibility", "[randomness]") {
  const SchmidtVector a = SchmidtVector::maximal();
  const Povm p = extremal(a);
  const EveStrategy s = with_perturbed_bob(trivial_eve(p));
  CHECK(strategy_deviation(s, a, p) > 1e-3);
  try {
    eve_attack_value(s, a, p);
    FAIL("expected IncompatibleStrategy");
  } catch (const IncompatibleStrategy& e) {
    CHECK(e.max_deviation() > 1e-3);
  }
  CHECK_THROWS_AS(decomposition_check(p, s, a), IncompatibleStrategy);
}

TEST_CASE("trivial Eve reproduces the ideal table", "[randomness]") {
  const SchmidtVector a = SchmidtVector::normalized(0.6, 0.57, 0.5616);
  const Povm p = extremal(a);
  const DecompositionReport d = decomposition_check(p, trivial_eve(p), a);
  CHECK(d.passed());
  REQUIRE(d.terms.size() == 1);
  CHECK(std::abs(d.terms[0].weight - 1.0) < 1e-14);
  CHECK(d.terms[0].deviation_from_ideal < 1e-12);
}

TEST_CASE("decomposition holds for every corpus strategy",
          "[randomness][property]") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 5; ++t) {
    const SchmidtVector a = testutil::admissible_alpha(rng);
    const Povm p = extremal(a);
    for (const EveStrategy& s : eve_corpus(p)) {
      INFO(s.name);
      const DecompositionReport d = decomposition_check(p, s, a);
      CHECK(d.convex_identity);
      CHECK(d.conditionals_valid);
      CHECK(d.conditionals_match);
      CHECK(d.failing_clause().empty());
      CHECK(std::abs(d.total_weight - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("branch-mixing Eve has several conditional terms", "[randomness]") {
  const SchmidtVector a = SchmidtVector::normalized(0.6, 0.57, 0.5616);
  const Povm p = extremal(a);
  const DecompositionReport d = decomposition_check(p, branch_mixing_eve(p), a);
  CHECK(d.terms.size() == 6);
  CHECK(d.passed());
}

TEST_CASE("non-extremal POVM with a splitting Eve fails clause iii",
          "[randomness]") {
  const SchmidtVector a = SchmidtVector::maximal();
  const std::array<Povm, 2> parts = mixed_projective_components();
  const EveStrategy s = splitting_eve({parts[0], parts[1]}, {0.5, 0.5});
  const Povm mix = mixed_projective_povm();
  const DecompositionReport d = decomposition_check(mix, s, a);
  CHECK(d.convex_identity);
  CHECK(d.conditionals_valid);
  CHECK_FALSE(d.conditionals_match);
  CHECK(d.failing_clause() == "iii");
  CHECK(d.max_conditional_deviation > 0.01);
  // Eve learns which component was used
  CHECK(eve_attack_value(s, a, mix).value > 1.0 / 9.0 + 0.05);
}
