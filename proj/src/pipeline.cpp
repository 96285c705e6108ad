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

#include "dirand/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <future>

#include "dirand/errors.hpp"
#include "dirand/povm.hpp"
#include "dirand/randomness.hpp"
#include "dirand/statistics.hpp"
#include "dirand/steering.hpp"

namespace dirand {

namespace {

std::array<CMatrix, 3> matrices(const std::array<Observable, 3>& obs) {
  return {obs[0].matrix, obs[1].matrix, obs[2].matrix};
}

Json strategy_json(const EveStrategy& s, const SchmidtVector& alpha,
                   const Povm& povm, const Tolerances& tol, bool& pass) {
  Json out{{"name", s.name}};
  try {
    const EveAttackResult attack = eve_attack_value(s, alpha, povm, tol);
    const DecompositionReport d = decomposition_check(povm, s, alpha, tol);
    const bool ok = std::abs(attack.value - 1.0 / 9.0) <= 1e-10 && d.passed();
    out["eve_value"] = attack.value;
    out["max_deviation"] = attack.max_deviation;
    out["convex_error"] = d.convex_error;
    out["max_conditional_deviation"] = d.max_conditional_deviation;
    out["terms"] = d.terms.size();
    out["failing_clause"] = d.failing_clause();
    out["pass"] = ok;
    pass = ok;
  } catch (const IncompatibleStrategy& e) {
    out["error"] = e.what();
    out["max_deviation"] = e.max_deviation();
    out["pass"] = false;
    pass = false;
  }
  return out;
}

}  // namespace

BoundsReport run_bounds(const Tolerances& tol) {
  BoundsReport b{};
  const auto start = std::chrono::steady_clock::now();
  b.w1_classical = classical_bound(build_w1_functional());
  b.w2_classical = classical_bound(build_w2_functional());
  b.enumeration_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  b.beta_local = beta_local();
  b.beta_quantum = beta_quantum();

  const std::array<Observable, 3> bob = bob_ideal_first();
  b.w1_value = bell_value(build_w1_functional(), max_entangled(),
                          matrices(w1_ideal_alice()), matrices(bob), tol);
  const W2Realization w2 = w2_ideal_realization();
  b.w2_value = w2.value;
  b.w2_convention = w2.convention;

  b.pass = std::abs(b.w1_classical.value - b.beta_local) <= tol.bound_check &&
           std::abs(b.w2_classical.value - b.beta_local) <= tol.bound_check &&
           std::abs(b.w1_value - b.beta_quantum) <= 1e-10 &&
           std::abs(b.w2_value - b.beta_quantum) <= 1e-9;
  return b;
}

Json bounds_to_json(const BoundsReport& b) {
  return {{"beta_L", b.beta_local},
          {"beta_L_enumerated", b.w1_classical.value},
          {"beta_L_enumerated_w2", b.w2_classical.value},
          {"beta_L_argmax",
           {{"alice", b.w1_classical.argmax.alice},
            {"bob", b.w1_classical.argmax.bob}}},
          {"beta_Q", b.beta_quantum},
          {"w1_value", b.w1_value},
          {"w2_value", b.w2_value},
          {"w2_convention", to_string(b.w2_convention)},
          {"enumeration_seconds", b.enumeration_seconds},
          {"pass", b.pass}};
}

bool coverage_consistent(const CoverageResult& c) {
  const double se = std::sqrt(kCoverageAnalytic * (1.0 - kCoverageAnalytic) /
                              static_cast<double>(c.samples));
  return std::abs(c.fraction - kCoverageAnalytic) <= 4.0 * se + 1e-12;
}

CertificationReport certify(const SchmidtVector& alpha, const Tolerances& tol,
                            std::optional<CoverageOptions> coverage) {
  CertificationReport rep;
  Json& out = rep.json;
  out["alpha"] = Json::array({alpha[0], alpha[1], alpha[2]});

  // Coverage first, so that inadmissible states fail before any work.
  const ExtremalPovm povm = build_extremal_povm_relabeled(alpha);

  // Bell part.
  const BoundsReport bounds = run_bounds(tol);
  Json bell = bounds_to_json(bounds);
  bool relations_ok = true;
  Json residuals = Json::object();
  for (CertifiedBranch br : {CertifiedBranch::kQ1, CertifiedBranch::kQ2}) {
    const std::array<CMatrix, 4> b = bob_certified(br);
    const RelationCheck rc = check_anticommutator_relations(b[0], b[2], b[3], tol);
    const double b3_error = max_abs_diff(reconstruct_b3(b[0], b[2]), b[3]);
    residuals[to_string(br)] = {{"relations", rc.residuals},
                                {"reconstruct_b3_error", b3_error}};
    relations_ok = relations_ok && rc.holds && b3_error <= tol.relation;
  }
  bell["relation_residuals"] = residuals;
  bell["relations_pass"] = relations_ok;
  out["bell"] = bell;

  // Steering.
  const SteeringCoefficients sc = steering_coefficients(alpha, tol);
  const SteeringQuantumValue sq = steering_quantum_value(alpha, tol);
  const LhsBound lhs = steering_lhs_bound(alpha, tol);
  const bool steering_ok = std::abs(sq.value - 3.0) <= tol.steering_value &&
                           lhs.margin > tol.lhs_margin;
  out["steering"] = {{"gamma", sc.gamma},
                     {"delta0", to_json(sc.delta[0])},
                     {"delta1", to_json(sc.delta[1])},
                     {"delta2", to_json(sc.delta[2])},
                     {"quantum_value", sq.value},
                     {"lhs_bound", lhs.value},
                     {"lhs_margin", lhs.margin},
                     {"lhs_argmax", lhs.argmax},
                     {"convention", sq.convention.describe()},
                     {"pass", steering_ok}};

  // POVM.
  const PovmValidation pv = validate_povm(povm.povm, tol);
  const EqualProbabilityCheck eq = equal_probability_check(povm.povm, alpha, tol);
  const Povm back = reconstruct_from_coefficients(
      expansion_coefficients(povm.povm, alpha), alpha);
  double round_trip = 0.0;
  for (std::size_t a = 0; a < back.size(); ++a)
    round_trip = std::max(round_trip, max_abs_diff(back[a], povm.povm[a]));
  const bool povm_ok = pv.all() && eq.holds && round_trip <= tol.round_trip;
  Json povm_json = povm_to_json(povm, alpha);
  povm_json.erase("elements");
  povm_json.erase("alpha");
  povm_json["psd"] = pv.psd;
  povm_json["complete"] = pv.complete;
  povm_json["rank_one"] = pv.rank_one;
  povm_json["lin_independent"] = pv.lin_independent;
  povm_json["min_eigenvalue"] = pv.min_eigenvalue;
  povm_json["completeness_error"] = pv.completeness_error;
  povm_json["gram_rank"] = pv.gram_rank;
  povm_json["equal_probability"] = eq.holds;
  povm_json["equal_probability_deviation"] = eq.max_deviation;
  povm_json["round_trip_error"] = round_trip;
  povm_json["pass"] = povm_ok;
  out["povm"] = povm_json;

  // Statistics.
  const StatisticsTable table = ideal_statistics(alpha);
  const double w1s = w1_from_statistics(table);
  const double w2s = w2_from_statistics(table);
  const double w3s = steering_from_statistics(table);
  const double norm = normalization_residual(table);
  const double ns = nonsignaling_residual(table);
  const bool stats_ok = std::abs(w1s - bounds.w1_value) <= 1e-10 &&
                        std::abs(w2s - bounds.w2_value) <= 1e-10 &&
                        std::abs(w3s - sq.value) <= 1e-10 && norm <= 1e-12 &&
                        ns <= 1e-12;
  out["statistics"] = {{"w1_value", w1s},
                       {"w2_value", w2s},
                       {"steering_value", w3s},
                       {"normalization_residual", norm},
                       {"nonsignaling_residual", ns},
                       {"pass", stats_ok}};

  // Randomness.
  const GuessingReport g = guessing_probability_ideal(alpha, povm.povm, tol);
  const std::array<double, 9> marginal = povm_marginal(table);
  double marginal_gap = 0.0;
  for (int a = 0; a < 9; ++a)
    marginal_gap = std::max(marginal_gap, std::abs(marginal[a] - g.marginal[a]));
  const bool randomness_ok = std::abs(g.guessing_probability - 1.0 / 9.0) <= 1e-12 &&
                             marginal_gap <= 1e-10;
  out["randomness"] = guessing_to_json(g);
  out["randomness"]["marginal_vs_statistics"] = marginal_gap;
  out["randomness"]["pass"] = randomness_ok;

  // Adversary corpus, one strategy per task.
  const std::vector<EveStrategy> corpus = eve_corpus(povm.povm);
  std::vector<std::future<std::pair<Json, bool>>> tasks;
  for (const EveStrategy& s : corpus) {
    tasks.push_back(std::async(std::launch::async, [&s, &alpha, &povm, &tol] {
      bool ok = false;
      Json j = strategy_json(s, alpha, povm.povm, tol, ok);
      return std::make_pair(std::move(j), ok);
    }));
  }
  Json strategies = Json::array();
  bool corpus_ok = true;
  for (auto& t : tasks) {
    auto [j, ok] = t.get();
    strategies.push_back(std::move(j));
    corpus_ok = corpus_ok && ok;
  }
  const std::array<Povm, 2> parts = mixed_projective_components();
  const EveStrategy splitter =
      splitting_eve({parts[0], parts[1]}, {0.5, 0.5});
  const DecompositionReport cx =
      decomposition_check(mixed_projective_povm(), splitter, alpha, tol);
  const bool counterexample_ok = cx.failing_clause() == "iii";
  out["decomposition"] = {
      {"strategies", strategies},
      {"counterexample",
       {{"name", splitter.name},
        {"failing_clause", cx.failing_clause()},
        {"max_conditional_deviation", cx.max_conditional_deviation},
        {"pass", counterexample_ok}}},
      {"pass", corpus_ok && counterexample_ok}};

  bool coverage_ok = true;
  if (coverage) {
    const CoverageResult c = monte_carlo_coverage(coverage->samples, coverage->seed,
                                                  coverage->workers);
    coverage_ok = coverage_consistent(c);
    out["coverage"] = coverage_to_json(c);
    out["coverage"]["pass"] = coverage_ok;
  }

  out["conventions"] = {{"w2_alice", to_string(bounds.w2_convention)},
                        {"steering", sq.convention.describe()},
                        {"povm_permutation", povm.params.permutation}};
  out["tolerances"] = tolerances_to_json(tol);
  rep.pass = bounds.pass && relations_ok && steering_ok && povm_ok &&
             stats_ok && randomness_ok && corpus_ok && counterexample_ok &&
             coverage_ok;
  out["pass"] = rep.pass;
  return rep;
}

}  // namespace dirand
