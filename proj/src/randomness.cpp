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

#include "dirand/randomness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dirand/errors.hpp"
#include "dirand/steering.hpp"

namespace dirand {

namespace {

CMatrix projector(Eigen::Index dim, Eigen::Index i) {
  CMatrix p = CMatrix::Zero(dim, dim);
  p(i, i) = 1.0;
  return p;
}

CVector basis(Eigen::Index dim, Eigen::Index i) {
  CVector v = CVector::Zero(dim);
  v(i) = 1.0;
  return v;
}

/// Effects on A' (x) A'' = A' (x) branch (x) extra: E in branch Q1 and E^T
/// in branch Q2.
CMatrix branch_lift(const CMatrix& e, int extra_dim) {
  const CMatrix id = identity(extra_dim);
  return tensor(tensor(e, projector(2, 0)), id) +
         tensor(tensor(CMatrix(e.transpose()), projector(2, 1)), id);
}

void fill_branch_devices(EveStrategy& s, const Povm& povm, int extra_dim) {
  s.alice_povm.clear();
  for (const CMatrix& e : povm.elements)
    s.alice_povm.push_back(branch_lift(e, extra_dim));
  const SteeringConvention& conv = resolved_steering_convention();
  s.alice_steering = {branch_lift(conv.a6(), extra_dim),
                      branch_lift(conv.a7(), extra_dim)};
  s.bob = certified_bob_with_branches();
}

struct GlobalState {
  CMatrix m;  // rows: A' A'', cols: B' B'' E
  Eigen::Index dim_b;
  Eigen::Index dim_e;
};

GlobalState global_state(const EveStrategy& s, const SchmidtVector& alpha) {
  const Eigen::Index da = s.alice_junk_dim;
  const Eigen::Index db = EveStrategy::kBobJunkDim;
  const Eigen::Index de = s.eve_dim;
  if (s.xi.size() != da * db * de) {
    throw ContractError("EveStrategy: xi has the wrong dimension");
  }
  GlobalState g{CMatrix::Zero(3 * da, 3 * db * de), 3 * db, de};
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index a2 = 0; a2 < da; ++a2)
      for (Eigen::Index b2 = 0; b2 < db; ++b2)
        for (Eigen::Index e = 0; e < de; ++e)
          g.m(i * da + a2, (i * db + b2) * de + e) =
              alpha[static_cast<int>(i)] * s.xi((a2 * db + b2) * de + e);
  return g;
}

/// <Psi| left (x) right |Psi> with left on the row space and right on the
/// column space of the reshaped state.
double sandwich(const GlobalState& g, const CMatrix& left,
                const CMatrix& right) {
  const CMatrix k = left * g.m * right.transpose();
  return (g.m.conjugate().cwiseProduct(k)).sum().real();
}

Eigen::MatrixXd strategy_entry(const GlobalState& g, const EveStrategy& s,
                               const std::vector<CMatrix>& effects, int k) {
  const std::array<CMatrix, 3> gb = order3_projectors(s.bob[k]);
  Eigen::MatrixXd p(static_cast<Eigen::Index>(effects.size()), 3);
  for (std::size_t a = 0; a < effects.size(); ++a)
    for (int b = 0; b < 3; ++b)
      p(static_cast<Eigen::Index>(a), b) =
          sandwich(g, effects[a], tensor(gb[b], identity(g.dim_e)));
  return p;
}

std::vector<CMatrix> effects_of(const CMatrix& observable) {
  const std::array<CMatrix, 3> p = order3_projectors(observable);
  return {p.begin(), p.end()};
}

double gate(const EveStrategy& s, const SchmidtVector& alpha, const Povm& povm,
            const Tolerances& tol) {
  const double dev = strategy_deviation(s, alpha, povm);
  if (dev > tol.compatibility) {
    std::ostringstream msg;
    msg << "strategy '" << s.name
        << "' does not reproduce the statistics (max deviation " << dev << ")";
    throw IncompatibleStrategy(msg.str(), dev);
  }
  return dev;
}

}  // namespace

double min_entropy(double g) {
  if (!(g > 0.0 && g <= 1.0)) {
    throw DomainError("min_entropy: guessing probability must be in (0, 1]");
  }
  return -std::log2(g);
}

GuessingReport guessing_probability_ideal(const SchmidtVector& alpha,
                                          const Povm& povm,
                                          const Tolerances& tol) {
  if (povm.size() != 9) {
    throw CertificationInapplicable("guessing probability needs 9 outcomes");
  }
  const CoefficientTable r = expansion_coefficients(povm, alpha);
  GuessingReport out{0.0, 0.0, {}};
  double worst = 0.0;
  for (int a = 0; a < 9; ++a) {
    out.marginal[a] = r(a, 0, 0).real();
    worst = std::max(worst, std::abs(out.marginal[a] - 1.0 / 9.0));
    out.guessing_probability = std::max(out.guessing_probability, out.marginal[a]);
  }
  if (worst > tol.equal_prob) {
    std::ostringstream msg;
    msg << "certification inapplicable: Tr[R_a rho_A] deviates from 1/9 by "
        << worst;
    throw CertificationInapplicable(msg.str());
  }
  out.min_entropy_bits = min_entropy(out.guessing_probability);
  return out;
}

double EveStrategy::branch_weight(int branch, int eve_outcome) const {
  const CMatrix op = tensor(tensor(identity(alice_junk_dim),
                                   projector(kBobJunkDim, branch)),
                            psd_sqrt(eve_povm.at(eve_outcome)));
  return (op * xi).squaredNorm();
}

std::array<CMatrix, 4> certified_bob_with_branches() {
  const std::array<CMatrix, 4> q1 = bob_certified(CertifiedBranch::kQ1);
  const std::array<CMatrix, 4> q2 = bob_certified(CertifiedBranch::kQ2);
  std::array<CMatrix, 4> out;
  for (int k = 0; k < 4; ++k)
    out[k] = tensor(q1[k], projector(2, 0)) + tensor(q2[k], projector(2, 1));
  return out;
}

EveStrategy trivial_eve(const Povm& povm) {
  EveStrategy s;
  s.name = "trivial";
  s.alice_junk_dim = 1;
  s.eve_dim = 1;
  s.xi = basis(2, 0);
  s.eve_povm = {identity(1)};
  for (const CMatrix& e : povm.elements) s.alice_povm.push_back(e);
  const SteeringConvention& conv = resolved_steering_convention();
  s.alice_steering = {conv.a6(), conv.a7()};
  s.bob = certified_bob_with_branches();
  return s;
}

EveStrategy branch_copy_eve(const Povm& povm, double q1) {
  EveStrategy s;
  s.name = "branch-copy";
  s.alice_junk_dim = 2;
  s.eve_dim = 2;
  s.xi = std::sqrt(q1) * tensor(tensor(basis(2, 0), basis(2, 0)), basis(2, 0)) +
         std::sqrt(1.0 - q1) *
             tensor(tensor(basis(2, 1), basis(2, 1)), basis(2, 1));
  s.eve_povm = {projector(2, 0), projector(2, 1)};
  fill_branch_devices(s, povm, 1);
  return s;
}

EveStrategy branch_mixing_eve(const Povm& povm, double q1, double overlap) {
  EveStrategy s;
  s.name = "branch-mixing";
  s.alice_junk_dim = 2;
  s.eve_dim = 3;
  CVector eta0 = basis(3, 0);
  CVector eta1 = overlap * basis(3, 0) +
                 std::sqrt(1.0 - overlap * overlap) * basis(3, 1);
  s.xi = std::sqrt(q1) * tensor(tensor(basis(2, 0), basis(2, 0)), eta0) +
         std::sqrt(1.0 - q1) * tensor(tensor(basis(2, 1), basis(2, 1)), eta1);
  const MubObservable f = mub_observable(1);
  s.eve_povm = {f.projectors[0], f.projectors[1], f.projectors[2]};
  fill_branch_devices(s, povm, 1);
  return s;
}

EveStrategy entangled_junk_eve(const Povm& povm, double q1) {
  EveStrategy s;
  s.name = "entangled-junk";
  s.alice_junk_dim = 4;  // branch qubit (x) extra qubit
  s.eve_dim = 2;
  // xi = sum_b sqrt(q_b) |b>_{A''} |b>_{B''} (x) |Phi+>_{extra, E}
  s.xi = CVector::Zero(4 * 2 * 2);
  const double w[2] = {std::sqrt(q1), std::sqrt(1.0 - q1)};
  for (int b = 0; b < 2; ++b)
    for (int x = 0; x < 2; ++x)
      s.xi(((b * 2 + x) * 2 + b) * 2 + x) = w[b] / std::sqrt(2.0);
  // tetrahedral qubit POVM
  s.eve_povm.clear();
  for (int e = 0; e < 4; ++e) {
    CVector v(2);
    if (e == 0) {
      v << 1.0, 0.0;
    } else {
      v(0) = 1.0 / std::sqrt(3.0);
      v(1) = std::polar(std::sqrt(2.0 / 3.0), 2.0 * std::numbers::pi * (e - 1) / 3.0);
    }
    s.eve_povm.push_back(0.5 * v * v.adjoint());
  }
  fill_branch_devices(s, povm, 2);
  return s;
}

EveStrategy splitting_eve(const std::vector<Povm>& components,
                          const std::vector<double>& weights) {
  if (components.empty() || components.size() != weights.size()) {
    throw DomainError("splitting_eve: components and weights must match");
  }
  const int n = static_cast<int>(components.size());
  EveStrategy s;
  s.name = "splitting";
  s.alice_junk_dim = n;
  s.eve_dim = n;
  s.xi = CVector::Zero(n * 2 * n);
  for (int c = 0; c < n; ++c) s.xi((c * 2 + 0) * n + c) = std::sqrt(weights[c]);
  for (int e = 0; e < n; ++e) s.eve_povm.push_back(projector(n, e));
  for (int a = 0; a < 9; ++a) {
    CMatrix eff = CMatrix::Zero(3 * n, 3 * n);
    for (int c = 0; c < n; ++c) eff += tensor(components[c][a], projector(n, c));
    s.alice_povm.push_back(eff);
  }
  const SteeringConvention& conv = resolved_steering_convention();
  s.alice_steering = {tensor(conv.a6(), identity(n)),
                      tensor(conv.a7(), identity(n))};
  s.bob = certified_bob_with_branches();
  return s;
}

EveStrategy with_perturbed_bob(EveStrategy s) {
  s.name += "+perturbed-bob";
  s.bob[1] = tensor(clock_z(), identity(2));
  return s;
}

std::vector<EveStrategy> eve_corpus(const Povm& povm) {
  EveStrategy pure_q2 = branch_copy_eve(povm, 0.0);
  pure_q2.name = "pure-Q2";
  return {trivial_eve(povm), branch_copy_eve(povm, 0.5),
          branch_mixing_eve(povm, 0.3, 0.6), entangled_junk_eve(povm, 0.7),
          pure_q2};
}

double strategy_deviation(const EveStrategy& s, const SchmidtVector& alpha,
                          const Povm& povm) {
  const ProtocolRealization ideal = ideal_realization(alpha, povm);
  const CVector& psi = ideal.prep2.amplitudes();
  const GlobalState g = global_state(s, alpha);
  const std::array<std::vector<CMatrix>, 3> strategy_effects{
      effects_of(s.alice_steering[0]), effects_of(s.alice_steering[1]),
      s.alice_povm};
  double worst = 0.0;
  for (int j = 6; j <= 8; ++j) {
    const std::vector<CMatrix>& ideal_fa = ideal.alice_effects[j];
    for (int k = 0; k < kBobInputs; ++k) {
      const Eigen::MatrixXd got = strategy_entry(g, s, strategy_effects[j - 6], k);
      for (std::size_t a = 0; a < ideal_fa.size(); ++a)
        for (int b = 0; b < 3; ++b) {
          const double want =
              expectation(psi, tensor(ideal_fa[a], ideal.bob_effects[k][b]))
                  .real();
          worst = std::max(
              worst, std::abs(got(static_cast<Eigen::Index>(a), b) - want));
        }
    }
  }
  return worst;
}

EveAttackResult eve_attack_value(const EveStrategy& s,
                                 const SchmidtVector& alpha, const Povm& povm,
                                 const Tolerances& tol) {
  const double dev = gate(s, alpha, povm, tol);
  const GlobalState g = global_state(s, alpha);
  double value = 0.0;
  const std::size_t guesses = std::min(s.alice_povm.size(), s.eve_povm.size());
  for (std::size_t a = 0; a < guesses; ++a) {
    value += sandwich(g, s.alice_povm[a],
                      tensor(identity(g.dim_b), s.eve_povm[a]));
  }
  return {value, dev};
}

std::string DecompositionReport::failing_clause() const {
  if (!convex_identity) return "i";
  if (!conditionals_valid) return "ii";
  if (!conditionals_match) return "iii";
  return "";
}

DecompositionReport decomposition_check(const Povm& povm, const EveStrategy& s,
                                        const SchmidtVector& alpha,
                                        const Tolerances& tol) {
  gate(s, alpha, povm, tol);
  const CoefficientTable ideal = expansion_coefficients(povm, alpha);
  const SchmidtFilter f = schmidt_filter(alpha, tol);
  const int dj = s.alice_junk_dim;
  const Eigen::Index rest = EveStrategy::kBobJunkDim * s.eve_dim;

  // Junk-side coefficient operators O^a_{kl} on A''.
  std::vector<std::array<CMatrix, 9>> coeff_ops(9);
  for (int a = 0; a < 9; ++a) {
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const CMatrix dual = f.p * weyl(k, l).transpose() * f.p;
        const CMatrix prod = tensor(dual, identity(dj)) * s.alice_povm[a];
        coeff_ops[a][3 * k + l] = trace_out_first(prod, 3, dj) / 3.0;
      }
  }

  DecompositionReport rep;
  std::vector<CMatrix> convex(9, CMatrix::Zero(3, 3));
  for (int b = 0; b < 2; ++b) {
    for (int e = 0; e < static_cast<int>(s.eve_povm.size()); ++e) {
      const CMatrix op = tensor(tensor(identity(dj), projector(2, b)),
                                psd_sqrt(s.eve_povm[e]));
      const CVector v = op * s.xi;
      const double q = v.squaredNorm();
      if (q <= 1e-14) continue;
      const CVector phi = v / std::sqrt(q);

      ConditionalTerm term{b, e, q, {}, false, 0.0};
      for (int a = 0; a < 9; ++a) {
        CMatrix r(3, 3);
        for (int p = 0; p < 3; ++p)
          for (int qq = 0; qq < 3; ++qq) {
            const int kk = b == 0 ? p : (2 * p) % 3;
            const CMatrix lifted =
                tensor(coeff_ops[a][3 * kk + qq], identity(rest));
            Complex val = 3.0 * phi.dot(lifted * phi);
            if (b == 1) val *= omega_power(2 * p * qq);
            r(p, qq) = val;
          }
        term.table.r.push_back(r);
        convex[a] += q * r;
        term.deviation_from_ideal = std::max(
            term.deviation_from_ideal, (r - ideal.r[a]).cwiseAbs().maxCoeff());
      }
      const PovmValidation pv =
          validate_povm(reconstruct_from_coefficients(term.table, alpha), tol);
      term.valid_povm = pv.psd && pv.complete;
      rep.total_weight += q;
      rep.max_conditional_deviation =
          std::max(rep.max_conditional_deviation, term.deviation_from_ideal);
      rep.terms.push_back(std::move(term));
    }
  }
  for (int a = 0; a < 9; ++a) {
    rep.convex_error = std::max(rep.convex_error,
                                (convex[a] - ideal.r[a]).cwiseAbs().maxCoeff());
  }
  rep.convex_identity = rep.convex_error <= tol.convex_identity &&
                        std::abs(rep.total_weight - 1.0) <= tol.convex_identity;
  rep.conditionals_valid =
      std::all_of(rep.terms.begin(), rep.terms.end(),
                  [](const ConditionalTerm& t) { return t.valid_povm; });
  rep.conditionals_match = rep.max_conditional_deviation <= tol.decomposition;
  return rep;
}

}  // namespace dirand
