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

#include <map>
#include <string>

namespace dirand {

/// Numerical tolerances used across the pipeline. Defaults are the values
/// the checks are specified against; the CLI can override them per run.
struct Tolerances {
  double unit_norm = 1e-12;       // Ket / Schmidt normalization
  double degeneracy = 1e-6;       // floor on each Schmidt coefficient
  double hermitian = 1e-10;       // input check for Hermitian solvers
  double imag_residue = 1e-12;    // allowed imaginary part of a Bell value
  double relation = 1e-10;        // anticommutator residuals (Frobenius)
  double psd = 1e-10;             // min eigenvalue >= -psd
  double completeness = 1e-10;    // ||sum R_a - 1||
  double rank_one = 1e-10;        // second eigenvalue <= rank_one
  double gram_rank = 1e-8;        // relative singular-value cutoff
  double equal_prob = 1e-10;      // Tr[R_a rho_A] vs 1/9
  double round_trip = 1e-10;      // expansion -> reconstruction
  double compatibility = 1e-9;    // Eve statistics gate (max norm)
  double convex_identity = 1e-10; // sum_be q_be r~ vs r
  double decomposition = 1e-9;    // conditional tables vs ideal table
  double steering_value = 1e-9;   // <W3> vs 3
  double lhs_margin = 1e-9;       // 3 - lhs bound must exceed this
  double bound_check = 1e-9;      // enumerated vs closed-form beta_L

  /// Overrides a named field. Returns false for an unknown name.
  bool set(const std::string& name, double value);
  std::map<std::string, double> as_map() const;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace dirand
