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

#include <array>

#include "dirand/linalg.hpp"
#include "dirand/tolerances.hpp"

namespace dirand {

inline constexpr int kQutrit = 3;

/// exp(2*pi*i*n/3), exact on the reduced exponent n mod 3.
Complex omega_power(long n);

/// The Bell-functional phase e^{-i*pi/18}.
Complex bell_phase();

/// Shift X|i> = |i+1 mod 3>.
CMatrix shift_x();
/// Clock Z|i> = omega^i |i>.
CMatrix clock_z();

/// Weyl-Heisenberg operator X^p Z^q; p and q are reduced mod 3.
CMatrix weyl(int p, int q);

/// One of the four mutually unbiased observables {Z, X, XZ, XZ^2} together
/// with its rank-one eigenprojectors; projectors[b] has eigenvalue omega^b.
struct MubObservable {
  CMatrix matrix;
  std::array<CMatrix, 3> projectors;
  std::array<CVector, 3> eigenvectors;
};

MubObservable mub_observable(int r);

/// Outcome-relabelled partner of M_r built from its spectral projectors:
/// r=0 -> Z^2, r=1 -> X^2, r=2 -> omega^2 M_2^dag = X^2 Z^2,
/// r=3 -> omega M_3^dag = X^2 Z.
CMatrix relabel_conjugate(int r);

/// The Weyl product that relabel_conjugate(r) must reproduce.
CMatrix relabel_target(int r);

/// Spectral projectors of an order-3 unitary U (U^3 = 1):
/// Pi_a = (1/3) sum_l omega^{-a l} U^l, so that U = sum_a omega^a Pi_a.
std::array<CMatrix, 3> order3_projectors(const CMatrix& u);

/// Three strictly positive Schmidt coefficients with unit 2-norm.
class SchmidtVector {
 public:
  /// Validates normalization and the degeneracy floor.
  SchmidtVector(double a0, double a1, double a2,
                const Tolerances& tol = default_tolerances());

  /// Rescales to unit norm first; then validates as above.
  static SchmidtVector normalized(double a0, double a1, double a2,
                                  const Tolerances& tol = default_tolerances());
  static SchmidtVector maximal();

  double operator[](int i) const { return values_.at(i); }
  const std::array<double, 3>& values() const { return values_; }
  std::array<double, 3> squares() const;
  double min() const;

 private:
  std::array<double, 3> values_;
};

/// Normalized state vector.
class Ket {
 public:
  explicit Ket(CVector amplitudes, double tol = 1e-12);
  Eigen::Index dim() const { return amps_.size(); }
  const CVector& amplitudes() const { return amps_; }

 private:
  CVector amps_;
};

/// (1/sqrt 3) sum_i |ii>
Ket max_entangled();
/// sum_i alpha_i |ii>
Ket partial_state(const SchmidtVector& alpha);

/// Reduced density matrix on the first qutrit of a two-qutrit ket.
CMatrix reduced_state_first(const Ket& psi);

struct SchmidtFilter {
  CMatrix p;
  CMatrix p_inv;
};

/// P = diag(alpha) and its inverse.
SchmidtFilter schmidt_filter(const SchmidtVector& alpha,
                             const Tolerances& tol = default_tolerances());

/// Permutation unitary sending |i> to |perm[i]>.
CMatrix permutation_matrix(const std::array<int, 3>& perm);

}  // namespace dirand
