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

#include <stdexcept>
#include <string>

namespace dirand {

/// Input outside the mathematical domain of an operation (bad Schmidt
/// vector, index out of range, malformed table).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Schmidt coefficient is below the degeneracy floor, so P^{-1} and the
/// steering coefficients would blow up.
class DegenerateStateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The extremal POVM construction does not cover this state.
class CoverageError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Violated internal contract (non-Hermitian input to a Hermitian solver,
/// non-real Bell value, dimension mismatch).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No candidate convention reproduces the expected ideal value.
class ConventionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Guessing-probability reduction needs Tr[R_a rho_A] = 1/9 for all a.
class CertificationInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An adversary strategy that does not reproduce the observed statistics.
class IncompatibleStrategy : public std::runtime_error {
 public:
  IncompatibleStrategy(const std::string& what, double max_deviation)
      : std::runtime_error(what), max_deviation_(max_deviation) {}
  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

}  // namespace dirand
