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

#include "dirand/tolerances.hpp"

namespace dirand {

namespace {

template <typename F>
void for_each_field(Tolerances& t, F&& f) {
  f("unit_norm", t.unit_norm);
  f("degeneracy", t.degeneracy);
  f("hermitian", t.hermitian);
  f("imag_residue", t.imag_residue);
  f("relation", t.relation);
  f("psd", t.psd);
  f("completeness", t.completeness);
  f("rank_one", t.rank_one);
  f("gram_rank", t.gram_rank);
  f("equal_prob", t.equal_prob);
  f("round_trip", t.round_trip);
  f("compatibility", t.compatibility);
  f("convex_identity", t.convex_identity);
  f("decomposition", t.decomposition);
  f("steering_value", t.steering_value);
  f("lhs_margin", t.lhs_margin);
  f("bound_check", t.bound_check);
}

}  // namespace

bool Tolerances::set(const std::string& name, double value) {
  bool found = false;
  for_each_field(*this, [&](const char* key, double& field) {
    if (name == key) {
      field = value;
      found = true;
    }
  });
  return found;
}

std::map<std::string, double> Tolerances::as_map() const {
  std::map<std::string, double> out;
  Tolerances copy = *this;
  for_each_field(copy, [&](const char* key, double& field) { out[key] = field; });
  return out;
}

}  // namespace dirand
