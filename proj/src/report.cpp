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

#include "dirand/report.hpp"

#include "dirand/errors.hpp"

namespace dirand {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw DomainError("expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

template <typename Matrix, typename Cell>
Matrix matrix_from_json(const Json& j, Cell cell) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw DomainError("expected a matrix as an array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw DomainError("ragged matrix rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = cell(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json alpha_json(const SchmidtVector& alpha) {
  return Json::array({alpha[0], alpha[1], alpha[2]});
}

}  // namespace

CMatrix cmatrix_from_json(const Json& j) {
  return matrix_from_json<CMatrix>(j, complex_from_json);
}

Eigen::MatrixXd rmatrix_from_json(const Json& j) {
  return matrix_from_json<Eigen::MatrixXd>(j, [](const Json& c) {
    if (!c.is_number()) throw DomainError("expected a real matrix entry");
    return c.get<double>();
  });
}

Json povm_to_json(const ExtremalPovm& povm, const SchmidtVector& alpha) {
  Json elements = Json::array();
  for (const CMatrix& e : povm.povm.elements) elements.push_back(to_json(e));
  const ExtremalPovmParams& p = povm.params;
  return {{"alpha", alpha_json(alpha)},
          {"elements", elements},
          {"params",
           {{"lambda_first", p.lambda_first},
            {"lambda_mid", p.lambda_mid},
            {"lambda_last", p.lambda_last},
            {"mu", p.mu},
            {"permutation", p.permutation}}}};
}

Povm povm_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
    throw DomainError("POVM document needs an 'elements' array");
  }
  Povm out;
  for (const Json& e : j["elements"]) out.elements.push_back(cmatrix_from_json(e));
  return out;
}

Json statistics_to_json(const StatisticsTable& t) {
  Json entries = Json::array();
  for (int prep = 1; prep <= 2; ++prep)
    for (int j = 0; j < kAliceInputs; ++j)
      for (int k = 0; k < kBobInputs; ++k)
        entries.push_back(
            {{"prep", prep}, {"j", j}, {"k", k}, {"probs", to_json(t.at(prep, j, k))}});
  return {{"alpha", alpha_json(t.alpha())}, {"entries", entries}};
}

StatisticsTable statistics_from_json(const Json& doc) {
  try {
    const Json& a = doc.at("alpha");
    if (!a.is_array() || a.size() != 3) {
      throw DomainError("statistics document: 'alpha' needs three entries");
    }
    StatisticsTable t(SchmidtVector(a[0].get<double>(), a[1].get<double>(),
                                    a[2].get<double>()));
    const std::size_t expected = 2u * kAliceInputs * kBobInputs;
    const Json& entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != expected) {
      throw DomainError("statistics document: expected " +
                        std::to_string(expected) + " entries");
    }
    for (const Json& e : entries) {
      const int prep = e.at("prep").get<int>();
      const int j = e.at("j").get<int>();
      const int k = e.at("k").get<int>();
      if (prep < 1 || prep > 2 || j < 0 || j >= kAliceInputs || k < 0 ||
          k >= kBobInputs) {
        throw DomainError("statistics document: entry index out of range");
      }
      Eigen::MatrixXd probs = rmatrix_from_json(e.at("probs"));
      if (probs.rows() != StatisticsTable::alice_outcomes(j) || probs.cols() != 3) {
        throw DomainError("statistics document: wrong table shape");
      }
      t.at(prep, j, k) = std::move(probs);
    }
    return t;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("statistics document: ") + e.what());
  }
}

Json guessing_to_json(const GuessingReport& g) {
  return {{"G", g.guessing_probability},
          {"Hmin_bits", g.min_entropy_bits},
          {"marginal", g.marginal}};
}

Json coverage_to_json(const CoverageResult& c) {
  return {{"samples", c.samples},
          {"hits", c.hits},
          {"fraction", c.fraction},
          {"halfwidth", c.halfwidth},
          {"ci", {c.fraction - c.halfwidth, c.fraction + c.halfwidth}},
          {"analytic", kCoverageAnalytic}};
}

Json tolerances_to_json(const Tolerances& t) {
  Json out = Json::object();
  for (const auto& [name, value] : t.as_map()) out[name] = value;
  return out;
}

}  // namespace dirand
