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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <thread>

#include "dirand/errors.hpp"
#include "dirand/pipeline.hpp"
#include "dirand/report.hpp"

namespace dirand::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<double> alpha;
  std::uint64_t samples = 0;
  std::uint64_t seed = 42;
  unsigned workers = 0;
  std::string out_path;
  std::string in_path;
  std::string measure = "uniform";
  std::vector<std::string> tol_overrides;
  bool json = false;
};

Tolerances parse_tolerances(const std::vector<std::string>& overrides) {
  Tolerances tol;
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw DomainError("--tol expects name=value, got '" + item + "'");
    }
    const std::string name = item.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("--tol " + name + ": not a number");
    }
    if (!(value > 0.0) || !tol.set(name, value)) {
      throw DomainError("--tol: unknown tolerance or non-positive value '" +
                        item + "'");
    }
  }
  return tol;
}

SchmidtVector parse_alpha(const RunConfig& cfg, const Tolerances& tol) {
  if (cfg.alpha.size() != 3) throw DomainError("--alpha needs three values");
  return SchmidtVector::normalized(cfg.alpha[0], cfg.alpha[1], cfg.alpha[2],
                                   tol);
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << doc.dump(2) << '\n';
  if (!f) throw IoError("write to '" + path + "' failed");
}

Json read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

/// Writes `doc` to --out if given, and to stdout in --json mode.
void emit(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  if (!cfg.out_path.empty()) write_file(cfg.out_path, doc);
  if (cfg.json) out << doc.dump(2) << '\n';
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_bounds(const RunConfig& cfg, const Tolerances& tol, std::ostream& out) {
  const BoundsReport b = run_bounds(tol);
  Json doc = bounds_to_json(b);
  doc["tolerances"] = tolerances_to_json(tol);
  emit(cfg, doc, out);
  if (!cfg.json) {
    out << "beta_L (closed form)   " << b.beta_local << '\n'
        << "beta_L (W1 enumerated) " << b.w1_classical.value << '\n'
        << "beta_L (W2 enumerated) " << b.w2_classical.value << '\n'
        << "beta_Q (closed form)   " << b.beta_quantum << '\n'
        << "<W1> ideal             " << b.w1_value << '\n'
        << "<W2> ideal             " << b.w2_value << "  ("
        << to_string(b.w2_convention) << " Alice)\n"
        << "enumeration            " << b.enumeration_seconds << " s\n"
        << verdict(b.pass) << '\n';
  }
  return b.pass ? kPass : kCheckFailure;
}

int cmd_certify(const RunConfig& cfg, const Tolerances& tol, std::ostream& out) {
  const SchmidtVector alpha = parse_alpha(cfg, tol);
  std::optional<CoverageOptions> cov;
  if (cfg.samples > 0) cov = CoverageOptions{cfg.samples, cfg.seed, cfg.workers};
  const CertificationReport rep = certify(alpha, tol, cov);
  emit(cfg, rep.json, out);
  if (!cfg.json) {
    const Json& j = rep.json;
    out << "alpha          " << alpha[0] << ' ' << alpha[1] << ' ' << alpha[2]
        << '\n'
        << "bell           " << verdict(j["bell"]["pass"].get<bool>() &&
                                        j["bell"]["relations_pass"].get<bool>())
        << "  <W1>=" << j["bell"]["w1_value"].get<double>()
        << " <W2>=" << j["bell"]["w2_value"].get<double>() << '\n'
        << "steering       " << verdict(j["steering"]["pass"].get<bool>())
        << "  <W3>=" << j["steering"]["quantum_value"].get<double>()
        << " LHS=" << j["steering"]["lhs_bound"].get<double>() << '\n'
        << "povm           " << verdict(j["povm"]["pass"].get<bool>()) << '\n'
        << "statistics     " << verdict(j["statistics"]["pass"].get<bool>())
        << '\n'
        << "randomness     " << verdict(j["randomness"]["pass"].get<bool>())
        << "  G=" << j["randomness"]["G"].get<double>()
        << " Hmin=" << j["randomness"]["Hmin_bits"].get<double>() << " bits\n"
        << "decomposition  " << verdict(j["decomposition"]["pass"].get<bool>())
        << '\n';
    if (j.contains("coverage")) {
      out << "coverage       " << verdict(j["coverage"]["pass"].get<bool>())
          << "  " << j["coverage"]["fraction"].get<double>() << '\n';
    }
    out << verdict(rep.pass) << '\n';
  }
  return rep.pass ? kPass : kCheckFailure;
}

int cmd_coverage(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples == 0) throw DomainError("--samples must be at least 1");
  SamplingMeasure measure = SamplingMeasure::kUniformSimplex;
  if (cfg.measure == "haar") {
    measure = SamplingMeasure::kHaar;
  } else if (cfg.measure != "uniform") {
    throw DomainError("--measure must be 'uniform' or 'haar'");
  }
  const CoverageResult c =
      monte_carlo_coverage(cfg.samples, cfg.seed, cfg.workers, measure);
  Json doc = coverage_to_json(c);
  doc["seed"] = cfg.seed;
  doc["measure"] = cfg.measure;
  // The analytic reference only applies to the uniform simplex.
  const bool ok = measure == SamplingMeasure::kHaar || coverage_consistent(c);
  doc["pass"] = ok;
  emit(cfg, doc, out);
  if (!cfg.json) {
    out << "samples   " << c.samples << '\n'
        << "fraction  " << c.fraction << " +/- " << c.halfwidth << '\n'
        << "analytic  " << kCoverageAnalytic << '\n'
        << verdict(ok) << '\n';
  }
  return ok ? kPass : kCheckFailure;
}

int cmd_povm(const RunConfig& cfg, const Tolerances& tol, std::ostream& out) {
  const SchmidtVector alpha = parse_alpha(cfg, tol);
  const ExtremalPovm povm = build_extremal_povm_relabeled(alpha);
  const PovmValidation v = validate_povm(povm.povm, tol);
  Json doc = povm_to_json(povm, alpha);
  if (cfg.out_path.empty() && !cfg.json) {
    out << doc.dump(2) << '\n';
  } else {
    emit(cfg, doc, out);
  }
  return v.all() ? kPass : kCheckFailure;
}

int cmd_simulate(const RunConfig& cfg, const Tolerances& tol,
                 std::ostream& out) {
  const SchmidtVector alpha = parse_alpha(cfg, tol);
  const Json doc = statistics_to_json(ideal_statistics(alpha));
  if (cfg.out_path.empty() && !cfg.json) {
    out << doc.dump(2) << '\n';
  } else {
    emit(cfg, doc, out);
  }
  return kPass;
}

int cmd_analyze(const RunConfig& cfg, const Tolerances& tol,
                std::ostream& out) {
  const StatisticsTable t = statistics_from_json(read_file(cfg.in_path));
  const double w1 = w1_from_statistics(t);
  const double w2 = w2_from_statistics(t);
  const double w3 = steering_from_statistics(t);
  const double norm = normalization_residual(t);
  const double ns = nonsignaling_residual(t);
  const std::array<double, 9> marginal = povm_marginal(t);
  double marginal_dev = 0.0;
  for (double m : marginal)
    marginal_dev = std::max(marginal_dev, std::abs(m - 1.0 / 9.0));
  const bool ok = std::abs(w1 - beta_quantum()) <= 1e-10 &&
                  std::abs(w2 - beta_quantum()) <= 1e-9 &&
                  std::abs(w3 - 3.0) <= tol.steering_value && norm <= 1e-12 &&
                  ns <= 1e-12 && marginal_dev <= tol.equal_prob;
  Json doc{{"w1_value", w1},
           {"w2_value", w2},
           {"steering_value", w3},
           {"normalization_residual", norm},
           {"nonsignaling_residual", ns},
           {"povm_marginal", marginal},
           {"pass", ok}};
  emit(cfg, doc, out);
  if (!cfg.json) {
    out << "<W1>  " << w1 << '\n'
        << "<W2>  " << w2 << '\n'
        << "<W3>  " << w3 << '\n'
        << "normalization residual " << norm << '\n'
        << "nonsignaling residual  " << ns << '\n'
        << verdict(ok) << '\n';
  }
  return ok ? kPass : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Device-independent randomness certification for qutrits",
               "qutrit-cert"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable JSON on stdout");
  app.add_option("--tol", cfg.tol_overrides,
                 "Override a tolerance, name=value (repeatable)");
  app.add_option("--out", cfg.out_path, "Write the JSON report to PATH");

  auto add_alpha = [&cfg](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Schmidt coefficients a0 a1 a2")
        ->expected(3)
        ->required();
  };
  auto add_workers = [&cfg](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers,
                    "Worker threads (0 = available parallelism)");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "Classical and quantum bounds");
  CLI::App* certify_cmd = app.add_subcommand("certify", "Full certification chain");
  add_alpha(certify_cmd);
  certify_cmd->add_option("--samples", cfg.samples,
                          "Also run a coverage estimate with N samples");
  certify_cmd->add_option("--seed", cfg.seed, "Seed for the coverage estimate");
  add_workers(certify_cmd);
  CLI::App* coverage = app.add_subcommand("coverage", "Monte Carlo coverage");
  coverage->add_option("--samples", cfg.samples, "Number of samples")->required();
  coverage->add_option("--seed", cfg.seed, "Master seed");
  coverage->add_option("--measure", cfg.measure, "uniform or haar");
  add_workers(coverage);
  CLI::App* povm = app.add_subcommand("povm", "Emit the extremal POVM");
  add_alpha(povm);
  CLI::App* simulate = app.add_subcommand("simulate", "Emit the ideal statistics");
  add_alpha(simulate);
  CLI::App* analyze = app.add_subcommand("analyze", "Re-ingest a statistics table");
  analyze->add_option("--in", cfg.in_path, "Statistics JSON")->required();

  std::vector<std::string> storage{"qutrit-cert"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kDomainError;
  }

  out << std::setprecision(17);
  try {
    const Tolerances tol = parse_tolerances(cfg.tol_overrides);
    if (*bounds) return cmd_bounds(cfg, tol, out);
    if (*certify_cmd) return cmd_certify(cfg, tol, out);
    if (*coverage) return cmd_coverage(cfg, out);
    if (*povm) return cmd_povm(cfg, tol, out);
    if (*simulate) return cmd_simulate(cfg, tol, out);
    if (*analyze) return cmd_analyze(cfg, tol, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const CertificationInapplicable& e) {
    err << "certification inapplicable: " << e.what() << '\n';
    return kCheckFailure;
  } catch (const ConventionError& e) {
    err << "convention error: " << e.what() << '\n';
    return kCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }
  return kDomainError;
}

}  // namespace dirand::cli
