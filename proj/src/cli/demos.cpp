// Copyright 2026 The procmap Authors
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

#include <cmath>
#include <numbers>

#include "procmap/cli.hpp"

namespace procmap::cli {

using io::Json;
using io::to_json;

namespace {

constexpr double kPi = std::numbers::pi;

// Correlated remainder of the imperfect-pin demo: (|00> - i|11>)/sqrt2.
ComplexMatrix imperfect_pin_gamma0() {
  ComplexVector chi = ComplexVector::Zero(4);
  chi(0) = 1.0;
  chi(3) = Complex(0.0, -1.0);
  chi /= std::sqrt(2.0);
  ComplexMatrix phi = ComplexMatrix::Zero(2, 2);
  phi(0, 0) = 1.0;
  return 0.7 * tensor(phi, 0.5 * ComplexMatrix::Identity(2, 2)) + 0.3 * chi * chi.adjoint();
}

Json reference_up() { return {{"bloch", {0.0, 0.0, 1.0}}}; }

Json with_protocol(Json scenario, const char* protocol) {
  scenario["protocol"] = protocol;
  return scenario;
}

Json with_sampling(Json scenario, std::optional<std::uint64_t> shots, std::optional<std::uint64_t> seed) {
  if (shots) scenario["shots"] = *shots;
  if (seed) scenario["seed"] = *seed;
  return scenario;
}

Dataset simulate_demo(const std::string& name, const Json& scenario) {
  Dataset ds = simulate_with_metadata(io::scenario_from_json(scenario));
  ds.metadata["demo"] = name;
  return ds;
}

Json verdict_summary(const VerificationReport& rep) {
  return {{"verdict", std::string(to_string(rep.verdict))},
          {"max_linear_residual", rep.max_linear()},
          {"max_bilinear_residual", rep.max_bilinear()}};
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"stochastic-heisenberg", "measurement-correlated",
                                              "imperfect-pin"};
  return names;
}

Json demo_scenario(const std::string& name) {
  if (name == "stochastic-heisenberg") {
    return {{"dimA", 2}, {"dimB", 2}, {"hamiltonian", "heisenberg"}, {"t", kPi / 8},
            {"preparation", {{"kind", "pin_rotate"}, {"reference", reference_up()}}},
            {"protocol", "linear4"}};
  }
  if (name == "measurement-correlated") {
    return {{"dimA", 2}, {"dimB", 2}, {"hamiltonian", "heisenberg"}, {"t", kPi / 8},
            {"gamma0", {{"bloch_a", {0.0, 0.5, 0.0}}, {"c23", 0.3}}},
            {"preparation", {{"kind", "projective"}}},
            {"protocol", "verify12"}};
  }
  if (name == "imperfect-pin") {
    return {{"dimA", 2}, {"dimB", 2}, {"hamiltonian", "heisenberg"}, {"t", 3 * kPi / 32},
            {"gamma0", to_json(imperfect_pin_gamma0())},
            {"preparation", {{"kind", "rotate_only"}, {"reference", reference_up()}}},
            {"protocol", "linear4"}};
  }
  throw Error(ErrorKind::MalformedInput, "unknown demo '" + name + "'");
}

Bundle build_demo(const std::string& name, std::optional<std::uint64_t> shots,
                  std::optional<std::uint64_t> seed) {
  const Json scenario = with_sampling(demo_scenario(name), shots, seed);
  Bundle b;
  Json summary;
  summary["demo"] = name;

  if (name == "measurement-correlated") {
    const Dataset ds = simulate_demo(name, scenario);
    const Json linear = tomo_linear(ds);
    const Json bilinear = tomo_bilinear(ds);
    const VerificationReport rep = classify(ds.records);
    b.files = {{"scenario.json", scenario},
               {"dataset.json", to_json(ds)},
               {"tomo_linear.json", linear},
               {"tomo_bilinear.json", bilinear},
               {"report.json", to_json(rep)}};
    summary["description"] =
        "Inputs prepared by von Neumann measurement on a system correlated with its environment; "
        "the process is bi-linear and a linear fit mispredicts held-out inputs.";
    summary["parameters"] = {{"t", kPi / 8}, {"bloch_a", {0.0, 0.5, 0.0}}, {"c23", 0.3}};
    summary["repository_chosen"] = Json::array();
    summary["results"] = verdict_summary(rep);
    summary["results"]["linear_max_holdout_bloch_deviation"] = linear["max_holdout_bloch_deviation"];
    summary["results"]["bilinear_max_holdout_bloch_deviation"] = bilinear["max_holdout_bloch_deviation"];
  } else {
    const Json verify_scenario = with_protocol(scenario, "verify12");
    const Dataset ds = simulate_demo(name, scenario);
    const Dataset vds = simulate_demo(name, verify_scenario);
    const Json linear = tomo_linear(ds);
    const VerificationReport rep = classify(vds.records);
    b.files = {{"scenario.json", scenario},
               {"dataset.json", to_json(ds)},
               {"tomo_linear.json", linear},
               {"verify_scenario.json", verify_scenario},
               {"verify_dataset.json", to_json(vds)},
               {"report.json", to_json(rep)}};
    if (name == "stochastic-heisenberg") {
      summary["description"] =
          "Inputs prepared by an ideal pin map followed by local rotations; the process is linear.";
      summary["parameters"] = {{"t", kPi / 8}, {"tau", "maximally mixed"}};
      summary["repository_chosen"] = Json::array();
    } else {
      summary["description"] =
          "Inputs prepared by local rotations of a system that only partly sits in the assumed "
          "pure state; the linear fit has negative eigenvalues.";
      summary["parameters"] = {{"t", 3 * kPi / 32},
                               {"pure_fraction", 0.7},
                               {"assumed_state", "|0>"},
                               {"tau", "maximally mixed"},
                               {"chi", "(|00> - i|11>)/sqrt2"}};
      summary["repository_chosen"] = {"t", "assumed_state", "tau", "chi"};
    }
    summary["results"] = verdict_summary(rep);
    summary["results"]["min_eigenvalue"] = linear["diagnostics"]["min_eigenvalue"];
  }
  Json files = Json::array();
  for (const auto& f : b.files) files.push_back(f.first);
  files.push_back("bundle.json");
  summary["files"] = std::move(files);
  b.summary = summary;
  return b;
}

}  // namespace procmap::cli
