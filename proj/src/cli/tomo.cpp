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

#include <algorithm>
#include <array>
#include <string>

#include "procmap/cli.hpp"

namespace procmap::cli {

using io::Json;
using io::to_json;

namespace {

constexpr std::array<const char*, 4> kLinearFrame{"1-", "1+", "2+", "3+"};

bool in_list(const std::vector<std::string>& used, const std::string& label) {
  return std::find(used.begin(), used.end(), label) != used.end();
}

Json holdout_entry(const TomographyRecord& rec, const ComplexMatrix& predicted) {
  Json h;
  h["label"] = rec.label;
  if (rec.output.dim() == 2) {
    const BlochVector pb = bloch_vector(predicted);
    const BlochVector ob = bloch_vector(rec.output.matrix());
    h["input_bloch"] = to_json(bloch_vector(rec.input.matrix()));
    h["predicted_bloch"] = to_json(pb);
    h["observed_bloch"] = to_json(ob);
    h["bloch_deviation"] = pb.max_abs_diff(ob);
  }
  h["max_abs_deviation"] = max_abs(predicted - rec.output.matrix());
  return h;
}

double max_holdout(const Json& holdout) {
  double worst = 0.0;
  for (const auto& h : holdout) {
    const char* key = h.contains("bloch_deviation") ? "bloch_deviation" : "max_abs_deviation";
    worst = std::max(worst, h[key].get<double>());
  }
  return worst;
}

}  // namespace

Dataset simulate_with_metadata(const Scenario& scenario) {
  Dataset ds = simulate(scenario);
  ds.metadata["source"] = "procmap simulate";
  ds.metadata["protocol"] = std::string(io::to_string(scenario.protocol));
  ds.metadata["preparation"] = std::string(io::to_string(scenario.kind));
  ds.metadata["shots"] = scenario.shots ? std::to_string(*scenario.shots) : "exact";
  if (scenario.seed) ds.metadata["seed"] = std::to_string(*scenario.seed);
  return ds;
}

Json tomo_linear(const Dataset& dataset) {
  const auto& records = dataset.records;
  std::vector<TomographyRecord> frame;
  const bool standard = std::all_of(kLinearFrame.begin(), kLinearFrame.end(), [&](const char* l) {
    return find_record(records, l) != nullptr;
  });
  if (standard) {
    for (const char* l : kLinearFrame) frame.push_back(require_record(records, l));
  } else if (!records.empty() &&
             static_cast<Index>(records.size()) == records.front().input.dim() * records.front().input.dim()) {
    frame = records;
  } else {
    for (const char* l : kLinearFrame) require_record(records, l);
  }

  const LinearProcessMap map = reconstruct_linear_map(frame);
  std::vector<std::string> used;
  for (const auto& r : frame) used.push_back(r.label);

  Json holdout = Json::array();
  for (const auto& rec : records) {
    if (in_list(used, rec.label)) continue;
    holdout.push_back(holdout_entry(rec, apply_linear_map(map, rec.input.matrix())));
  }

  Json j;
  j["mode"] = "linear";
  j["inputs"] = used;
  j["map"] = to_json(map);
  j["diagnostics"] = to_json(map_diagnostics(map));
  j["holdout"] = holdout;
  if (!holdout.empty()) j["max_holdout_bloch_deviation"] = max_holdout(holdout);
  if (dataset.truth && dataset.truth->kind == PrepKind::PinRotate && dataset.truth->tau) {
    const LinearProcessMap exact = dynamical_map_fixed_env(dataset.truth->spec.u, *dataset.truth->tau);
    j["oracle"] = {{"reference", "dynamical_map_fixed_env"},
                   {"max_abs_deviation", max_abs(map.lam() - exact.lam())}};
  }
  return j;
}

Json tomo_bilinear(const Dataset& dataset) {
  const auto& records = dataset.records;
  const auto nine = nine_state_inputs();
  std::vector<std::string> used;
  for (const auto& in : nine) used.push_back(in.label);

  const TomographyRecord* mixed = nullptr;
  for (const auto& rec : records) {
    if (in_list(used, rec.label) || rec.input.dim() != 2) continue;
    if (bloch_vector(rec.input.matrix()).norm() < 1.0 - 1e-10 &&
        std::abs(rec.input.matrix().trace().real() - 1.0) < 1e-10) {
      mixed = &rec;
      break;
    }
  }
  const MElementTable table = solve_M_elements(records, mixed);
  if (mixed != nullptr) used.push_back(mixed->label);

  Json holdout = Json::array();
  for (const auto& rec : records) {
    if (in_list(used, rec.label)) continue;
    const BlochVector p = bloch_vector(rec.input.matrix());
    try {
      const Prediction pred = predict_output(table, p);
      Json h = holdout_entry(rec, pred.q.matrix());
      h["predicted_gamma"] = pred.gamma;
      h["observed_gamma"] = rec.gamma;
      holdout.push_back(std::move(h));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MixedWithoutUnitUnit && e.kind() != ErrorKind::ZeroGamma) throw;
      holdout.push_back({{"label", rec.label}, {"skipped", e.what()}});
    }
  }

  Json j;
  j["mode"] = "bilinear";
  j["inputs"] = used;
  j["elements"] = to_json(table);
  j["element_hermiticity_residual"] = table.hermiticity_residual();
  j["holdout"] = holdout;
  Json predicted = Json::array();
  for (const auto& h : holdout) {
    if (!h.contains("skipped")) predicted.push_back(h);
  }
  if (!predicted.empty()) j["max_holdout_bloch_deviation"] = max_holdout(predicted);
  if (dataset.truth && dataset.truth->kind == PrepKind::Projective) {
    const MElementTable exact = element_table_from_map(build_M_from_dynamics(dataset.truth->spec));
    j["oracle"] = {{"reference", "build_M_from_dynamics"},
                   {"max_element_deviation", table.max_abs_diff(exact)}};
  }
  return j;
}

}  // namespace procmap::cli
