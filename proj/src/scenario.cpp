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

#include "procmap/scenario.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "procmap/bilinear_tomo.hpp"
#include "procmap/errors.hpp"
#include "procmap/verify.hpp"

namespace procmap {

std::vector<LabeledInput> protocol_inputs(Protocol protocol) {
  switch (protocol) {
    case Protocol::Linear4: {
      const auto nine = nine_state_inputs();
      // 1-, 1+, 2+, 3+
      return {nine[1], nine[0], nine[2], nine[4]};
    }
    case Protocol::Bilinear9: return nine_state_inputs();
    case Protocol::Verify12: return twelve_state_inputs();
  }
  return twelve_state_inputs();
}

namespace {

UnitaryOperator rotation_to(const DensityMatrix& reference, const DensityMatrix& target) {
  return rotation_between(pure_state_vector(reference), pure_state_vector(target));
}

DensityMatrix environment_after_pin(const Scenario& sc) {
  if (sc.tau) return *sc.tau;
  return DensityMatrix(partial_trace_sys(sc.spec.gamma0.matrix(), sc.spec.dimA, sc.spec.dimB));
}

// Drops the sign to find the partner of "k+" / "k-".
std::string pair_key(const std::string& label) {
  if (label.size() >= 2 && (label.back() == '+' || label.back() == '-')) {
    return label.substr(0, label.size() - 1);
  }
  return {};
}

double binomial_fraction(std::mt19937_64& rng, std::uint64_t shots, double p) {
  std::binomial_distribution<std::uint64_t> dist(shots, std::clamp(p, 0.0, 1.0));
  return static_cast<double>(dist(rng)) / static_cast<double>(shots);
}

DensityMatrix sampled_output(std::mt19937_64& rng, std::uint64_t shots, const DensityMatrix& q) {
  const BlochVector exact = bloch_vector(q.matrix());
  BlochVector est;
  for (std::size_t j = 0; j < 3; ++j) {
    est.a[j] = 2.0 * binomial_fraction(rng, shots, 0.5 * (1.0 + exact[j])) - 1.0;
  }
  const double n = est.norm();
  if (n > 1.0) {
    for (double& c : est.a) c /= n;
  }
  return qubit_state(est);
}

void apply_finite_shots(const Scenario& sc, std::vector<TomographyRecord>& records) {
  const std::uint64_t shots = *sc.shots;
  std::mt19937_64 rng(sc.seed.value_or(0));
  const bool sampled_gamma = sc.kind == PrepKind::Projective;

  std::set<std::string> done;
  for (std::size_t i = 0; i < records.size(); ++i) {
    TomographyRecord& rec = records[i];
    if (sampled_gamma && !done.contains(rec.label)) {
      const std::string key = pair_key(rec.label);
      TomographyRecord* partner = nullptr;
      if (!key.empty()) {
        const std::string other = key + (rec.label.back() == '+' ? "-" : "+");
        for (auto& r : records) {
          if (r.label == other) partner = &r;
        }
      }
      const double f = binomial_fraction(rng, shots, rec.gamma);
      rec.gamma = f;
      done.insert(rec.label);
      if (partner != nullptr) {
        partner->gamma = 1.0 - f;
        done.insert(partner->label);
      }
    }
    rec.output = sampled_output(rng, shots, rec.output);
  }
  for (const auto& rec : records) {
    if (rec.gamma <= 0.0) {
      throw Error(ErrorKind::ZeroProbabilityOutcome,
                  "no preparation of '" + rec.label + "' in " + std::to_string(shots) + " shots");
    }
  }
}

}  // namespace

PreparationProcedure preparation_procedure(const Scenario& scenario) {
  const auto inputs = protocol_inputs(scenario.protocol);
  if (scenario.kind == PrepKind::Projective) {
    Projective p;
    for (const auto& in : inputs) p.projectors.push_back(in.projector.matrix());
    return p;
  }
  PinThenRotate p{scenario.reference, {}};
  for (const auto& in : inputs) p.rotations.push_back(rotation_to(scenario.reference, in.projector));
  return p;
}

void Dataset::validate() const {
  std::set<std::string> seen;
  for (const auto& r : records) {
    if (!seen.insert(r.label).second) {
      throw Error(ErrorKind::MalformedInput, "duplicate record label '" + r.label + "'");
    }
  }
}

Dataset simulate(const Scenario& sc) {
  const ProcessSpec& spec = sc.spec;
  spec.validate();
  const auto inputs = protocol_inputs(sc.protocol);

  Dataset ds;
  std::optional<DensityMatrix> pinned;
  if (sc.kind == PrepKind::PinRotate) {
    pinned = apply_pin_map(sc.reference, environment_after_pin(sc));
  }

  for (const auto& in : inputs) {
    PreparedState prepared = [&] {
      switch (sc.kind) {
        case PrepKind::PinRotate: return prepare_stochastic(*pinned, rotation_to(sc.reference, in.projector));
        case PrepKind::RotateOnly:
          return prepare_stochastic(spec.gamma0, rotation_to(sc.reference, in.projector));
        case PrepKind::Projective: break;
      }
      return prepare_projective(spec.gamma0, spec.dimA, spec.dimB, in.projector.matrix());
    }();
    ds.records.push_back({in.label, in.projector, run_process(spec, prepared), prepared.gamma});
  }

  for (const auto& mi : sc.mixed_inputs) {
    const DensityMatrix x = qubit_state(mi.bloch);
    const PreparedState prepared =
        prepare_generalized(spec.gamma0, spec.dimA, spec.dimB, filter_measurement(x.matrix()), 0);
    ds.records.push_back({mi.label, x, run_process(spec, prepared), prepared.gamma});
  }

  if (sc.shots) apply_finite_shots(sc, ds.records);
  ds.validate();

  ds.truth = Truth{spec, sc.kind, std::nullopt};
  if (sc.kind == PrepKind::PinRotate) ds.truth->tau = environment_after_pin(sc);
  return ds;
}

}  // namespace procmap
