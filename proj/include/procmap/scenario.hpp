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

#pragma once

// Experiment descriptions and the data sets they produce.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "procmap/dynamics.hpp"
#include "procmap/record.hpp"

namespace procmap {

enum class Protocol { Linear4, Bilinear9, Verify12 };

enum class PrepKind {
  PinRotate,   // ideal pin to `reference` (environment left in tau), then a local rotation
  RotateOnly,  // local rotation of gamma0, assuming the system already sits in `reference`
  Projective,  // von Neumann measurement on gamma0
};

struct MixedInput {
  std::string label;
  BlochVector bloch;  // |bloch| < 1
};

struct Scenario {
  ProcessSpec spec;
  Protocol protocol = Protocol::Verify12;
  PrepKind kind = PrepKind::Projective;
  DensityMatrix reference = DensityMatrix::from_ket(ComplexVector::Unit(2, 0));
  std::optional<DensityMatrix> tau;
  /// Extra inputs prepared by the two-outcome filter measurement with Kraus
  /// operator (1 + p.sigma)/2. Projective scenarios only.
  std::vector<MixedInput> mixed_inputs;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
};

/// The labeled qubit inputs of a protocol: 1-, 1+, 2+, 3+ for Linear4, the
/// nine-state set for Bilinear9 and the twelve-state set for Verify12.
std::vector<LabeledInput> protocol_inputs(Protocol protocol);

/// The preparation procedure the scenario applies to each protocol input.
PreparationProcedure preparation_procedure(const Scenario& scenario);

/// The process a data set was simulated from, kept for oracle comparisons.
struct Truth {
  ProcessSpec spec;
  PrepKind kind = PrepKind::Projective;
  std::optional<DensityMatrix> tau;  // environment after an ideal pin
};

struct Dataset {
  std::map<std::string, std::string> metadata;
  std::vector<TomographyRecord> records;
  std::optional<Truth> truth;

  /// Throws MalformedInput when two records share a label.
  void validate() const;
};

/// Runs preparation and dynamics for every protocol input (plus the mixed
/// inputs), in protocol order. With `shots` set, Gamma and Q are replaced by
/// finite-sample estimates drawn from a generator seeded with `seed` (0 if
/// absent): binomial counts for each +- pair of preparation outcomes and
/// Pauli-axis tomography of each output with `shots` samples per axis.
/// Throws ZeroProbabilityOutcome when a preparation outcome cannot occur.
Dataset simulate(const Scenario& scenario);

}  // namespace procmap
