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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procmap/qstate.hpp"

namespace procmap {

/// One tomography observation: the prepared input P, the measured output Q
/// and the probability Gamma of the preparation outcome that produced it.
struct TomographyRecord {
  std::string label;
  DensityMatrix input;
  DensityMatrix output;
  double gamma = 1.0;

  /// Gamma * Q, the quantity the bi-linear process equation predicts.
  ComplexMatrix weighted_output() const { return gamma * output.matrix(); }
};

/// Returns the record with `label`, or nullptr.
const TomographyRecord* find_record(std::span<const TomographyRecord> records,
                                    std::string_view label) noexcept;

/// Like find_record but throws MissingRecord.
const TomographyRecord& require_record(std::span<const TomographyRecord> records,
                                       std::string_view label);

/// A projector together with the label the protocols refer to it by.
struct LabeledInput {
  std::string label;
  BlochVector bloch;
  DensityMatrix projector;
};

LabeledInput make_labeled_input(std::string label, const BlochVector& bloch);

}  // namespace procmap
