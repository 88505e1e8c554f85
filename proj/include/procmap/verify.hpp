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

// Linear versus bi-linear discrimination from twelve tomography records:
// six orthonormal pairs of pure inputs, the eight linear identities their
// outputs obey when the process is linear, and the three consistency
// equations that hold whenever the process is bi-linear.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "procmap/record.hpp"

namespace procmap {

enum class Verdict { Linear, Bilinear, Neither };

std::string_view to_string(Verdict v) noexcept;

struct NamedResidual {
  std::string name;  // label of the record on the left-hand side
  double value = 0.0;
};

inline constexpr double kDefaultTolLinear = 1e-6;
inline constexpr double kDefaultTolBilinear = 1e-6;
inline constexpr double kGammaWarnThreshold = 0.02;

struct VerificationReport {
  std::vector<NamedResidual> linear_residuals;        // max-abs matrix entry
  std::vector<NamedResidual> linear_bloch_residuals;  // max-abs Bloch component
  std::vector<NamedResidual> bilinear_residuals;
  std::array<double, 6> gamma_completeness{};  // Gamma(+) + Gamma(-) - 1 per pair
  Verdict verdict = Verdict::Neither;
  double tol_linear = kDefaultTolLinear;
  double tol_bilinear = kDefaultTolBilinear;
  std::vector<std::string> warnings;

  double max_linear() const noexcept;
  double max_bilinear() const noexcept;
};

/// The nine protocol inputs plus "4-", "5-" and "6-", ordered
/// 1+, 1-, 2+, 2-, ..., 6+, 6-.
std::vector<LabeledInput> twelve_state_inputs();

/// Rules for Q(2-), Q(3-), Q(4+), Q(4-), Q(5+), Q(5-), Q(6+), Q(6-) in that
/// order. Throws MissingRecord.
std::vector<NamedResidual> linear_sum_rule_residuals(std::span<const TomographyRecord> records);

/// Same rules measured on the Bloch vectors of the outputs.
std::vector<NamedResidual> linear_sum_rule_bloch_residuals(std::span<const TomographyRecord> records);

/// Residuals of the equations for Gamma Q of "4-", "5-" and "6-".
std::vector<NamedResidual> bilinear_consistency_residuals(std::span<const TomographyRecord> records);

std::array<double, 6> gamma_completeness(std::span<const TomographyRecord> records);

/// Linear when every sum rule holds within tol_linear; otherwise Bilinear
/// when every consistency equation holds within tol_bilinear; otherwise
/// Neither. Large Gamma completeness deviations add warnings only.
VerificationReport classify(std::span<const TomographyRecord> records,
                            double tol_linear = kDefaultTolLinear,
                            double tol_bilinear = kDefaultTolBilinear);

}  // namespace procmap
