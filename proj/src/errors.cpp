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

#include "procmap/errors.hpp"

namespace procmap {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NonUnitary: return "NonUnitary";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotAProjector: return "NotAProjector";
    case ErrorKind::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorKind::InvalidMeasurement: return "InvalidMeasurement";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::MissingRecord: return "MissingRecord";
    case ErrorKind::ZeroGamma: return "ZeroGamma";
    case ErrorKind::MixedWithoutUnitUnit: return "MixedWithoutUnitUnit";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace procmap
