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

// JSON encodings. Matrices are {"rows", "cols", "data": [[re, im], ...]}
// in row-major order; every parser throws MalformedInput on bad shape or type.

#include <string>

#include <json.hpp>

#include "procmap/bilinear_tomo.hpp"
#include "procmap/linear_tomo.hpp"
#include "procmap/prep.hpp"
#include "procmap/scenario.hpp"
#include "procmap/verify.hpp"

namespace procmap::io {

using Json = nlohmann::ordered_json;

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const BlochVector& b);
BlochVector bloch_from_json(const Json& j);

Json to_json(const LinearProcessMap& map);
LinearProcessMap linear_map_from_json(const Json& j);

Json to_json(const MapDiagnostics& d);

Json to_json(const BilinearProcessMap& m);
BilinearProcessMap bilinear_map_from_json(const Json& j);

Json to_json(const MElementTable& t);
MElementTable element_table_from_json(const Json& j);

Json to_json(const GeneralizedMeasurement& meas);
GeneralizedMeasurement measurement_from_json(const Json& j);

Json to_json(const TomographyRecord& r);
TomographyRecord record_from_json(const Json& j);

Json to_json(const Dataset& d);
Dataset dataset_from_json(const Json& j);

Json to_json(const VerificationReport& rep);

/// Scenario files:
///   {"dimA", "dimB", "hamiltonian": matrix | "heisenberg", "t",
///    or "unitary": matrix,
///    "gamma0": matrix | {"bloch_a": [a1, a2, a3], "c23"},
///    "preparation": {"kind": "pin_rotate" | "rotate_only" | "projective",
///                    "reference": matrix | {"bloch": [...]}, "tau": matrix,
///                    "mixed_inputs": [{"label", "bloch"}]},
///    "protocol": "linear4" | "bilinear9" | "verify12", "shots", "seed"}
/// Physical invalidity (non-unitary U, non-positive gamma0, ...) is
/// reported as MalformedInput as well.
Scenario scenario_from_json(const Json& j);

/// Parses text, mapping syntax errors to MalformedInput.
Json parse(const std::string& text);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

std::string_view to_string(Protocol p) noexcept;
std::string_view to_string(PrepKind k) noexcept;

}  // namespace procmap::io
