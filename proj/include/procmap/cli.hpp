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

// The procmap command line: simulate, tomo, verify and demo.
//
// Exit codes: 0 success, 1 internal error, 2 malformed input or usage,
// 3 a preparation outcome with zero probability, 4 missing record labels,
// 5 inputs that do not form a frame.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "procmap/errors.hpp"
#include "procmap/json_io.hpp"

namespace procmap::cli {

struct Options {
  bool color = false;  // ANSI colors in diagnostics on `err`
};

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// human diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Options& options = {});

int exit_code(ErrorKind kind) noexcept;

/// Linear tomography of a data set: the map, its diagnostics, predictions
/// for records outside the frame and, for simulated ideal-pin data, the
/// deviation from the exact dynamical map.
io::Json tomo_linear(const Dataset& dataset);

/// Bi-linear tomography with the nine-state protocol, predictions for the
/// remaining records and, for simulated projective data, the deviation
/// from the element table of the exact M.
io::Json tomo_bilinear(const Dataset& dataset);

/// Adds simulation provenance to the data set's metadata.
Dataset simulate_with_metadata(const Scenario& scenario);

const std::vector<std::string>& demo_names();

/// The scenario file of a demo. Throws MalformedInput for unknown names.
io::Json demo_scenario(const std::string& name);

struct Bundle {
  std::vector<std::pair<std::string, io::Json>> files;  // file name, contents
  io::Json summary;                                     // also written as bundle.json
};

/// Builds every artifact of a demo in memory. `shots` and `seed`, when
/// given, are inserted into the demo scenarios.
Bundle build_demo(const std::string& name, std::optional<std::uint64_t> shots = std::nullopt,
                  std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace procmap::cli
