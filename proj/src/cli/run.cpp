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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "procmap/cli.hpp"

namespace procmap::cli {

using io::Json;

namespace {

struct Diagnostics {
  std::ostream& err;
  bool color;

  void error(const std::string& msg) const { emit("error", "\x1b[1;31m", msg); }
  void warning(const std::string& msg) const { emit("warning", "\x1b[33m", msg); }
  void note(const std::string& msg) const { emit("note", "\x1b[36m", msg); }

 private:
  void emit(const char* tag, const char* ansi, const std::string& msg) const {
    err << "procmap: ";
    if (color) {
      err << ansi << tag << "\x1b[0m";
    } else {
      err << tag;
    }
    err << ": " << msg << '\n';
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw std::runtime_error("cannot write '" + path.string() + "'");
}

// Writes JSON to --out when given, otherwise to stdout.
void emit_json(const Json& j, const std::string& out_path, std::ostream& out, const Diagnostics& diag) {
  const std::string text = io::dump(j);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    diag.note("wrote " + out_path);
  }
}

Dataset load_dataset(const std::string& path) { return io::dataset_from_json(io::parse(read_file(path))); }

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroProbabilityOutcome: return 3;
    case ErrorKind::MissingRecord: return 4;
    case ErrorKind::NotAFrame: return 5;
    default: return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
  const Diagnostics diag{err, options.color};

  CLI::App app{"Linear and bi-linear quantum process tomography", "procmap"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string mode = "linear";
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  double tol_linear = kDefaultTolLinear;
  double tol_bilinear = kDefaultTolBilinear;

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a scenario and write its data set");
  simulate_cmd->add_option("scenario", input, "Scenario JSON file")->required();
  simulate_cmd->add_option("--out", out_path, "Output file (default: stdout)");
  simulate_cmd->add_option("--shots", shots, "Finite-shot sampling, overrides the scenario")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed, "Generator seed, overrides the scenario");

  auto* tomo_cmd = app.add_subcommand("tomo", "Reconstruct a process map from a data set");
  tomo_cmd->add_option("dataset", input, "Data set JSON file")->required();
  tomo_cmd->add_option("--mode", mode, "linear or bilinear")
      ->check(CLI::IsMember({"linear", "bilinear"}));
  tomo_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Classify a twelve-record data set");
  verify_cmd->add_option("dataset", input, "Data set JSON file")->required();
  verify_cmd->add_option("--tol-linear", tol_linear, "Threshold for the linear sum rules")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tol-bilinear", tol_bilinear, "Threshold for the bi-linear equations")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* demo_cmd = app.add_subcommand("demo", "Write a demo bundle");
  demo_cmd->add_option("name", input, "stochastic-heisenberg, measurement-correlated or imperfect-pin")
      ->required();
  demo_cmd->add_option("--out", out_path, "Bundle directory (default: ./procmap-NAME)");
  demo_cmd->add_option("--shots", shots, "Finite-shot sampling")->check(CLI::PositiveNumber);
  demo_cmd->add_option("--seed", seed, "Generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    if (code == 0) return 0;
    diag.error(cli_err.str().empty() ? e.what() : cli_err.str().substr(0, cli_err.str().find('\n')));
    return 2;
  }

  try {
    if (*simulate_cmd) {
      Scenario sc = io::scenario_from_json(io::parse(read_file(input)));
      if (shots) sc.shots = shots;
      if (seed) sc.seed = seed;
      emit_json(io::to_json(simulate_with_metadata(sc)), out_path, out, diag);
    } else if (*tomo_cmd) {
      const Dataset ds = load_dataset(input);
      emit_json(mode == "bilinear" ? tomo_bilinear(ds) : tomo_linear(ds), out_path, out, diag);
    } else if (*verify_cmd) {
      const VerificationReport rep = classify(load_dataset(input).records, tol_linear, tol_bilinear);
      for (const auto& w : rep.warnings) diag.warning(w);
      emit_json(io::to_json(rep), out_path, out, diag);
    } else if (*demo_cmd) {
      const Bundle bundle = build_demo(input, shots, seed);
      const std::filesystem::path dir = out_path.empty() ? "procmap-" + input : out_path;
      std::filesystem::create_directories(dir);
      for (const auto& [file, contents] : bundle.files) write_file(dir / file, io::dump(contents));
      write_file(dir / "bundle.json", io::dump(bundle.summary));
      diag.note("wrote " + std::to_string(bundle.files.size() + 1) + " files to " + dir.string());
      out << io::dump(bundle.summary);
    }
  } catch (const Error& e) {
    diag.error(std::string(to_string(e.kind())) + ": " + e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    diag.error(e.what());
    return 1;
  }
  return 0;
}

}  // namespace procmap::cli
