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

#include "procmap/json_io.hpp"

#include <cmath>
#include <limits>

#include "procmap/errors.hpp"

namespace procmap::io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) malformed(std::string(what) + " must be finite");
  return v;
}

Index positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    malformed(std::string(what) + " must be a positive integer");
  }
  return static_cast<Index>(j.get<long long>());
}

std::uint64_t unsigned_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

const std::string& text(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

Json matrix_array(const std::array<ComplexMatrix, 3>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(to_json(m));
  return arr;
}

std::array<ComplexMatrix, 3> matrix_triple(const Json& j, const char* key) {
  const Json& arr = field(j, key);
  if (!arr.is_array() || arr.size() != 3) malformed(std::string("'") + key + "' must hold 3 matrices");
  std::array<ComplexMatrix, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out[k] = matrix_from_json(arr[k]);
    if (out[k].rows() != 2 || out[k].cols() != 2) malformed(std::string("'") + key + "' entries must be 2x2");
  }
  return out;
}

DensityMatrix square_state(const Json& j, const char* what) {
  ComplexMatrix m = matrix_from_json(j);
  if (m.rows() != m.cols()) malformed(std::string(what) + " must be square");
  return DensityMatrix(std::move(m));
}

// Runs `f`, reporting physical-validity failures as malformed input.
template <typename F>
auto as_config(const char* what, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInput) throw;
    malformed(std::string(what) + ": " + e.what());
  }
}

Json truth_to_json(const Truth& t) {
  Json j;
  j["dimA"] = t.spec.dimA;
  j["dimB"] = t.spec.dimB;
  j["unitary"] = to_json(t.spec.u.matrix());
  j["gamma0"] = to_json(t.spec.gamma0.matrix());
  j["preparation"] = to_string(t.kind);
  if (t.tau) j["tau"] = to_json(t.tau->matrix());
  return j;
}

PrepKind prep_kind_from(const std::string& s) {
  if (s == "pin_rotate") return PrepKind::PinRotate;
  if (s == "rotate_only") return PrepKind::RotateOnly;
  if (s == "projective") return PrepKind::Projective;
  malformed("unknown preparation kind '" + s + "'");
}

Truth truth_from_json(const Json& j) {
  return as_config("truth", [&] {
    Truth t;
    const Index dimA = positive_int(field(j, "dimA"), "dimA");
    const Index dimB = positive_int(field(j, "dimB"), "dimB");
    t.spec = ProcessSpec{dimA, dimB, UnitaryOperator(matrix_from_json(field(j, "unitary")), 1e-10),
                         square_state(field(j, "gamma0"), "gamma0")};
    t.spec.validate();
    t.kind = prep_kind_from(text(field(j, "preparation"), "preparation"));
    if (j.contains("tau")) t.tau = square_state(j["tau"], "tau");
    return t;
  });
}

}  // namespace

std::string_view to_string(Protocol p) noexcept {
  switch (p) {
    case Protocol::Linear4: return "linear4";
    case Protocol::Bilinear9: return "bilinear9";
    case Protocol::Verify12: return "verify12";
  }
  return "verify12";
}

std::string_view to_string(PrepKind k) noexcept {
  switch (k) {
    case PrepKind::PinRotate: return "pin_rotate";
    case PrepKind::RotateOnly: return "rotate_only";
    case PrepKind::Projective: return "projective";
  }
  return "projective";
}

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      data.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Index rows = positive_int(field(j, "rows"), "rows");
  const Index cols = positive_int(field(j, "cols"), "cols");
  const Json& data = field(j, "data");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
    malformed("matrix data must hold rows*cols entries");
  }
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const Json& e = data[static_cast<std::size_t>(r * cols + c)];
      if (!e.is_array() || e.size() != 2) malformed("matrix entries must be [re, im] pairs");
      m(r, c) = Complex(number(e[0], "matrix entry"), number(e[1], "matrix entry"));
    }
  }
  return m;
}

Json to_json(const BlochVector& b) { return Json::array({b[0], b[1], b[2]}); }

BlochVector bloch_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) malformed("Bloch vector must have 3 components");
  BlochVector b;
  for (std::size_t k = 0; k < 3; ++k) b.a[k] = number(j[k], "Bloch component");
  return b;
}

Json to_json(const LinearProcessMap& map) {
  Json j;
  j["dim"] = map.dim();
  j["layout"] = "rrp-ssp";
  j["lam"] = to_json(map.lam());
  return j;
}

LinearProcessMap linear_map_from_json(const Json& j) {
  const Index dim = positive_int(field(j, "dim"), "dim");
  if (j.contains("layout") && text(j["layout"], "layout") != "rrp-ssp") {
    malformed("unsupported map layout '" + j["layout"].get<std::string>() + "'");
  }
  return as_config("linear map", [&] { return LinearProcessMap(dim, matrix_from_json(field(j, "lam"))); });
}

Json to_json(const MapDiagnostics& d) {
  Json j;
  Json ev = Json::array();
  for (Index k = 0; k < d.eigenvalues.size(); ++k) ev.push_back(d.eigenvalues(k));
  j["eigenvalues"] = std::move(ev);
  j["min_eigenvalue"] = d.min_eigenvalue;
  j["trace"] = d.trace;
  j["hermiticity_residual"] = d.hermiticity_residual;
  j["trace_preservation_residual"] = d.trace_preservation_residual;
  return j;
}

Json to_json(const BilinearProcessMap& m) {
  const Index n2 = m.dim() * m.dim();
  Json blocks = Json::array();
  for (Index row = 0; row < n2; ++row) {
    for (Index col = 0; col < n2; ++col) blocks.push_back(to_json(m.block(row, col)));
  }
  Json j;
  j["dim"] = m.dim();
  j["blocks"] = std::move(blocks);
  return j;
}

BilinearProcessMap bilinear_map_from_json(const Json& j) {
  const Index n = positive_int(field(j, "dim"), "dim");
  const Json& blocks = field(j, "blocks");
  const Index n2 = n * n;
  if (!blocks.is_array() || static_cast<Index>(blocks.size()) != n2 * n2) {
    malformed("bilinear map needs dim^4 blocks");
  }
  BilinearProcessMap m(n);
  for (Index row = 0; row < n2; ++row) {
    for (Index col = 0; col < n2; ++col) {
      const ComplexMatrix b = matrix_from_json(blocks[static_cast<std::size_t>(row * n2 + col)]);
      if (b.rows() != n || b.cols() != n) malformed("bilinear map blocks must be dim x dim");
      m.set_block(row, col, b);
    }
  }
  return m;
}

Json to_json(const MElementTable& t) {
  Json j;
  j["D"] = matrix_array(t.diag_plus);
  j["Y"] = matrix_array(t.linear);
  j["Z"] = matrix_array(t.cross);
  if (t.unit_unit) j["unit_unit"] = to_json(*t.unit_unit);
  return j;
}

MElementTable element_table_from_json(const Json& j) {
  MElementTable t;
  t.diag_plus = matrix_triple(j, "D");
  t.linear = matrix_triple(j, "Y");
  t.cross = matrix_triple(j, "Z");
  if (j.contains("unit_unit")) {
    t.unit_unit = matrix_from_json(j["unit_unit"]);
    if (t.unit_unit->rows() != 2 || t.unit_unit->cols() != 2) malformed("'unit_unit' must be 2x2");
  }
  return t;
}

Json to_json(const GeneralizedMeasurement& meas) {
  Json outcomes = Json::array();
  for (const OutcomeMap& o : meas.outcomes) {
    Json kraus = Json::array();
    for (const auto& k : o.kraus) kraus.push_back(to_json(k));
    Json oj;
    oj["weights"] = o.weights;
    oj["kraus"] = std::move(kraus);
    outcomes.push_back(std::move(oj));
  }
  Json j;
  j["outcomes"] = std::move(outcomes);
  return j;
}

GeneralizedMeasurement measurement_from_json(const Json& j) {
  const Json& outcomes = field(j, "outcomes");
  if (!outcomes.is_array() || outcomes.empty()) malformed("'outcomes' must be a non-empty array");
  GeneralizedMeasurement meas;
  for (const Json& oj : outcomes) {
    const Json& weights = field(oj, "weights");
    const Json& kraus = field(oj, "kraus");
    if (!weights.is_array() || !kraus.is_array() || weights.size() != kraus.size()) {
      malformed("each outcome needs matching 'weights' and 'kraus' arrays");
    }
    OutcomeMap o;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      o.weights.push_back(number(weights[k], "weight"));
      o.kraus.push_back(matrix_from_json(kraus[k]));
    }
    meas.outcomes.push_back(std::move(o));
  }
  as_config("measurement", [&] {
    meas.validate();
    return 0;
  });
  return meas;
}

Json to_json(const TomographyRecord& r) {
  Json j;
  j["label"] = r.label;
  j["input"] = to_json(r.input.matrix());
  j["output"] = to_json(r.output.matrix());
  j["gamma"] = r.gamma;
  return j;
}

TomographyRecord record_from_json(const Json& j) {
  TomographyRecord r{text(field(j, "label"), "label"), square_state(field(j, "input"), "input"),
                     square_state(field(j, "output"), "output"), 1.0};
  if (j.contains("gamma")) r.gamma = number(j["gamma"], "gamma");
  if (r.gamma < 0.0 || r.gamma > 1.0 + 1e-9) malformed("record '" + r.label + "' has gamma outside [0, 1]");
  if (r.input.dim() != r.output.dim()) malformed("record '" + r.label + "' mixes dimensions");
  return r;
}

Json to_json(const Dataset& d) {
  Json meta = Json::object();
  for (const auto& [k, v] : d.metadata) meta[k] = v;
  Json records = Json::array();
  for (const auto& r : d.records) records.push_back(to_json(r));
  Json j;
  j["metadata"] = std::move(meta);
  j["records"] = std::move(records);
  if (d.truth) j["truth"] = truth_to_json(*d.truth);
  return j;
}

Dataset dataset_from_json(const Json& j) {
  Dataset d;
  if (j.contains("metadata")) {
    const Json& meta = j["metadata"];
    if (!meta.is_object()) malformed("'metadata' must be an object");
    for (const auto& [k, v] : meta.items()) d.metadata[k] = text(v, "metadata value");
  }
  const Json& records = field(j, "records");
  if (!records.is_array()) malformed("'records' must be an array");
  for (const Json& rj : records) d.records.push_back(record_from_json(rj));
  if (j.contains("truth")) d.truth = truth_from_json(j["truth"]);
  d.validate();
  return d;
}

Json to_json(const VerificationReport& rep) {
  auto named = [](const std::vector<NamedResidual>& rs) {
    Json o = Json::object();
    for (const auto& r : rs) o[r.name] = r.value;
    return o;
  };
  Json gc = Json::object();
  for (std::size_t k = 0; k < rep.gamma_completeness.size(); ++k) {
    gc[std::to_string(k + 1)] = rep.gamma_completeness[k];
  }
  Json j;
  j["verdict"] = std::string(to_string(rep.verdict));
  j["thresholds"] = {{"linear", rep.tol_linear}, {"bilinear", rep.tol_bilinear},
                     {"gamma_warning", kGammaWarnThreshold}};
  j["max_linear_residual"] = rep.max_linear();
  j["max_bilinear_residual"] = rep.max_bilinear();
  j["linear_residuals"] = named(rep.linear_residuals);
  j["linear_bloch_residuals"] = named(rep.linear_bloch_residuals);
  j["bilinear_residuals"] = named(rep.bilinear_residuals);
  j["gamma_completeness"] = std::move(gc);
  j["warnings"] = rep.warnings;
  return j;
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) malformed("scenario must be a JSON object");
  return as_config("scenario", [&] {
    Scenario sc;
    const Index dimA = j.contains("dimA") ? positive_int(j["dimA"], "dimA") : 2;
    const Index dimB = j.contains("dimB") ? positive_int(j["dimB"], "dimB") : 2;
    if (dimA != 2) malformed("the tomography protocols need a qubit system (dimA = 2)");
    const Index d = dimA * dimB;

    std::optional<UnitaryOperator> u;
    if (j.contains("unitary")) {
      if (j.contains("hamiltonian")) malformed("give either 'unitary' or 'hamiltonian', not both");
      u = UnitaryOperator(matrix_from_json(j["unitary"]), 1e-10);
    } else {
      const Json& hj = field(j, "hamiltonian");
      ComplexMatrix h;
      if (hj.is_string()) {
        if (hj.get<std::string>() != "heisenberg") malformed("unknown hamiltonian '" + hj.get<std::string>() + "'");
        if (dimB != 2) malformed("the heisenberg hamiltonian needs dimB = 2");
        h = heisenberg_hamiltonian();
      } else {
        h = matrix_from_json(hj);
      }
      u = unitary_from_hamiltonian(h, number(field(j, "t"), "t"));
    }
    if (u->dim() != d) malformed("unitary must be (dimA*dimB) square");

    DensityMatrix gamma0 = DensityMatrix::maximally_mixed(d);
    if (j.contains("gamma0")) {
      const Json& gj = j["gamma0"];
      if (gj.contains("bloch_a")) {
        if (dimB != 2) malformed("the bloch_a/c23 shorthand needs dimB = 2");
        gamma0 = correlated_two_qubit_state(bloch_from_json(gj["bloch_a"]),
                                            gj.contains("c23") ? number(gj["c23"], "c23") : 0.0);
      } else {
        gamma0 = square_state(gj, "gamma0");
      }
    }
    gamma0.validate();
    sc.spec = ProcessSpec{dimA, dimB, *u, gamma0};
    sc.spec.validate();

    const Json& pj = field(j, "preparation");
    sc.kind = prep_kind_from(text(field(pj, "kind"), "preparation kind"));
    if (pj.contains("reference")) {
      const Json& rj = pj["reference"];
      sc.reference = rj.contains("bloch") ? qubit_state(bloch_from_json(rj["bloch"])) : square_state(rj, "reference");
      pure_state_vector(sc.reference);
    }
    if (pj.contains("tau")) {
      if (sc.kind != PrepKind::PinRotate) malformed("'tau' only applies to pin_rotate preparations");
      sc.tau = square_state(pj["tau"], "tau");
      sc.tau->validate();
      if (sc.tau->dim() != dimB) malformed("tau must be dimB x dimB");
    }
    if (pj.contains("mixed_inputs")) {
      if (sc.kind != PrepKind::Projective) malformed("'mixed_inputs' need a projective preparation");
      const Json& mj = pj["mixed_inputs"];
      if (!mj.is_array()) malformed("'mixed_inputs' must be an array");
      for (const Json& e : mj) {
        MixedInput mi{text(field(e, "label"), "label"), bloch_from_json(field(e, "bloch"))};
        if (!(mi.bloch.norm() < 1.0 - 1e-10)) malformed("mixed input '" + mi.label + "' needs |bloch| < 1");
        sc.mixed_inputs.push_back(std::move(mi));
      }
    }

    const std::string& proto = text(field(j, "protocol"), "protocol");
    if (proto == "linear4") {
      sc.protocol = Protocol::Linear4;
    } else if (proto == "bilinear9") {
      sc.protocol = Protocol::Bilinear9;
    } else if (proto == "verify12") {
      sc.protocol = Protocol::Verify12;
    } else {
      malformed("unknown protocol '" + proto + "'");
    }
    if (j.contains("shots") && !j["shots"].is_null()) {
      sc.shots = static_cast<std::uint64_t>(positive_int(j["shots"], "shots"));
    }
    if (j.contains("seed") && !j["seed"].is_null()) sc.seed = unsigned_int(j["seed"], "seed");
    return sc;
  });
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace procmap::io
