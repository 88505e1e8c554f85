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

#include "procmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "procmap/bilinear_tomo.hpp"
#include "procmap/errors.hpp"

namespace procmap {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Linear: return "Linear";
    case Verdict::Bilinear: return "Bilinear";
    case Verdict::Neither: return "Neither";
  }
  return "Neither";
}

double VerificationReport::max_linear() const noexcept {
  double worst = 0.0;
  for (const auto& r : linear_residuals) worst = std::max(worst, r.value);
  return worst;
}

double VerificationReport::max_bilinear() const noexcept {
  double worst = 0.0;
  for (const auto& r : bilinear_residuals) worst = std::max(worst, r.value);
  return worst;
}

std::vector<LabeledInput> twelve_state_inputs() {
  std::vector<LabeledInput> nine = nine_state_inputs();
  std::vector<LabeledInput> out;
  out.reserve(12);
  for (std::size_t i = 0; i < 6; ++i) out.push_back(nine[i]);
  for (std::size_t k = 0; k < 3; ++k) {
    const LabeledInput& plus = nine[6 + k];
    BlochVector minus;
    for (std::size_t j = 0; j < 3; ++j) minus.a[j] = -plus.bloch[j];
    out.push_back(plus);
    out.push_back(make_labeled_input(std::to_string(k + 4) + "-", minus));
  }
  return out;
}

namespace {

struct Term {
  double coef;
  const char* label;
};

struct Rule {
  const char* lhs;
  std::vector<Term> rhs;
};

const std::vector<Rule>& linear_rules() {
  static const std::vector<Rule> rules = [] {
    const double h = 1.0 / std::sqrt(2.0);
    // Q(k,+-) = (Q1+ + Q1-)/2 +- (1/sqrt2) * sum_i c_i Q(label_i)
    auto pair_rule = [h](const char* lhs, double sign, std::vector<Term> spread) {
      Rule r{lhs, {{0.5, "1+"}, {0.5, "1-"}}};
      for (Term t : spread) r.rhs.push_back({sign * h * t.coef, t.label});
      return r;
    };
    const std::vector<Term> four{{1.0, "2+"}, {-1.0, "1-"}};
    const std::vector<Term> five{{1.0, "3+"}, {-1.0, "1-"}};
    const std::vector<Term> six{{1.0, "2+"}, {1.0, "3+"}, {-1.0, "1+"}, {-1.0, "1-"}};
    return std::vector<Rule>{
        {"2-", {{1.0, "1+"}, {1.0, "1-"}, {-1.0, "2+"}}},
        {"3-", {{1.0, "1+"}, {1.0, "1-"}, {-1.0, "3+"}}},
        pair_rule("4+", 1.0, four),
        pair_rule("4-", -1.0, four),
        pair_rule("5+", 1.0, five),
        pair_rule("5-", -1.0, five),
        pair_rule("6+", 1.0, six),
        pair_rule("6-", -1.0, six),
    };
  }();
  return rules;
}

// Gamma Q(k-) = Gamma Q(k+) - (1/sqrt2) (Gamma Q(j+) - Gamma Q(j-) + Gamma Q(l+) - Gamma Q(l-)).
const std::vector<Rule>& bilinear_rules() {
  static const std::vector<Rule> rules = [] {
    const double h = 1.0 / std::sqrt(2.0);
    auto make = [h](const char* lhs, const char* plus, const char* jp, const char* jm,
                    const char* lp, const char* lm) {
      return Rule{lhs, {{1.0, plus}, {-h, jp}, {h, jm}, {-h, lp}, {h, lm}}};
    };
    return std::vector<Rule>{
        make("4-", "4+", "1+", "1-", "2+", "2-"),
        make("5-", "5+", "1+", "1-", "3+", "3-"),
        make("6-", "6+", "2+", "2-", "3+", "3-"),
    };
  }();
  return rules;
}

template <typename Extract>
ComplexMatrix rule_gap(std::span<const TomographyRecord> records, const Rule& rule, Extract extract) {
  ComplexMatrix gap = extract(require_record(records, rule.lhs));
  for (const Term& t : rule.rhs) gap -= t.coef * extract(require_record(records, t.label));
  return gap;
}

ComplexMatrix output_of(const TomographyRecord& r) { return r.output.matrix(); }
ComplexMatrix weighted_of(const TomographyRecord& r) { return r.weighted_output(); }

void require_qubit_records(std::span<const TomographyRecord> records) {
  for (const auto& r : records) {
    if (r.output.dim() != 2) {
      throw Error(ErrorKind::DimensionMismatch, "record '" + r.label + "' is not a qubit output");
    }
  }
}

}  // namespace

std::vector<NamedResidual> linear_sum_rule_residuals(std::span<const TomographyRecord> records) {
  require_qubit_records(records);
  std::vector<NamedResidual> out;
  for (const Rule& rule : linear_rules()) {
    out.push_back({rule.lhs, max_abs(rule_gap(records, rule, output_of))});
  }
  return out;
}

std::vector<NamedResidual> linear_sum_rule_bloch_residuals(std::span<const TomographyRecord> records) {
  require_qubit_records(records);
  std::vector<NamedResidual> out;
  for (const Rule& rule : linear_rules()) {
    const BlochVector b = bloch_vector(rule_gap(records, rule, output_of));
    out.push_back({rule.lhs, b.max_abs_diff(BlochVector{})});
  }
  return out;
}

std::vector<NamedResidual> bilinear_consistency_residuals(std::span<const TomographyRecord> records) {
  require_qubit_records(records);
  std::vector<NamedResidual> out;
  for (const Rule& rule : bilinear_rules()) {
    out.push_back({rule.lhs, max_abs(rule_gap(records, rule, weighted_of))});
  }
  return out;
}

std::array<double, 6> gamma_completeness(std::span<const TomographyRecord> records) {
  std::array<double, 6> out{};
  for (std::size_t k = 0; k < 6; ++k) {
    const std::string idx = std::to_string(k + 1);
    out[k] = require_record(records, idx + "+").gamma + require_record(records, idx + "-").gamma - 1.0;
  }
  return out;
}

VerificationReport classify(std::span<const TomographyRecord> records, double tol_linear,
                            double tol_bilinear) {
  VerificationReport rep;
  rep.tol_linear = tol_linear;
  rep.tol_bilinear = tol_bilinear;
  rep.linear_residuals = linear_sum_rule_residuals(records);
  rep.linear_bloch_residuals = linear_sum_rule_bloch_residuals(records);
  rep.bilinear_residuals = bilinear_consistency_residuals(records);
  rep.gamma_completeness = gamma_completeness(records);

  if (rep.max_linear() <= tol_linear) {
    rep.verdict = Verdict::Linear;
  } else if (rep.max_bilinear() <= tol_bilinear) {
    rep.verdict = Verdict::Bilinear;
  } else {
    rep.verdict = Verdict::Neither;
  }

  // Stochastic preparations report Gamma = 1 for every input; the pair test does not apply.
  const bool unit_gamma = std::all_of(records.begin(), records.end(),
                                      [](const TomographyRecord& r) { return r.gamma == 1.0; });
  for (std::size_t k = 0; k < rep.gamma_completeness.size() && !unit_gamma; ++k) {
    const double dev = rep.gamma_completeness[k];
    if (std::abs(dev) > kGammaWarnThreshold) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "gamma(%zu+) + gamma(%zu-) deviates from 1 by %.3g", k + 1,
                    k + 1, dev);
      rep.warnings.emplace_back(buf);
    }
  }
  return rep;
}

}  // namespace procmap
