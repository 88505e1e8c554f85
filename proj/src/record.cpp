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

#include "procmap/record.hpp"

#include <algorithm>

#include "procmap/errors.hpp"

namespace procmap {

const TomographyRecord* find_record(std::span<const TomographyRecord> records,
                                    std::string_view label) noexcept {
  const auto it = std::find_if(records.begin(), records.end(),
                               [&](const TomographyRecord& r) { return r.label == label; });
  return it == records.end() ? nullptr : &*it;
}

const TomographyRecord& require_record(std::span<const TomographyRecord> records,
                                       std::string_view label) {
  const TomographyRecord* rec = find_record(records, label);
  if (rec == nullptr) {
    throw Error(ErrorKind::MissingRecord, "no record labeled '" + std::string(label) + "'");
  }
  return *rec;
}

LabeledInput make_labeled_input(std::string label, const BlochVector& bloch) {
  return LabeledInput{std::move(label), bloch, qubit_state(bloch)};
}

}  // namespace procmap
