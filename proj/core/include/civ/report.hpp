// Copyright 2026 The civ authors
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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace civ {

/// Outcome of one empirical check at one q.
///
/// kVerified / kFailed are assertion mode; kMeasured and kOutOfStatedRange
/// record findings outside a claim's stated q-range without failing a run.
struct LemmaReport {
  enum class Status {
    kVerified,
    kFailed,
    kMeasured,
    kOutOfStatedRange,
    kTimeout,
    kError,
  };

  std::string lemma;
  std::uint32_t q = 0;
  Status status = Status::kError;
  std::vector<std::string> witnesses;  // nonempty whenever status is kFailed
  nlohmann::json details;              // free-form per-check payload
  std::int64_t millis = 0;

  /// True unless this record should make an assertion-mode run fail.
  bool passed() const {
    return status == Status::kVerified || status == Status::kMeasured ||
           status == Status::kOutOfStatedRange;
  }

  static const char* status_name(Status s);
  nlohmann::json to_json() const;
};

}  // namespace civ
