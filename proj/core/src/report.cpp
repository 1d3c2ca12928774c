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

#include "civ/report.hpp"

namespace civ {

const char* LemmaReport::status_name(Status s) {
  switch (s) {
    case Status::kVerified:
      return "verified";
    case Status::kFailed:
      return "failed";
    case Status::kMeasured:
      return "measured";
    case Status::kOutOfStatedRange:
      return "out-of-stated-range";
    case Status::kTimeout:
      return "timeout";
    case Status::kError:
      return "error";
  }
  return "unknown";
}

nlohmann::json LemmaReport::to_json() const {
  return nlohmann::json{{"lemma", lemma},
                        {"q", q},
                        {"status", status_name(status)},
                        {"witnesses", witnesses},
                        {"details", details},
                        {"millis", millis}};
}

}  // namespace civ
