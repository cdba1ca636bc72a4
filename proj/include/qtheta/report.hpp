// Copyright 2026 The qtheta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <qtheta/verifier.hpp>

namespace qtheta {

/// One report object:
/// { "identity", "source", "order", "trials": [ { "binding", "effective_precision",
///   "status", "first_bad"?, "error"? } ], "pass", "millis" }
nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// JSON array of report objects, two-space indented, newline terminated.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// One line per identity plus indented lines for failing trials.
std::string report_to_text(const VerificationReport& report);

std::string summary_line(const VerifySummary& summary);

} // namespace qtheta
