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
#include <qtheta/report.hpp>

namespace qtheta {

nlohmann::ordered_json report_to_json(const VerificationReport& report)
{
    nlohmann::ordered_json trials = nlohmann::ordered_json::array();
    for (const auto& t : report.trials) {
        nlohmann::ordered_json binding = nlohmann::ordered_json::object();
        for (const auto& [name, value] : t.binding) {
            binding[name] = to_string(value);
        }
        nlohmann::ordered_json trial;
        trial["binding"] = binding;
        trial["effective_precision"] = t.effective_precision;
        trial["status"] = t.zero ? "zero" : "nonzero";
        if (t.first_bad) {
            trial["first_bad"] = {{"exp", t.first_bad->first}, {"coeff", to_string(t.first_bad->second)}};
        }
        if (t.error) {
            trial["error"] = *t.error;
        }
        trials.push_back(std::move(trial));
    }
    nlohmann::ordered_json out;
    out["identity"] = report.identity;
    out["source"] = report.source;
    out["order"] = report.order;
    out["trials"] = std::move(trials);
    out["pass"] = report.pass;
    out["millis"] = report.millis;
    return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
    }
    return arr.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report)
{
    Exponent least = 0;
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const Exponent p = report.trials[i].effective_precision;
        least = i == 0 ? p : std::min(least, p);
    }
    std::string out = std::string(report.pass ? "PASS " : "FAIL ") + report.identity + "  order "
                      + std::to_string(report.order) + ", precision " + std::to_string(least) + ", "
                      + std::to_string(report.trials.size()) + " trial(s), " + std::to_string(report.millis)
                      + " ms\n";
    if (report.pass) {
        return out;
    }
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& t = report.trials[i];
        std::string bind;
        for (const auto& [name, value] : t.binding) {
            bind += (bind.empty() ? "" : ", ") + name + "=" + to_string(value);
        }
        out += "    trial " + std::to_string(i) + " [" + bind + "]: ";
        if (t.error) {
            out += "error: " + *t.error;
        } else if (!t.zero) {
            out += "residual " + to_string(t.first_bad->second) + "*q^" + std::to_string(t.first_bad->first);
        } else if (t.effective_precision < report.order) {
            out += "zero only to O(q^" + std::to_string(t.effective_precision) + ")";
        } else {
            out += "ok";
        }
        out += "\n";
    }
    return out;
}

std::string summary_line(const VerifySummary& summary)
{
    return std::to_string(summary.passed) + " passed / " + std::to_string(summary.failed) + " failed";
}

} // namespace qtheta
