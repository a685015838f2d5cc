/*
   Copyright 2026 The fockvol Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOCKVOL_SUITES_HPP
#define FOCKVOL_SUITES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fockvol/config.hpp"
#include "fockvol/report.hpp"

namespace fockvol {

struct SuiteOutcome {
    std::vector<ResultRecord> records;
    bool all_pass = true;
};

/// kernel, shifts, paper-example, dichotomy, corollary, theorem1.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". A failing or throwing
/// check is recorded and never stops the checks after it. Throws
/// std::invalid_argument for an unknown name.
SuiteOutcome run_suite(std::string_view name, const ExperimentConfig& config);

/// Runs each named suite in turn; an empty list gives an empty, passing outcome.
SuiteOutcome run_suites(const std::vector<std::string>& names, const ExperimentConfig& config);

/// The config's heuristic thresholds as echoed into every record.
ordered_json thresholds_json(const ExperimentConfig& config);

}  // namespace fockvol

#endif  // FOCKVOL_SUITES_HPP
