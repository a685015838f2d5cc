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

#ifndef FOCKVOL_REPORT_HPP
#define FOCKVOL_REPORT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fockvol {

using ordered_json = nlohmann::ordered_json;

/// One verification check. value/expected/tolerance may be NaN when a check
/// is qualitative; inputs, outputs and thresholds hold everything needed to
/// interpret the record on its own.
struct ResultRecord {
    std::string suite;
    std::string check;
    bool pass = false;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    double runtime_ms = 0.0;
    ordered_json inputs = ordered_json::object();
    ordered_json outputs = ordered_json::object();
    ordered_json thresholds = ordered_json::object();

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(std::string_view name);

inline constexpr std::string_view kCsvHeader = "suite,check,status,value,expected,tolerance,runtime_ms";

/// Records are sorted by (suite, check) before writing.
std::string format_report(std::vector<ResultRecord> records, ReportFormat format);
/// Throws std::runtime_error naming the path when it cannot be written.
void emit_report(const std::vector<ResultRecord>& records, ReportFormat format, const std::filesystem::path& path);

/// Inverse of format_report. CSV carries only the header columns, so
/// inputs/outputs/thresholds come back empty from it.
std::vector<ResultRecord> parse_report(std::string_view text, ReportFormat format);

ordered_json to_json(const ResultRecord& r);
ResultRecord record_from_json(const ordered_json& j);

/// Encodes non-finite doubles as "inf"/"-inf"/"nan" strings so JSON round-trips.
ordered_json number_to_json(double v);
double number_from_json(const ordered_json& j);

}  // namespace fockvol

#endif  // FOCKVOL_REPORT_HPP
