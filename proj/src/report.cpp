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

#include "fockvol/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

namespace fockvol {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

namespace {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw std::runtime_error("malformed number '" + s + "' in report");
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

void sort_records(std::vector<ResultRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
        return std::tie(a.suite, a.check) < std::tie(b.suite, b.check);
    });
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

ordered_json number_to_json(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

double number_from_json(const ordered_json& j) {
    if (j.is_string()) return parse_number(j.get<std::string>());
    return j.get<double>();
}

ordered_json to_json(const ResultRecord& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    j["status"] = r.pass ? "pass" : "fail";
    j["value"] = number_to_json(r.value);
    j["expected"] = number_to_json(r.expected);
    j["tolerance"] = number_to_json(r.tolerance);
    j["runtime_ms"] = number_to_json(r.runtime_ms);
    j["inputs"] = r.inputs;
    j["outputs"] = r.outputs;
    j["thresholds"] = r.thresholds;
    return j;
}

ResultRecord record_from_json(const ordered_json& j) {
    ResultRecord r;
    r.suite = j.at("suite").get<std::string>();
    r.check = j.at("check").get<std::string>();
    r.pass = j.at("status").get<std::string>() == "pass";
    r.value = number_from_json(j.at("value"));
    r.expected = number_from_json(j.at("expected"));
    r.tolerance = number_from_json(j.at("tolerance"));
    r.runtime_ms = number_from_json(j.at("runtime_ms"));
    r.inputs = j.value("inputs", ordered_json::object());
    r.outputs = j.value("outputs", ordered_json::object());
    r.thresholds = j.value("thresholds", ordered_json::object());
    return r;
}

std::string format_report(std::vector<ResultRecord> records, ReportFormat format) {
    sort_records(records);
    if (format == ReportFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << csv_field(r.suite) << ',' << csv_field(r.check) << ',' << (r.pass ? "pass" : "fail") << ','
            << format_number(r.value) << ',' << format_number(r.expected) << ',' << format_number(r.tolerance)
            << ',' << format_number(r.runtime_ms) << '\n';
    }
    return out.str();
}

void emit_report(const std::vector<ResultRecord>& records, ReportFormat format, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open report file " + path.string() + " for writing");
    out << format_report(records, format);
    out.flush();
    if (!out) throw std::runtime_error("failed writing report file " + path.string());
}

std::vector<ResultRecord> parse_report(std::string_view text, ReportFormat format) {
    std::vector<ResultRecord> records;
    if (format == ReportFormat::Json) {
        const auto arr = ordered_json::parse(text);
        for (const auto& j : arr) records.push_back(record_from_json(j));
        return records;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("report CSV header mismatch");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 7) throw std::runtime_error("report CSV row has " + std::to_string(f.size()) + " fields");
        ResultRecord r;
        r.suite = f[0];
        r.check = f[1];
        r.pass = f[2] == "pass";
        r.value = parse_number(f[3]);
        r.expected = parse_number(f[4]);
        r.tolerance = parse_number(f[5]);
        r.runtime_ms = parse_number(f[6]);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace fockvol
