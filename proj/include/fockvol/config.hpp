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

#ifndef FOCKVOL_CONFIG_HPP
#define FOCKVOL_CONFIG_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fockvol/criteria.hpp"
#include "fockvol/operators.hpp"
#include "fockvol/quadrature.hpp"
#include "fockvol/spectra.hpp"

namespace fockvol {

/// Configuration problem, tagged with the dotted path of the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// YAML layout:
//
//   alpha: 1          p: 2          op: IgPsi
//   g: "0,1"          psi: "0,0.5"  ns: [32, 64, 128]
//   quadrature: { tol: 1e-10 }
//   sweeps:     { a_values: [0.3, 0.5, 0.7], c_scalings: ["2", "5i"] }
//   output:     { path: "", format: csv, timing: false }
//   thresholds: { plateau: 1e-8, slope: 0.05, tail_decay_min: 0.25,
//                 annulus_trigger: 3, ratio_band: [1e-3, 1e3] }
//   probe:      { r0: 1, k_max: 8 }
struct ExperimentConfig {
    double alpha = 1.0;
    double p = 2.0;
    std::string op = "IgPsi";
    std::string g = "0,1";
    std::string psi = "0,0.5";
    std::vector<std::size_t> ns{32, 64, 128};
    double tol = 1e-10;
    std::vector<double> a_values{0.3, 0.5, 0.7};
    std::vector<std::string> c_scalings{"2", "5i"};
    std::string out_path;
    std::string format = "csv";
    /// Wall times go into reports only when set; otherwise runtime_ms is 0 so
    /// that identical configs give identical bytes.
    bool timing = false;
    double plateau = 1e-8;
    double slope = 0.05;
    double tail_decay_min = 0.25;
    int annulus_trigger = 3;
    double ratio_band_lo = 1e-3;
    double ratio_band_hi = 1e3;
    double probe_r0 = 1.0;
    int probe_k_max = 8;

    ConvergenceThresholds convergence_thresholds() const;
    ProbeSchedule probe_schedule() const;
    SymbolPair symbols() const;
    OperatorKind kind() const;
};

/// Throws ConfigError naming the first invalid field.
void validate(const ExperimentConfig& config);

ExperimentConfig parse_config(std::string_view yaml_text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ExperimentConfig& config);

}  // namespace fockvol

#endif  // FOCKVOL_CONFIG_HPP
