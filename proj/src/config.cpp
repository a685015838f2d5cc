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

#include "fockvol/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fockvol {

ConvergenceThresholds ExperimentConfig::convergence_thresholds() const {
    return {plateau, slope, tail_decay_min};
}

ProbeSchedule ExperimentConfig::probe_schedule() const {
    ProbeSchedule s;
    s.r0 = probe_r0;
    s.k_max = probe_k_max;
    s.trigger = annulus_trigger;
    return s;
}

SymbolPair ExperimentConfig::symbols() const {
    SymbolPair pair{parse_polynomial(g), std::nullopt};
    if (!psi.empty()) pair.psi = parse_polynomial(psi);
    return pair;
}

OperatorKind ExperimentConfig::kind() const { return parse_operator_kind(op); }

void validate(const ExperimentConfig& c) {
    auto positive = [](const char* field, double v) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(field, "must be a positive finite number");
    };
    positive("alpha", c.alpha);
    positive("p", c.p);
    positive("quadrature.tol", c.tol);
    positive("thresholds.plateau", c.plateau);
    positive("thresholds.slope", c.slope);
    positive("thresholds.tail_decay_min", c.tail_decay_min);
    positive("thresholds.ratio_band[0]", c.ratio_band_lo);
    positive("thresholds.ratio_band[1]", c.ratio_band_hi);
    positive("probe.r0", c.probe_r0);
    if (c.ratio_band_lo >= c.ratio_band_hi) throw ConfigError("thresholds.ratio_band", "lower bound must be below upper");
    if (c.annulus_trigger < 2) throw ConfigError("thresholds.annulus_trigger", "must be at least 2");
    if (c.probe_k_max < 4) throw ConfigError("probe.k_max", "must be at least 4");
    try {
        (void)c.kind();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("op", e.what());
    }
    if (requires_psi(c.kind()) && c.psi.empty()) throw ConfigError("psi", "operator " + c.op + " requires psi");
    try {
        (void)parse_polynomial(c.g);
    } catch (const ParseError& e) {
        throw ConfigError("g", e.what());
    }
    try {
        if (!c.psi.empty()) (void)parse_polynomial(c.psi);
    } catch (const ParseError& e) {
        throw ConfigError("psi", e.what());
    }
    for (std::size_t i = 0; i < c.c_scalings.size(); ++i) {
        try {
            (void)parse_complex(c.c_scalings[i]);
        } catch (const ParseError& e) {
            throw ConfigError("sweeps.c_scalings[" + std::to_string(i) + "]", e.what());
        }
    }
    for (std::size_t i = 0; i < c.ns.size(); ++i) {
        if (c.ns[i] < 2) throw ConfigError("ns[" + std::to_string(i) + "]", "truncation sizes must be at least 2");
        if (i > 0 && c.ns[i] <= c.ns[i - 1])
            throw ConfigError("ns[" + std::to_string(i) + "]", "truncation sizes must be strictly increasing");
    }
    if (c.format != "csv" && c.format != "json") throw ConfigError("output.format", "must be csv or json");
}

namespace {

using Allowed = std::set<std::string>;

void reject_unknown(const YAML::Node& node, const Allowed& allowed, const std::string& prefix) {
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key)) throw ConfigError(prefix + key, "unknown key");
    }
}

template <class T>
void read(const YAML::Node& node, const char* key, const std::string& path, T& out) {
    const auto child = node[key];
    if (!child) return;
    try {
        out = child.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(path, "has the wrong type");
    }
}

YAML::Node section(const YAML::Node& root, const char* key, const Allowed& allowed) {
    const auto node = root[key];
    if (!node) return node;
    if (!node.IsMap()) throw ConfigError(key, "must be a mapping");
    reject_unknown(node, allowed, std::string(key) + ".");
    return node;
}

}  // namespace

ExperimentConfig parse_config(std::string_view yaml_text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml_text));
    } catch (const YAML::Exception& e) {
        throw ConfigError("<document>", e.what());
    }
    ExperimentConfig c;
    if (!root || root.IsNull()) return c;
    if (!root.IsMap()) throw ConfigError("<document>", "top level must be a mapping");
    reject_unknown(root, {"alpha", "p", "op", "g", "psi", "ns", "quadrature", "sweeps", "output", "thresholds", "probe"},
                   "");

    read(root, "alpha", "alpha", c.alpha);
    read(root, "p", "p", c.p);
    read(root, "op", "op", c.op);
    read(root, "g", "g", c.g);
    read(root, "psi", "psi", c.psi);
    read(root, "ns", "ns", c.ns);

    if (auto q = section(root, "quadrature", {"tol"})) read(q, "tol", "quadrature.tol", c.tol);
    if (auto s = section(root, "sweeps", {"a_values", "c_scalings"})) {
        read(s, "a_values", "sweeps.a_values", c.a_values);
        read(s, "c_scalings", "sweeps.c_scalings", c.c_scalings);
    }
    if (auto o = section(root, "output", {"path", "format", "timing"})) {
        read(o, "path", "output.path", c.out_path);
        read(o, "format", "output.format", c.format);
        read(o, "timing", "output.timing", c.timing);
    }
    if (auto t = section(root, "thresholds",
                         {"plateau", "slope", "tail_decay_min", "annulus_trigger", "ratio_band"})) {
        read(t, "plateau", "thresholds.plateau", c.plateau);
        read(t, "slope", "thresholds.slope", c.slope);
        read(t, "tail_decay_min", "thresholds.tail_decay_min", c.tail_decay_min);
        read(t, "annulus_trigger", "thresholds.annulus_trigger", c.annulus_trigger);
        std::vector<double> band{c.ratio_band_lo, c.ratio_band_hi};
        read(t, "ratio_band", "thresholds.ratio_band", band);
        if (band.size() != 2) throw ConfigError("thresholds.ratio_band", "must have exactly two entries");
        c.ratio_band_lo = band[0];
        c.ratio_band_hi = band[1];
    }
    if (auto pr = section(root, "probe", {"r0", "k_max"})) {
        read(pr, "r0", "probe.r0", c.probe_r0);
        read(pr, "k_max", "probe.k_max", c.probe_k_max);
    }
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& c) {
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;
    out << YAML::Key << "alpha" << YAML::Value << c.alpha;
    out << YAML::Key << "p" << YAML::Value << c.p;
    out << YAML::Key << "op" << YAML::Value << c.op;
    out << YAML::Key << "g" << YAML::Value << YAML::DoubleQuoted << c.g;
    out << YAML::Key << "psi" << YAML::Value << YAML::DoubleQuoted << c.psi;
    out << YAML::Key << "ns" << YAML::Value << YAML::Flow << c.ns;
    out << YAML::Key << "quadrature" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "tol" << YAML::Value << c.tol;
    out << YAML::EndMap;
    out << YAML::Key << "sweeps" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "a_values" << YAML::Value << YAML::Flow << c.a_values;
    out << YAML::Key << "c_scalings" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& s : c.c_scalings) out << YAML::DoubleQuoted << s;
    out << YAML::EndSeq;
    out << YAML::EndMap;
    out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "path" << YAML::Value << YAML::DoubleQuoted << c.out_path;
    out << YAML::Key << "format" << YAML::Value << c.format;
    out << YAML::Key << "timing" << YAML::Value << c.timing;
    out << YAML::EndMap;
    out << YAML::Key << "thresholds" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "plateau" << YAML::Value << c.plateau;
    out << YAML::Key << "slope" << YAML::Value << c.slope;
    out << YAML::Key << "tail_decay_min" << YAML::Value << c.tail_decay_min;
    out << YAML::Key << "annulus_trigger" << YAML::Value << c.annulus_trigger;
    out << YAML::Key << "ratio_band" << YAML::Value << YAML::Flow << YAML::BeginSeq << c.ratio_band_lo
        << c.ratio_band_hi << YAML::EndSeq;
    out << YAML::EndMap;
    out << YAML::Key << "probe" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "r0" << YAML::Value << c.probe_r0;
    out << YAML::Key << "k_max" << YAML::Value << c.probe_k_max;
    out << YAML::EndMap;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

}  // namespace fockvol
