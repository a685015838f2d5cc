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

// fockvol: command line front end.
//
//   fockvol matrix    --op Vg --g 0,1 --n 8
//   fockvol schatten  --op IgPsi --g 0,1 --psi 0,0.5 --p 2 --n 32,64,128
//   fockvol berezin   --g 0,1 --psi 0,0.5 [--w 1+2i ...]
//   fockvol criterion --g 0,1 --psi 0,0.5 --p 2 [--which C] [--mode probe]
//   fockvol classify  --g 0,1 --psi 2
//   fockvol compare   --g 0,1 --psi 0,1 --p 3
//   fockvol verify    --suite all --format json --out report.json
//
// Exit status: 0 success / all checks pass, 1 a check failed or a
// computation could not be completed, 2 invalid configuration.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fockvol/config.hpp"
#include "fockvol/criteria.hpp"
#include "fockvol/operators.hpp"
#include "fockvol/report.hpp"
#include "fockvol/spectra.hpp"
#include "fockvol/suites.hpp"

namespace {

using namespace fockvol;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct SharedFlags {
    std::string config_path;
    std::optional<double> alpha, p, tol;
    std::optional<std::string> g, psi, op, out, format;
    std::vector<std::size_t> ns;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
    cmd->add_option("--config", f.config_path, "YAML experiment configuration");
    cmd->add_option("--alpha", f.alpha, "Fock weight alpha > 0");
    cmd->add_option("--p", f.p, "Schatten exponent p > 0");
    cmd->add_option("--g", f.g, "symbol g as comma-separated coefficients, lowest degree first");
    cmd->add_option("--psi", f.psi, "symbol psi as comma-separated coefficients");
    cmd->add_option("--op", f.op, "operator kind: Vg Ig Mg IgPsi CgPsi VgUpperPsi CgUpperPsi");
    cmd->add_option("--n", f.ns, "truncation sizes")->delimiter(',');
    cmd->add_option("--tol", f.tol, "quadrature tolerance");
    cmd->add_option("--out", f.out, "output file (default stdout)");
    cmd->add_option("--format", f.format, "csv or json");
}

ExperimentConfig resolve(const SharedFlags& f) {
    ExperimentConfig c = f.config_path.empty() ? ExperimentConfig{} : load_config(f.config_path);
    if (f.alpha) c.alpha = *f.alpha;
    if (f.p) c.p = *f.p;
    if (f.tol) c.tol = *f.tol;
    if (f.g) c.g = *f.g;
    if (f.psi) c.psi = *f.psi;
    if (f.op) c.op = *f.op;
    if (f.out) c.out_path = *f.out;
    if (f.format) c.format = *f.format;
    if (!f.ns.empty()) c.ns = f.ns;
    validate(c);
    return c;
}

void write_output(const ExperimentConfig& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(c.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + c.out_path + " for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error("failed writing output file " + c.out_path);
}

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool json_format(const ExperimentConfig& c) { return c.format == "json"; }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

TransformWhich parse_which(const std::string& s) {
    if (s == "I" || s == "ForI") return TransformWhich::ForI;
    if (s == "C" || s == "ForC") return TransformWhich::ForC;
    throw ConfigError("--which", "must be I or C");
}

// ---------------------------------------------------------------- subcommands

int cmd_matrix(const ExperimentConfig& c, bool quadrature) {
    const auto pair = c.symbols();
    const FockParams params(c.alpha);
    const std::size_t N = c.ns.front();
    const auto T = quadrature ? build_matrix_quadrature(c.kind(), pair, params, N, c.tol)
                              : build_matrix(c.kind(), pair, params, N);
    auto part = [](double v) { return std::abs(v) < 1e-300 ? 0.0 : v; };
    if (json_format(c)) {
        ordered_json j;
        j["op"] = to_string(T.kind);
        j["N"] = N;
        j["leakage_flagged"] = T.leakage_flagged;
        j["column_leakage"] = T.column_leakage;
        ordered_json entries = ordered_json::array();
        for (std::size_t n = 0; n < N; ++n)
            for (std::size_t m = 0; m < N; ++m) {
                const complex e = T.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
                entries.push_back({m, n, part(e.real()), part(e.imag())});
            }
        j["entries"] = entries;
        write_output(c, dump(j));
        return 0;
    }
    std::ostringstream out;
    out << "m,n,re,im\n";
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t m = 0; m < N; ++m) {
            const complex e = T.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
            out << m << ',' << n << ',' << num(part(e.real())) << ',' << num(part(e.imag())) << '\n';
        }
    write_output(c, out.str());
    return 0;
}

ordered_json convergence_json(const ConvergenceReport& r) {
    ordered_json j;
    j["Ns"] = r.Ns;
    ordered_json sums = ordered_json::array(), norms = ordered_json::array(), largest = ordered_json::array();
    for (std::size_t i = 0; i < r.Ns.size(); ++i) {
        sums.push_back(number_to_json(r.partial_sums[i]));
        norms.push_back(number_to_json(r.partial_norms[i]));
        largest.push_back(number_to_json(r.largest_singular_values[i]));
    }
    j["partial_sums"] = sums;
    j["partial_norms"] = norms;
    j["largest_singular_values"] = largest;
    j["leakage_flagged"] = r.leakage_flagged;
    j["slope"] = number_to_json(r.slope);
    j["last_relative_increment"] = number_to_json(r.last_relative_increment);
    j["tail_exponent"] = number_to_json(r.tail_exponent);
    j["verdict"] = to_string(r.verdict);
    j["thresholds"] = {{"plateau", r.thresholds.plateau},
                       {"slope", r.thresholds.slope},
                       {"tail_decay_min", r.thresholds.tail_decay_min}};
    return j;
}

void convergence_rows(std::ostringstream& out, const std::string& prefix, const ConvergenceReport& r) {
    for (std::size_t i = 0; i < r.Ns.size(); ++i)
        out << prefix << r.Ns[i] << ',' << num(r.partial_sums[i]) << ',' << num(r.partial_norms[i]) << ','
            << num(r.largest_singular_values[i]) << ',' << (r.leakage_flagged[i] ? 1 : 0) << ','
            << to_string(r.verdict) << ',' << num(r.slope) << ',' << num(r.tail_exponent) << '\n';
}

constexpr const char* kConvergenceHeader =
    "N,partial_sum,partial_norm,largest_singular_value,leakage_flagged,verdict,slope,tail_exponent";

int cmd_schatten(const ExperimentConfig& c) {
    const auto rep = convergence_diagnose(c.kind(), c.symbols(), FockParams(c.alpha), SchattenOrder(c.p), c.ns,
                                          c.convergence_thresholds());
    if (json_format(c)) {
        auto j = convergence_json(rep);
        j["op"] = c.op;
        j["p"] = c.p;
        write_output(c, dump(j));
        return 0;
    }
    std::ostringstream out;
    out << kConvergenceHeader << '\n';
    convergence_rows(out, "", rep);
    write_output(c, out.str());
    return 0;
}

int cmd_compare(const ExperimentConfig& c) {
    const auto rep = companion_comparison(c.symbols(), FockParams(c.alpha), SchattenOrder(c.p), c.ns,
                                          c.convergence_thresholds());
    if (json_format(c)) {
        ordered_json j;
        j["I"] = convergence_json(rep.i_branch);
        j["V"] = convergence_json(rep.v_branch);
        j["C"] = convergence_json(rep.c_branch);
        j["CU"] = convergence_json(rep.cu_branch);
        j["i_implies_v"] = rep.i_implies_v;
        j["c_implies_cu"] = rep.c_implies_cu;
        write_output(c, dump(j));
        return rep.i_implies_v && rep.c_implies_cu ? 0 : kExitFail;
    }
    std::ostringstream out;
    out << "branch," << kConvergenceHeader << '\n';
    convergence_rows(out, "IgPsi,", rep.i_branch);
    convergence_rows(out, "VgUpperPsi,", rep.v_branch);
    convergence_rows(out, "CgPsi,", rep.c_branch);
    convergence_rows(out, "CgUpperPsi,", rep.cu_branch);
    write_output(c, out.str());
    return rep.i_implies_v && rep.c_implies_cu ? 0 : kExitFail;
}

int cmd_berezin(const ExperimentConfig& c, TransformWhich which, const std::vector<std::string>& points) {
    const auto pair = c.symbols();
    const FockParams params(c.alpha);
    if (!points.empty()) {
        std::vector<complex> ws;
        for (std::size_t i = 0; i < points.size(); ++i) {
            try {
                ws.push_back(parse_complex(points[i]));
            } catch (const ParseError& e) {
                throw ConfigError("--w[" + std::to_string(i) + "]", e.what());
            }
        }
        const auto grid = berezin_grid(which, pair, params, c.tol);
        std::ostringstream out;
        ordered_json rows = ordered_json::array();
        out << "w_re,w_im,value\n";
        for (complex w : ws) {
            const double b = berezin_transform(which, pair, params, w, grid);
            out << num(w.real()) << ',' << num(w.imag()) << ',' << num(b) << '\n';
            rows.push_back({{"w", format_complex(w)}, {"value", number_to_json(b)}});
        }
        write_output(c, json_format(c) ? dump(rows) : out.str());
        return 0;
    }
    const auto lp = berezin_lp_integral(which, pair, params, SchattenOrder(c.p), c.probe_schedule(), c.tol);
    if (json_format(c)) {
        ordered_json j;
        j["status"] = to_string(lp.integral.status);
        j["value"] = number_to_json(lp.integral.value);
        j["norm_estimate"] = number_to_json(lp.norm_estimate);
        j["error_estimate"] = number_to_json(lp.integral.error_estimate);
        ordered_json trace = ordered_json::array();
        for (double t : lp.integral.annulus_trace) trace.push_back(number_to_json(t));
        j["annulus_trace"] = trace;
        write_output(c, dump(j));
        return 0;
    }
    write_output(c, std::string("status,value,norm_estimate,error_estimate\n") + to_string(lp.integral.status) + ',' +
                        num(lp.integral.value) + ',' + num(lp.norm_estimate) + ',' +
                        num(lp.integral.error_estimate) + '\n');
    return 0;
}

int cmd_criterion(const ExperimentConfig& c, TransformWhich which, const std::string& mode_name) {
    CriterionMode mode;
    if (mode_name == "symbolic")
        mode = CriterionMode::Symbolic;
    else if (mode_name == "probe")
        mode = CriterionMode::Probe;
    else
        throw ConfigError("--mode", "must be symbolic or probe");
    const auto res = criterion_integral(which, c.symbols(), FockParams(c.alpha), SchattenOrder(c.p), mode,
                                        std::min(c.tol, 1e-12), c.probe_schedule());
    if (json_format(c)) {
        ordered_json j;
        j["which"] = to_string(which);
        j["mode"] = mode_name;
        j["status"] = to_string(res.status);
        j["value"] = number_to_json(res.value);
        j["error_estimate"] = number_to_json(res.error_estimate);
        write_output(c, dump(j));
        return 0;
    }
    write_output(c, std::string("status,value,error_estimate\n") + to_string(res.status) + ',' + num(res.value) +
                        ',' + num(res.error_estimate) + '\n');
    return 0;
}

int cmd_classify(const ExperimentConfig& c, TransformWhich which) {
    const auto v = classify_symbolic(c.symbols(), SchattenOrder(c.p), which);
    if (json_format(c)) {
        write_output(c, dump({{"status", to_string(v.status)}, {"reason", to_string(v.reason)}}));
        return 0;
    }
    write_output(c, "status,reason\n" + to_string(v.status) + ',' + to_string(v.reason) + '\n');
    return 0;
}

int cmd_verify(ExperimentConfig c, std::vector<std::string> suites, bool timing) {
    if (timing) c.timing = true;
    std::vector<std::string> names;
    for (auto& s : suites)
        if (!s.empty()) names.push_back(s);
    const auto& known = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] != "all" && std::find(known.begin(), known.end(), names[i]) == known.end())
            throw ConfigError("--suite[" + std::to_string(i) + "]", "unknown suite '" + names[i] + "'");
    const auto outcome = run_suites(names, c);
    const auto format = parse_report_format(c.format);
    if (c.out_path.empty())
        std::cout << format_report(outcome.records, format);
    else
        emit_report(outcome.records, format, c.out_path);
    int failed = 0;
    for (const auto& r : outcome.records) failed += !r.pass;
    std::cerr << outcome.records.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
    return outcome.all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock space operator laboratory"};
    app.require_subcommand(1);

    SharedFlags flags;
    bool quadrature = false, timing = false;
    std::string which = "I", mode = "symbolic";
    std::vector<std::string> points;
    std::vector<std::string> suites{"all"};

    auto* matrix = app.add_subcommand("matrix", "dump the truncated matrix as m,n,re,im");
    auto* schatten = app.add_subcommand("schatten", "partial Schatten sums and convergence verdict");
    auto* berezin = app.add_subcommand("berezin", "Berezin-type transform at points, or its L^{p/2} integral");
    auto* criterion = app.add_subcommand("criterion", "weighted L^p criterion integral");
    auto* classify = app.add_subcommand("classify", "symbolic Schatten class membership");
    auto* compare = app.add_subcommand("compare", "companion operator comparison");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    for (auto* cmd : {matrix, schatten, berezin, criterion, classify, compare, verify}) add_shared(cmd, flags);

    matrix->add_flag("--quadrature", quadrature, "build entries by planar quadrature");
    for (auto* cmd : {berezin, criterion, classify}) cmd->add_option("--which", which, "I or C");
    berezin->add_option("--w", points, "evaluation points (complex literals)");
    criterion->add_option("--mode", mode, "symbolic or probe");
    verify->add_option("--suite", suites, "suite names, or all")->delimiter(',');
    verify->add_flag("--timing", timing, "record wall times in runtime_ms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        const auto config = resolve(flags);
        if (*matrix) return cmd_matrix(config, quadrature);
        if (*schatten) return cmd_schatten(config);
        if (*berezin) return cmd_berezin(config, parse_which(which), points);
        if (*criterion) return cmd_criterion(config, parse_which(which), mode);
        if (*classify) return cmd_classify(config, parse_which(which));
        if (*compare) return cmd_compare(config);
        if (*verify) return cmd_verify(config, suites, timing);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitFail;
}
