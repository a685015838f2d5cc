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

#include "fockvol/suites.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "fockvol/criteria.hpp"
#include "fockvol/fock.hpp"
#include "fockvol/operators.hpp"
#include "fockvol/polynomial.hpp"
#include "fockvol/quadrature.hpp"
#include "fockvol/spectra.hpp"

namespace fockvol {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

using Body = std::function<void(ResultRecord&)>;

class Suite {
public:
    Suite(std::string name, const ExperimentConfig& config, SuiteOutcome& out)
        : name_(std::move(name)), config_(config), out_(out) {}

    void check(const std::string& check_name, const Body& body) {
        ResultRecord r;
        r.suite = name_;
        r.check = check_name;
        r.value = r.expected = r.tolerance = kNaN;
        r.thresholds = thresholds_json(config_);
        const auto start = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.outputs["error"] = e.what();
        }
        if (config_.timing)
            r.runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out_.all_pass = out_.all_pass && r.pass;
        out_.records.push_back(std::move(r));
    }

    const ExperimentConfig& config() const { return config_; }

private:
    std::string name_;
    const ExperimentConfig& config_;
    SuiteOutcome& out_;
};

double rel_err(double value, double expected) {
    if (expected == 0.0) return std::abs(value);
    return std::abs(value - expected) / std::abs(expected);
}

// value = observed error, expected = 0, pass when the error is within tol
void set_error(ResultRecord& r, double err, double tol) {
    r.value = err;
    r.expected = 0.0;
    r.tolerance = tol;
    r.pass = err <= tol;
}

void set_close(ResultRecord& r, double value, double expected, double rel_tol) {
    r.value = value;
    r.expected = expected;
    r.tolerance = rel_tol;
    r.pass = rel_err(value, expected) <= rel_tol;
}

void set_count(ResultRecord& r, int agreeing, int total) {
    r.value = agreeing;
    r.expected = total;
    r.tolerance = 0.0;
    r.pass = agreeing == total;
}

ordered_json json_list(const std::vector<double>& v) {
    ordered_json j = ordered_json::array();
    for (double x : v) j.push_back(number_to_json(x));
    return j;
}

ordered_json report_json(const ConvergenceReport& c) {
    ordered_json j;
    j["Ns"] = c.Ns;
    j["partial_sums"] = json_list(c.partial_sums);
    j["largest_singular_values"] = json_list(c.largest_singular_values);
    j["slope"] = number_to_json(c.slope);
    j["last_relative_increment"] = number_to_json(c.last_relative_increment);
    j["tail_exponent"] = number_to_json(c.tail_exponent);
    j["leakage_flagged"] = std::any_of(c.leakage_flagged.begin(), c.leakage_flagged.end(), [](bool b) { return b; });
    j["verdict"] = to_string(c.verdict);
    return j;
}

ordered_json pair_json(const SymbolPair& pair) {
    ordered_json j;
    j["g"] = format_polynomial(pair.g);
    j["psi"] = pair.psi ? format_polynomial(*pair.psi) : "";
    return j;
}

SymbolPair symbols(const char* g, const char* psi) { return {parse_polynomial(g), parse_polynomial(psi)}; }

SymbolPair affine_pair(const ComplexPolynomial& g, complex a) { return {g, ComplexPolynomial{0.0, a}}; }

// sum_{n=1}^{last} n^-s, smallest terms first
double zeta_partial(double s, std::size_t last) {
    long double acc = 0.0L;
    for (std::size_t n = last; n >= 1; --n) acc += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    return static_cast<double>(acc);
}

// 2 pi int_0^inf f(r) r dr by a double-exponential rule on the half line.
double radial_oracle(const std::function<double(double)>& f) {
    boost::math::quadrature::exp_sinh<double> rule;
    return 2.0 * kPi * rule.integrate([&](double r) { return f(r) * r; }, 1e-14);
}

// The 12 symbol pairs g in {0, 1, z, z^2}, psi in {z/2, z, 2z}.
std::vector<SymbolPair> dichotomy_grid() {
    std::vector<SymbolPair> grid;
    for (const char* g : {"0", "1", "0,1", "0,0,1"})
        for (const char* psi : {"0,0.5", "0,1", "0,2"}) grid.push_back(symbols(g, psi));
    return grid;
}

const std::vector<std::size_t> kRigidityNs{32, 64, 128, 256};

// ---------------------------------------------------------------- kernel

void kernel_suite(Suite& s) {
    const FockParams unit(1.0);
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto random_point = [&](double radius) {
        complex w;
        do {
            w = complex(unif(rng), unif(rng));
        } while (std::abs(w) > 1.0);
        return radius * w;
    };

    s.check("basis_eval_examples", [&](ResultRecord& r) {
        double err = std::abs(basis_eval(0, FockParams(2.5), complex(3, -1)) - 1.0);
        err = std::max(err, std::abs(basis_eval(1, FockParams(4.0), 1.0) - 2.0));
        err = std::max(err, std::abs(basis_eval(2, unit, complex(0, 2)) + 2.0 * std::numbers::sqrt2));
        set_error(r, err, 1e-12);
    });

    s.check("kernel_eval_examples", [&](ResultRecord& r) {
        double err = std::abs(kernel_eval(unit, 0.0, complex(2, 3)) - 1.0);
        err = std::max(err, std::abs(kernel_eval(unit, complex(0, 1), complex(0, 1)) - std::numbers::e));
        err = std::max(err, std::abs(normalized_kernel_eval(unit, 1.0, 0.0) - std::exp(-0.5)));
        const auto K = truncated_kernel(unit, complex(1, 1), 40);
        err = std::max(err, std::abs(poly_inner_product(ComplexPolynomial::monomial(2), K, unit) - complex(0, 2)));
        set_error(r, err, 1e-12);
    });

    s.check("inner_product_examples", [&](ResultRecord& r) {
        const auto z = ComplexPolynomial::monomial(1);
        const auto z2 = ComplexPolynomial::monomial(2);
        double err = std::abs(poly_inner_product(ComplexPolynomial::constant(1.0), z, FockParams(3.0)));
        err = std::max(err, std::abs(poly_inner_product(z, z, unit) - 1.0));
        err = std::max(err, std::abs(poly_inner_product(z2, z2, FockParams(2.0)) - 0.5));
        const auto e = expand_in_basis(poly_scale(z, 3.0), FockParams(4.0), 3);
        err = std::max(err, std::abs(e.entries[1] - 1.5));
        set_error(r, err, 1e-14);
    });

    s.check("parseval", [&](ResultRecord& r) {
        std::uniform_int_distribution<int> degree(0, 16);
        double worst = 0.0;
        for (double alpha : {0.5, 1.0, 3.0}) {
            const FockParams params(alpha);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<complex> c(static_cast<std::size_t>(degree(rng)) + 1);
                for (auto& x : c) x = complex(unif(rng), unif(rng));
                const ComplexPolynomial P(c);
                const double lhs = expand_in_basis(P, params, 17).squared_norm();
                const double rhs = poly_inner_product(P, P, params).real();
                worst = std::max(worst, rel_err(lhs, rhs));
            }
        }
        r.inputs["max_degree"] = 16;
        set_error(r, worst, 1e-10);
    });

    s.check("kernel_partial_sums", [&](ResultRecord& r) {
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const complex w = random_point(2.0);
            std::vector<double> terms;
            for (std::size_t n = 0; n < 64; ++n) terms.push_back(std::norm(basis_eval(n, unit, w)));
            std::reverse(terms.begin(), terms.end());
            worst = std::max(worst, std::abs(pairwise_sum(terms) - std::exp(std::norm(w))));
        }
        r.inputs["terms"] = 64;
        r.inputs["max_abs_w"] = 2.0;
        set_error(r, worst, 1e-10);
    });

    s.check("reproducing_property", [&](ResultRecord& r) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const complex w = random_point(2.0);
            const auto K = truncated_kernel(unit, w, 64);
            for (std::size_t m = 0; m <= 10; ++m) {
                const complex got = poly_inner_product(ComplexPolynomial::monomial(m), K, unit);
                const complex want = std::pow(w, static_cast<int>(m));
                worst = std::max(worst, std::abs(got - want) / std::abs(want));
            }
        }
        set_error(r, worst, 1e-9);
    });

    s.check("dbar_kernel_series", [&](ResultRecord& r) {
        double worst = std::max(rel_err(dbar_kernel_norm_sq(unit, 0.0), 1.0),
                                rel_err(dbar_kernel_norm_sq(unit, complex(0.6, 0.8)), 2.0 * std::numbers::e));
        for (int i = 0; i < 20; ++i) {
            const complex w = random_point(2.0);
            worst = std::max(worst, rel_err(dbar_kernel_norm_sq_series(unit, w, 80), dbar_kernel_norm_sq(unit, w)));
        }
        r.inputs["terms"] = 80;
        set_error(r, worst, 1e-10);
    });

    s.check("dbar_kernel_asymptotic", [&](ResultRecord& r) {
        const double alpha = s.config().alpha;
        const FockParams params(alpha);
        const double w = 20.0;
        const double ratio = dbar_kernel_norm_sq(params, w) / (w * w * std::exp(alpha * w * w));
        r.inputs["abs_w"] = w;
        set_close(r, ratio, alpha * alpha, 0.01);
    });

    s.check("normalized_kernel_unit_norm", [&](ResultRecord& r) {
        const complex w(1.0, -0.5);
        const auto grid = build_grid(1.0, 1e-13, 0);
        auto f = [&](complex z) {
            return std::exp(log_normalized_kernel_sq(unit, w, z) - std::norm(z)) / kPi;
        };
        set_close(r, integrate_plane(f, grid, w).value, 1.0, 1e-10);
    });

    s.check("quadrature.gaussian", [&](ResultRecord& r) {
        const auto grid = build_grid(1.0, 1e-13, 0);
        const auto res = integrate_plane([](complex z) { return std::exp(-std::norm(z)); }, grid);
        r.outputs["nodes"] = grid.size();
        r.value = res.value;
        r.expected = kPi;
        r.tolerance = 1e-12;
        r.pass = std::abs(res.value - kPi) <= 1e-12;
    });

    s.check("quadrature.gamma_fixtures", [&](ResultRecord& r) {
        double worst = 0.0;
        for (double beta : {0.05, 0.75, 1.0, 3.0}) {
            for (int m = 0; m <= 6; ++m) {
                const auto grid = build_grid(beta, 1e-12, 2 * m);
                auto f = [&](complex z) { return std::pow(std::norm(z), m) * std::exp(-beta * std::norm(z)); };
                const double want = kPi * std::tgamma(m + 1.0) / std::pow(beta, m + 1.0);
                worst = std::max(worst, rel_err(integrate_plane(f, grid).value, want));
            }
        }
        set_error(r, worst, 1e-10);
    });

    s.check("quadrature.angular", [&](ResultRecord& r) {
        const auto grid = build_grid(1.0, 1e-13, 2);
        const auto res = integrate_plane([](complex z) { return z.real() * z.real() * std::exp(-std::norm(z)); }, grid);
        r.value = res.value;
        r.expected = kPi / 2.0;
        r.tolerance = 1e-10;
        r.pass = std::abs(res.value - kPi / 2.0) <= 1e-10;
    });

    s.check("quadrature.probe_gaussian", [&](ResultRecord& r) {
        const auto res = probe_divergence([](complex z) { return std::exp(-std::norm(z)); }, s.config().probe_schedule());
        r.outputs["status"] = to_string(res.status);
        r.outputs["annulus_trace"] = json_list(res.annulus_trace);
        set_close(r, res.value, kPi, 1e-10);
        r.pass = r.pass && res.finite();
    });

    auto divergent_check = [&](const char* name, double (*f)(complex)) {
        s.check(name, [&, f](ResultRecord& r) {
            const auto res = probe_divergence(f, s.config().probe_schedule());
            r.outputs["status"] = to_string(res.status);
            r.outputs["annulus_trace"] = json_list(res.annulus_trace);
            r.pass = res.status == IntegralStatus::Divergent;
        });
    };
    divergent_check("quadrature.divergent_constant", [](complex) { return 1.0; });
    divergent_check("quadrature.divergent_inverse_square",
                    [](complex z) { return 1.0 / ((1.0 + std::abs(z)) * (1.0 + std::abs(z))); });
}

// ---------------------------------------------------------------- shifts

void shifts_suite(Suite& s) {
    const FockParams unit(1.0);

    s.check("shift_oracle_examples", [&](ResultRecord& r) {
        double err = rel_err(shift_weights_oracle(1, 1.0, 1.0, unit, 1), std::numbers::sqrt2 / 2.0);
        err = std::max(err, rel_err(shift_weights_oracle(1, 1.0, 0.5, unit, 3), 0.375));
        err = std::max(err, shift_weights_oracle(2, 0.0, 0.5, unit, 4));
        set_error(r, err, 1e-14);
    });

    s.check("shift_oracle_singular_values", [&](ResultRecord& r) {
        const std::size_t N = 64;
        double worst = 0.0;
        bool structured = true;
        for (std::size_t k : {1u, 2u}) {
            for (complex a : {complex(0.3), complex(0.5), complex(0.0, 0.5)}) {
                const auto T = build_matrix(OperatorKind::IgPsi, affine_pair(ComplexPolynomial::monomial(k), a), unit, N);
                std::vector<double> want(N, 0.0);
                for (std::size_t n = 0; n + k < N; ++n) want[n] = shift_weights_oracle(k, 1.0, a, unit, n);
                for (std::size_t n = 0; n < N; ++n) {
                    for (std::size_t m = 0; m < N; ++m) {
                        const double mag = std::abs(T.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)));
                        if (m == n + k && n >= 1) {
                            worst = std::max(worst, rel_err(mag, want[n]));
                        } else if (mag != 0.0) {
                            structured = false;
                        }
                    }
                }
                std::sort(want.begin(), want.end(), std::greater<>());
                const auto got = singular_values(T).values;
                for (std::size_t i = 0; i < N; ++i) {
                    if (want[i] == 0.0)
                        structured = structured && got[i] == 0.0;
                    else
                        worst = std::max(worst, rel_err(got[i], want[i]));
                }
            }
        }
        r.inputs["N"] = N;
        r.outputs["one_entry_per_column"] = structured;
        set_error(r, worst, 1e-10);
        r.pass = r.pass && structured;
    });

    s.check("matrix_examples", [&](ResultRecord& r) {
        const auto A = build_matrix(OperatorKind::IgPsi, symbols("0,1", "0,0.5"), unit, 4);
        const auto V = build_matrix(OperatorKind::Vg, symbols("0,1", ""), unit, 3);
        double err = std::abs(std::abs(A.matrix(2, 1)) - std::sqrt(2.0) / 2.0);
        err = std::max(err, std::abs(std::abs(A.matrix(3, 2)) - std::sqrt(3.0) / 3.0));
        err = std::max(err, A.matrix.col(0).cwiseAbs().maxCoeff());
        err = std::max(err, std::abs(V.matrix(1, 0) - 1.0));
        err = std::max(err, std::abs(V.matrix(2, 1) - std::sqrt(0.5)));
        set_error(r, err, 1e-12);
    });

    s.check("vz_singular_values", [&](ResultRecord& r) {
        const std::size_t N = 256;
        const auto got = singular_values(build_matrix(OperatorKind::Vg, symbols("0,1", ""), unit, N)).values;
        double worst = std::abs(got[N - 1]);
        for (std::size_t n = 0; n + 1 < N; ++n)
            worst = std::max(worst, std::abs(got[n] - 1.0 / std::sqrt(static_cast<double>(n + 1))));
        r.inputs["N"] = N;
        set_error(r, worst, 1e-10);
    });

    s.check("vz_s4_partial_sum", [&](ResultRecord& r) {
        const std::size_t N = 256;
        const auto S = singular_values(build_matrix(OperatorKind::Vg, symbols("0,1", ""), unit, N));
        const double sum = schatten_power_sum(S, SchattenOrder(4.0));
        r.inputs["N"] = N;
        r.outputs["limit"] = kPi * kPi / 6.0;
        r.value = sum;
        r.expected = zeta_partial(2.0, N - 1);
        r.tolerance = 1e-10;
        r.pass = std::abs(sum - r.expected) <= 1e-10;
    });

    s.check("vz_schatten_dichotomy", [&](ResultRecord& r) {
        const std::vector<std::size_t> Ns{64, 128, 256};
        const auto th = s.config().convergence_thresholds();
        const auto p4 = convergence_diagnose(OperatorKind::Vg, symbols("0,1", ""), unit, SchattenOrder(4.0), Ns, th);
        const auto p2 = convergence_diagnose(OperatorKind::Vg, symbols("0,1", ""), unit, SchattenOrder(2.0), Ns, th);
        r.outputs["p4"] = report_json(p4);
        r.outputs["p2"] = report_json(p2);
        r.value = p2.slope;
        r.pass = p4.verdict == ConvergenceVerdict::Converged && p2.verdict == ConvergenceVerdict::Diverging;
    });

    s.check("iz_growth", [&](ResultRecord& r) {
        double worst = 0.0;
        for (std::size_t N : {64u, 128u, 256u}) {
            const auto S = singular_values(build_matrix(OperatorKind::Ig, symbols("0,1", ""), unit, N));
            worst = std::max(worst, rel_err(S.values.front(), std::sqrt(static_cast<double>(N - 1))));
        }
        set_error(r, worst, 0.1);
    });

    s.check("cross_path_agreement", [&](ResultRecord& r) {
        const char* gs[] = {"0", "1", "0,1", "1,1", "0,0,1", "0.5,-1,0,0.25i", "1,2,0,0,3i"};
        const char* psis[] = {"0,0.5", "0.2,0.5i", "0,1"};
        double worst = 0.0;
        int fixtures = 0;
        for (auto kind : {OperatorKind::Vg, OperatorKind::Ig, OperatorKind::Mg, OperatorKind::IgPsi,
                          OperatorKind::CgPsi, OperatorKind::VgUpperPsi, OperatorKind::CgUpperPsi}) {
            for (const char* g : gs) {
                for (const char* psi : psis) {
                    const auto pair = symbols(g, psi);
                    const auto exact = build_matrix(kind, pair, unit, 16);
                    const auto quad = build_matrix_quadrature(kind, pair, unit, 16, s.config().tol);
                    worst = std::max(worst, (exact.matrix - quad.matrix).cwiseAbs().maxCoeff());
                    ++fixtures;
                }
            }
        }
        r.inputs["N"] = 16;
        r.outputs["fixtures"] = fixtures;
        set_error(r, worst, 1e-8);
    });

    s.check("quadrature_path_examples", [&](ResultRecord& r) {
        const auto zero = build_matrix_quadrature(OperatorKind::IgPsi, symbols("0", "0,0.5"), unit, 8);
        const auto id = build_matrix_quadrature(OperatorKind::Mg, symbols("1", ""), unit, 8);
        const double err = std::max(zero.matrix.cwiseAbs().maxCoeff() / 1e-14,
                                    (id.matrix - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() / 1e-10);
        set_error(r, err, 1.0);
    });

    s.check("integration_by_parts", [&](ResultRecord& r) {
        const std::size_t N = 32;
        const auto pair = symbols("1,1", "");
        const auto V = build_matrix(OperatorKind::Vg, pair, unit, N).matrix;
        const auto I = build_matrix(OperatorKind::Ig, pair, unit, N).matrix;
        Eigen::MatrixXcd rhs = build_matrix(OperatorKind::Mg, pair, unit, N).matrix;
        rhs(0, 0) -= pair.g.coeff(0);
        const auto block = static_cast<Eigen::Index>(N - pair.g.degree().value_or(0));
        const double err = (V + I - rhs).topLeftCorner(block, block).cwiseAbs().maxCoeff();
        r.inputs["N"] = N;
        set_error(r, err, 1e-12);
    });

    s.check("integral_kinds_vanish_at_origin", [&](ResultRecord& r) {
        double worst = 0.0;
        const auto pair = symbols("1,2,0.5i", "0,0.5");
        for (auto kind : {OperatorKind::Vg, OperatorKind::Ig, OperatorKind::IgPsi, OperatorKind::CgPsi,
                          OperatorKind::VgUpperPsi, OperatorKind::CgUpperPsi})
            worst = std::max(worst, build_matrix(kind, pair, unit, 24).matrix.row(0).cwiseAbs().maxCoeff());
        set_error(r, worst, 0.0);
    });
}

// ---------------------------------------------------------------- paper-example

void paper_example_suite(Suite& s) {
    const FockParams unit(1.0);
    const auto pair = symbols("0,1", "0,0.5");
    const SchattenOrder two(2.0);

    s.check("criterion_value", [&](ResultRecord& r) {
        const auto res = criterion_integral(TransformWhich::ForI, pair, unit, two);
        r.inputs = pair_json(pair);
        r.inputs["alpha"] = 1.0;
        r.inputs["p"] = 2.0;
        r.outputs["status"] = to_string(res.status);
        r.outputs["error_estimate"] = number_to_json(res.error_estimate);
        set_close(r, res.value, 16.0 * kPi / 9.0, 1e-6);
        r.pass = r.pass && res.finite();
    });

    s.check("classify", [&](ResultRecord& r) {
        const auto v = classify_symbolic(pair, two);
        r.outputs["status"] = to_string(v.status);
        r.outputs["reason"] = to_string(v.reason);
        r.pass = v.status == MembershipStatus::Member && v.reason == MembershipReason::AffineContractive;
    });

    s.check("convergence", [&](ResultRecord& r) {
        const auto rep = convergence_diagnose(OperatorKind::IgPsi, pair, unit, two, s.config().ns,
                                              s.config().convergence_thresholds());
        double worst = 0.0;
        for (std::size_t i = 1; i < rep.partial_sums.size(); ++i)
            worst = std::max(worst, rel_err(rep.partial_sums[i - 1], rep.partial_sums[i]));
        r.outputs["report"] = report_json(rep);
        set_error(r, worst, 1e-8);
        r.pass = r.pass && rep.verdict == ConvergenceVerdict::Converged;
    });
}

// ---------------------------------------------------------------- dichotomy

void dichotomy_suite(Suite& s) {
    const FockParams unit(1.0);
    const SchattenOrder two(2.0);
    const SchattenOrder order(s.config().p);

    s.check("ig_rigidity", [&](ResultRecord& r) {
        const auto rep = convergence_diagnose(OperatorKind::Ig, symbols("0,1", ""), unit, two, kRigidityNs,
                                              s.config().convergence_thresholds());
        const double want = std::sqrt(static_cast<double>(kRigidityNs.back() - 1));
        r.outputs["report"] = report_json(rep);
        set_close(r, rep.largest_singular_values.back(), want, 0.1);
        r.pass = r.pass && rep.verdict == ConvergenceVerdict::Diverging;
    });

    s.check("classify_examples", [&](ResultRecord& r) {
        struct Case {
            const char* g;
            const char* psi;
            MembershipStatus status;
            MembershipReason reason;
        };
        const Case cases[] = {
            {"0,1", "0,0.5", MembershipStatus::Member, MembershipReason::AffineContractive},
            {"0,1", "0,1", MembershipStatus::NotMember, MembershipReason::AffineNonContractive},
            {"0", "0,0,3", MembershipStatus::Member, MembershipReason::ZeroSymbol},
            {"1", "0,2", MembershipStatus::NotMember, MembershipReason::AffineNonContractive},
            {"1", "0.5,1", MembershipStatus::NotMember, MembershipReason::AffineNonContractive},
            {"0,1", "0,0,1", MembershipStatus::NotMember, MembershipReason::NonAffinePsi},
        };
        int agree = 0;
        for (const auto& c : cases) {
            for (double p : {0.5, 2.0, 3.0}) {
                const auto v = classify_symbolic(symbols(c.g, c.psi), SchattenOrder(p));
                agree += v.status == c.status && v.reason == c.reason;
            }
        }
        set_count(r, agree, 3 * static_cast<int>(std::size(cases)));
    });

    s.check("criterion_examples", [&](ResultRecord& r) {
        int agree = 0, total = 0;
        for (double p : {1.0, 2.0, 3.0}) {
            const SchattenOrder ord(p);
            agree += criterion_integral(TransformWhich::ForI, symbols("1", "0,1"), unit, ord).status ==
                     IntegralStatus::Divergent;
            const auto zero = criterion_integral(TransformWhich::ForI, symbols("0", "0,1"), unit, ord);
            agree += zero.finite() && zero.value == 0.0;
            agree += criterion_integral(TransformWhich::ForI, symbols("0,1", "0,0,1"), unit, ord).status ==
                     IntegralStatus::Divergent;
            total += 3;
        }
        set_count(r, agree, total);
    });

    s.check("classifier_prober_agreement", [&](ResultRecord& r) {
        int agree = 0;
        ordered_json rows = ordered_json::array();
        const auto grid = dichotomy_grid();
        for (const auto& pair : grid) {
            const auto verdict = classify_symbolic(pair, order);
            const auto probed = criterion_integral(TransformWhich::ForI, pair, unit, order, CriterionMode::Probe,
                                                   s.config().tol, s.config().probe_schedule());
            const bool same = (verdict.status == MembershipStatus::Member) == probed.finite();
            agree += same;
            auto row = pair_json(pair);
            row["classifier"] = to_string(verdict.status);
            row["probe"] = to_string(probed.status);
            rows.push_back(row);
        }
        r.inputs["p"] = order.p();
        r.outputs["fixtures"] = rows;
        set_count(r, agree, static_cast<int>(grid.size()));
    });

    s.check("classifier_spectra_agreement", [&](ResultRecord& r) {
        int agree = 0;
        ordered_json rows = ordered_json::array();
        const auto grid = dichotomy_grid();
        for (const auto& pair : grid) {
            const auto verdict = classify_symbolic(pair, two);
            const auto rep = convergence_diagnose(OperatorKind::IgPsi, pair, unit, two, s.config().ns,
                                                  s.config().convergence_thresholds());
            agree += (verdict.status == MembershipStatus::Member) == (rep.verdict == ConvergenceVerdict::Converged);
            auto row = pair_json(pair);
            row["classifier"] = to_string(verdict.status);
            row["spectra"] = to_string(rep.verdict);
            rows.push_back(row);
        }
        r.outputs["fixtures"] = rows;
        set_count(r, agree, static_cast<int>(grid.size()));
    });
}

// ---------------------------------------------------------------- corollary

void corollary_suite(Suite& s) {
    const FockParams unit(1.0);
    const auto th = s.config().convergence_thresholds();
    const auto& Ns = s.config().ns;
    auto converged = [](const ConvergenceReport& c) { return c.verdict == ConvergenceVerdict::Converged; };

    s.check("companion_contractive", [&](ResultRecord& r) {
        const auto rep = companion_comparison(symbols("0,1", "0,0.5"), unit, SchattenOrder(2.0), Ns, th);
        r.outputs["I"] = report_json(rep.i_branch);
        r.outputs["V"] = report_json(rep.v_branch);
        r.outputs["C"] = report_json(rep.c_branch);
        r.outputs["CU"] = report_json(rep.cu_branch);
        r.pass = converged(rep.i_branch) && converged(rep.v_branch) && converged(rep.c_branch) &&
                 converged(rep.cu_branch) && rep.i_implies_v && rep.c_implies_cu;
    });

    s.check("companion_converse_failure", [&](ResultRecord& r) {
        const auto rep = companion_comparison(symbols("0,1", "0,1"), unit, SchattenOrder(3.0), Ns, th);
        const std::size_t N = rep.v_branch.Ns.back();
        r.outputs["I"] = report_json(rep.i_branch);
        r.outputs["V"] = report_json(rep.v_branch);
        r.outputs["zeta_3_2"] = boost::math::zeta(1.5);
        r.value = rep.v_branch.partial_sums.back();
        r.expected = zeta_partial(1.5, N - 1);
        r.tolerance = 1e-8;
        r.pass = std::abs(r.value - r.expected) <= 1e-8 && converged(rep.v_branch) &&
                 rep.i_branch.verdict == ConvergenceVerdict::Diverging && rep.i_implies_v;
    });

    s.check("companion_zero_symbol", [&](ResultRecord& r) {
        const auto rep = companion_comparison(symbols("0", "0,0.5"), unit, SchattenOrder(2.0), Ns, th);
        r.pass = converged(rep.i_branch) && converged(rep.v_branch) && converged(rep.c_branch) &&
                 converged(rep.cu_branch);
    });
}

// ---------------------------------------------------------------- theorem1

double s2_squared(const SymbolPair& pair, const FockParams& params, std::size_t N) {
    return schatten_power_sum(singular_values(build_matrix(OperatorKind::IgPsi, pair, params, N)), SchattenOrder(2.0));
}

void theorem1_suite(Suite& s) {
    const FockParams unit(1.0);
    const SchattenOrder two(2.0);
    const auto& cfg = s.config();

    s.check("berezin_zero_symbol", [&](ResultRecord& r) {
        const auto pair = symbols("0", "0,0.5");
        double worst = 0.0;
        for (complex w : {complex(0.0), complex(1, 2), complex(-3, 0.5)})
            worst = std::max(worst, berezin_transform(TransformWhich::ForI, pair, unit, w));
        const auto lp = berezin_lp_integral(TransformWhich::ForI, pair, unit, two, cfg.probe_schedule());
        set_error(r, worst + lp.integral.value, 0.0);
        r.pass = r.pass && lp.integral.finite();
    });

    s.check("berezin_origin_radial", [&](ResultRecord& r) {
        const double got = berezin_transform(TransformWhich::ForI, symbols("1", "0"), unit, 0.0);
        const double want = radial_oracle([](double x) { return std::exp(-x * x) / ((1.0 + x) * (1.0 + x)); });
        set_close(r, got, want, 1e-9);
    });

    s.check("berezin_far_point", [&](ResultRecord& r) {
        const double got = berezin_transform(TransformWhich::ForI, symbols("1", "0,1"), unit, 10.0);
        r.inputs["w"] = 10.0;
        set_close(r, got, kPi, 0.05);
    });

    s.check("berezin_lp_member", [&](ResultRecord& r) {
        const auto pair = symbols("0,1", "0,0.5");
        const auto lp = berezin_lp_integral(TransformWhich::ForI, pair, unit, two, cfg.probe_schedule(), cfg.tol);
        const double s2 = s2_squared(pair, unit, 128);
        const double ratio = lp.integral.value / s2;
        r.inputs = pair_json(pair);
        r.outputs["status"] = to_string(lp.integral.status);
        r.outputs["integral"] = number_to_json(lp.integral.value);
        r.outputs["norm_estimate"] = number_to_json(lp.norm_estimate);
        r.outputs["s2_squared_N128"] = s2;
        r.outputs["annulus_trace"] = json_list(lp.integral.annulus_trace);
        r.value = ratio;
        r.expected = kNaN;
        r.tolerance = kNaN;
        r.pass = lp.integral.finite() && ratio >= cfg.ratio_band_lo && ratio <= cfg.ratio_band_hi;
    });

    s.check("berezin_lp_not_member", [&](ResultRecord& r) {
        const auto lp =
            berezin_lp_integral(TransformWhich::ForI, symbols("1", "0,1"), unit, two, cfg.probe_schedule(), cfg.tol);
        r.outputs["status"] = to_string(lp.integral.status);
        r.outputs["annulus_trace"] = json_list(lp.integral.annulus_trace);
        r.pass = lp.integral.status == IntegralStatus::Divergent;
    });

    s.check("scaling_invariance", [&](ResultRecord& r) {
        double worst = 0.0;
        ordered_json rows = ordered_json::array();
        const auto z = ComplexPolynomial::monomial(1);
        for (double a : cfg.a_values) {
            auto ratio = [&](const ComplexPolynomial& g) {
                const auto pair = affine_pair(g, a);
                return s2_squared(pair, unit, 128) / criterion_integral(TransformWhich::ForI, pair, unit, two).value;
            };
            const double base = ratio(z);
            for (const auto& c : cfg.c_scalings) {
                const double scaled = ratio(poly_scale(z, parse_complex(c)));
                worst = std::max(worst, rel_err(scaled, base));
                rows.push_back({{"a", a}, {"c", c}, {"ratio", base}, {"scaled_ratio", scaled}});
            }
        }
        r.outputs["fixtures"] = rows;
        set_error(r, worst, 1e-10);
    });

    s.check("membership_consistency", [&](ResultRecord& r) {
        int agree = 0;
        ordered_json rows = ordered_json::array();
        const auto grid = dichotomy_grid();
        for (const auto& pair : grid) {
            const auto verdict = classify_symbolic(pair, two);
            const auto crit = criterion_integral(TransformWhich::ForI, pair, unit, two);
            auto row = pair_json(pair);
            row["classifier"] = to_string(verdict.status);
            row["criterion"] = to_string(crit.status);
            if (verdict.status == MembershipStatus::Member) {
                const auto lp = berezin_lp_integral(TransformWhich::ForI, pair, unit, two, cfg.probe_schedule(), cfg.tol);
                row["berezin_lp"] = to_string(lp.integral.status);
                agree += crit.finite() && lp.integral.finite();
            } else {
                agree += !crit.finite();
            }
            rows.push_back(row);
        }
        r.outputs["fixtures"] = rows;
        set_count(r, agree, static_cast<int>(grid.size()));
    });

    s.check("estimate_ratio_band", [&](ResultRecord& r) {
        const std::vector<complex> points{0.0, 1.0, complex(1, 2)};
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        bool finite = true;
        ordered_json rows = ordered_json::array();
        for (double a : {0.3, 0.5}) {
            const auto D = estimate_diagnostics(affine_pair(ComplexPolynomial::monomial(1), a), unit, 1.0, 4.0, points);
            for (const auto* v : {&D.operator_bound_ratios, &D.small_p_ratios, &D.large_p_ratios}) {
                for (double x : *v) {
                    finite = finite && std::isfinite(x) && x > 0.0;
                    lo = std::min(lo, x);
                    hi = std::max(hi, x);
                }
            }
            rows.push_back({{"a", a},
                            {"operator_bound", json_list(D.operator_bound_ratios)},
                            {"small_p", json_list(D.small_p_ratios)},
                            {"large_p", json_list(D.large_p_ratios)}});
        }
        r.outputs["fixtures"] = rows;
        r.outputs["min_ratio"] = number_to_json(lo);
        r.outputs["max_ratio"] = number_to_json(hi);
        r.pass = finite && lo >= cfg.ratio_band_lo && hi <= cfg.ratio_band_hi;
    });
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"kernel", kernel_suite},       {"shifts", shifts_suite},       {"paper-example", paper_example_suite},
        {"dichotomy", dichotomy_suite}, {"corollary", corollary_suite}, {"theorem1", theorem1_suite},
    };
    return r;
}

}  // namespace

ordered_json thresholds_json(const ExperimentConfig& c) {
    ordered_json j;
    j["plateau"] = c.plateau;
    j["slope"] = c.slope;
    j["tail_decay_min"] = c.tail_decay_min;
    j["annulus_trigger"] = c.annulus_trigger;
    j["ratio_band"] = {c.ratio_band_lo, c.ratio_band_hi};
    j["quadrature_tol"] = c.tol;
    j["probe_r0"] = c.probe_r0;
    j["probe_k_max"] = c.probe_k_max;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

SuiteOutcome run_suite(std::string_view name, const ExperimentConfig& config) {
    SuiteOutcome out;
    for (const auto& [suite_name, fn] : registry()) {
        if (name != "all" && name != suite_name) continue;
        Suite s(suite_name, config, out);
        fn(s);
        if (name != "all") return out;
    }
    if (name != "all") throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    return out;
}

SuiteOutcome run_suites(const std::vector<std::string>& names, const ExperimentConfig& config) {
    SuiteOutcome out;
    for (const auto& n : names) {
        auto part = run_suite(n, config);
        out.all_pass = out.all_pass && part.all_pass;
        for (auto& r : part.records) out.records.push_back(std::move(r));
    }
    return out;
}

}  // namespace fockvol
