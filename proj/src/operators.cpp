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

#include "fockvol/operators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fockvol/quadrature.hpp"

namespace fockvol {

namespace {

constexpr std::array<std::pair<OperatorKind, std::string_view>, 7> kKindNames{{
    {OperatorKind::Vg, "Vg"},
    {OperatorKind::Ig, "Ig"},
    {OperatorKind::Mg, "Mg"},
    {OperatorKind::IgPsi, "IgPsi"},
    {OperatorKind::CgPsi, "CgPsi"},
    {OperatorKind::VgUpperPsi, "VgUpperPsi"},
    {OperatorKind::CgUpperPsi, "CgUpperPsi"},
}};

bool iequals(std::string_view a, std::string_view b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
    });
}

const ComplexPolynomial& psi_of(OperatorKind kind, const SymbolPair& pair) {
    if (!pair.psi) throw MissingSymbolError("operator " + to_string(kind) + " requires a psi symbol");
    return *pair.psi;
}

}  // namespace

std::string to_string(OperatorKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return std::string(name);
    return "?";
}

OperatorKind parse_operator_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (iequals(n, name)) return k;
    throw std::invalid_argument("unknown operator kind '" + std::string(name) + "'");
}

bool requires_psi(OperatorKind kind) noexcept {
    return kind != OperatorKind::Vg && kind != OperatorKind::Ig && kind != OperatorKind::Mg;
}

bool is_integral_kind(OperatorKind kind) noexcept { return kind != OperatorKind::Mg; }

ComplexPolynomial apply_operator(OperatorKind kind, const SymbolPair& pair, const FockParams&,
                                 const ComplexPolynomial& f) {
    const auto& g = pair.g;
    switch (kind) {
        case OperatorKind::Vg:
            return poly_antiderivative0(poly_multiply(f, poly_derivative(g)));
        case OperatorKind::Ig:
            return poly_antiderivative0(poly_multiply(poly_derivative(f), g));
        case OperatorKind::Mg:
            return poly_multiply(f, g);
        case OperatorKind::IgPsi: {
            const auto& psi = psi_of(kind, pair);
            return poly_antiderivative0(poly_multiply(poly_compose(poly_derivative(f), psi), g));
        }
        case OperatorKind::CgPsi: {
            const auto& psi = psi_of(kind, pair);
            return poly_compose(poly_antiderivative0(poly_multiply(poly_derivative(f), g)), psi);
        }
        case OperatorKind::VgUpperPsi: {
            const auto& psi = psi_of(kind, pair);
            return poly_antiderivative0(poly_multiply(poly_compose(f, psi), poly_derivative(g)));
        }
        case OperatorKind::CgUpperPsi: {
            const auto& psi = psi_of(kind, pair);
            return poly_compose(poly_antiderivative0(poly_multiply(f, poly_derivative(g))), psi);
        }
    }
    throw std::invalid_argument("unknown operator kind");
}

TruncatedOperator build_matrix(OperatorKind kind, const SymbolPair& pair, const FockParams& params,
                               std::size_t N) {
    if (N < 2) throw std::invalid_argument("truncation size must be at least 2");
    if (requires_psi(kind)) psi_of(kind, pair);

    TruncatedOperator T{kind, pair, params, N, Eigen::MatrixXcd::Zero(N, N), std::vector<double>(N, 0.0)};
    const double alpha = params.alpha();
    for (std::size_t n = 0; n < N; ++n) {
        const auto image = apply_operator(kind, pair, params, ComplexPolynomial::monomial(n));
        const double log_src = -0.5 * log_monomial_norm_sq(n, alpha);
        double kept = 0.0, dropped = 0.0;
        for (std::size_t m = 0; m < image.coeffs().size(); ++m) {
            const complex c = image.coeffs()[m];
            if (c == complex(0.0)) continue;
            // <c z^m, e_m> scaled by sqrt(alpha^n/n!) = c sqrt(m!/alpha^m) sqrt(alpha^n/n!)
            const complex entry = c * std::exp(log_src + 0.5 * log_monomial_norm_sq(m, alpha));
            if (m < N) {
                T.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) = entry;
                kept += std::norm(entry);
            } else {
                dropped += std::norm(entry);
            }
        }
        if (dropped > 0.0) T.column_leakage[n] = std::sqrt(dropped / (kept + dropped));
        if (T.column_leakage[n] > kLeakageFlagThreshold) T.leakage_flagged = true;
    }
    return T;
}

namespace {

// Matrix of quadrature projections on one grid; images[n] = T e_n.
Eigen::MatrixXcd project_on_grid(const std::vector<ComplexPolynomial>& images, const FockParams& params,
                                 std::size_t N, const QuadratureGrid& grid) {
    const double alpha = params.alpha();
    std::vector<complex> nodes;
    std::vector<double> weights;
    nodes.reserve(grid.size());
    weights.reserve(grid.size());
    grid.for_each_node(0.0, [&](complex z, double w) {
        nodes.push_back(z);
        weights.push_back(w * (alpha / std::numbers::pi) * std::exp(-alpha * std::norm(z)));
    });
    const auto count = static_cast<Eigen::Index>(nodes.size());

    // rows: weighted conj(e_m) at the nodes; cols: (T e_n) at the nodes
    Eigen::MatrixXcd basis(static_cast<Eigen::Index>(N), count);
    Eigen::MatrixXcd values(count, static_cast<Eigen::Index>(N));
    std::vector<double> step(N);
    for (std::size_t m = 1; m < N; ++m) step[m] = std::sqrt(alpha / static_cast<double>(m));
    for (Eigen::Index q = 0; q < count; ++q) {
        const complex z = nodes[static_cast<std::size_t>(q)];
        // e_m(z) = e_{m-1}(z) z sqrt(alpha/m)
        complex e = weights[static_cast<std::size_t>(q)];
        for (std::size_t m = 0; m < N; ++m) {
            if (m > 0) e *= z * step[m];
            basis(static_cast<Eigen::Index>(m), q) = std::conj(e);
        }
        for (std::size_t n = 0; n < N; ++n)
            values(q, static_cast<Eigen::Index>(n)) = poly_eval(images[n], nodes[static_cast<std::size_t>(q)]);
    }
    return basis * values;
}

}  // namespace

TruncatedOperator build_matrix_quadrature(OperatorKind kind, const SymbolPair& pair,
                                          const FockParams& params, std::size_t N, double tol) {
    if (N < 2) throw std::invalid_argument("truncation size must be at least 2");
    if (requires_psi(kind)) psi_of(kind, pair);

    std::vector<ComplexPolynomial> images;
    std::size_t max_degree = 0;
    for (std::size_t n = 0; n < N; ++n) {
        const complex scale = std::exp(-0.5 * log_monomial_norm_sq(n, params.alpha()));
        images.push_back(apply_operator(kind, pair, params, ComplexPolynomial::monomial(n, scale)));
        if (auto d = images.back().degree()) max_degree = std::max(max_degree, *d);
    }
    const int hint = static_cast<int>(max_degree + N - 1);
    const QuadratureGrid grid = build_grid(params.alpha(), tol, hint);

    QuadratureGrid refined = grid;
    gauss_legendre(grid.radial_nodes.size() * 3 / 2, 0.0, grid.radius, refined.radial_nodes,
                   refined.radial_weights);
    for (std::size_t i = 0; i < refined.radial_nodes.size(); ++i)
        refined.radial_weights[i] *= refined.radial_nodes[i];
    refined.angular_count = grid.angular_count + 8;

    TruncatedOperator T{kind, pair, params, N, project_on_grid(images, params, N, grid), std::vector<double>(N, 0.0)};
    const Eigen::MatrixXcd check = project_on_grid(images, params, N, refined);
    const double estimate = (T.matrix - check).cwiseAbs().maxCoeff();
    const double allowed = tol * std::max(1.0, check.cwiseAbs().maxCoeff());
    if (estimate > allowed) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "quadrature grid too coarse: self-estimated entry error %.3g exceeds %.3g",
                      estimate, allowed);
        throw QuadratureError(msg);
    }
    T.matrix = check;

    // leakage bookkeeping mirrors the exact builder: degrees >= N cannot be
    // represented in the truncated basis
    for (std::size_t n = 0; n < N; ++n) {
        double kept = 0.0, dropped = 0.0;
        for (std::size_t m = 0; m < images[n].coeffs().size(); ++m) {
            const double mag =
                std::norm(images[n].coeffs()[m]) * std::exp(log_monomial_norm_sq(m, params.alpha()));
            (m < N ? kept : dropped) += mag;
        }
        if (dropped > 0.0) T.column_leakage[n] = std::sqrt(dropped / (kept + dropped));
        if (T.column_leakage[n] > kLeakageFlagThreshold) T.leakage_flagged = true;
    }
    return T;
}

double shift_weights_oracle(std::size_t k, complex c, complex a, const FockParams& params,
                            std::size_t n) noexcept {
    if (n == 0 || c == complex(0.0)) return 0.0;
    if (a == complex(0.0) && n > 1) return 0.0;
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double log_a = (n == 1) ? 0.0 : (nd - 1.0) * std::log(std::abs(a));
    const double log_sigma = std::log(std::abs(c)) + std::log(nd) + log_a - std::log(nd + kd) +
                             0.5 * (std::lgamma(nd + kd + 1.0) - std::lgamma(nd + 1.0) -
                                    kd * std::log(params.alpha()));
    return std::exp(log_sigma);
}

}  // namespace fockvol
