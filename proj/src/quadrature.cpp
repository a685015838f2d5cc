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

#include "fockvol/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fockvol {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double pairwise_sum(std::span<const double> terms) noexcept {
    if (terms.size() <= 8) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

void gauss_legendre(std::size_t n, double lo, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 1; i <= m; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) - 0.25) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                const double jd = static_cast<double>(j);
                p1 = ((2.0 * jd - 1.0) * x * p2 - (jd - 1.0) * p3) / jd;
            }
            dp = static_cast<double>(n) * (x * p1 - p2) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // one more derivative evaluation at the converged node
        double p1 = 1.0, p2 = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            const double p3 = p2;
            p2 = p1;
            const double jd = static_cast<double>(j);
            p1 = ((2.0 * jd - 1.0) * x * p2 - (jd - 1.0) * p3) / jd;
        }
        dp = static_cast<double>(n) * (x * p1 - p2) / (x * x - 1.0);

        nodes[i - 1] = mid - half * x;
        nodes[n - i] = mid + half * x;
        weights[i - 1] = 2.0 * half / ((1.0 - x * x) * dp * dp);
        weights[n - i] = weights[i - 1];
    }
}

void QuadratureGrid::for_each_node(complex center,
                                   const std::function<void(complex, double)>& visit) const {
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(angular_count);
    for (std::size_t i = 0; i < radial_nodes.size(); ++i) {
        const double r = radial_nodes[i];
        const double w = radial_weights[i] * dtheta;
        for (std::size_t j = 0; j < angular_count; ++j)
            visit(center + std::polar(r, dtheta * static_cast<double>(j)), w);
    }
}

double gaussian_tail_bound(double beta, double radius, int degree) noexcept {
    // pi beta^{-s} Gamma(s, x) with s = degree/2 + 1, x = beta R^2, using
    // Gamma(s, x) <= x^{s-1} e^{-x} x / (x - s + 1) for x > s - 1.
    const double s = 0.5 * degree + 1.0;
    const double x = beta * radius * radius;
    double log_gamma_bound = (s - 1.0) * std::log(x) - x;
    if (s > 1.0) {
        if (x <= s - 1.0) return kInf;
        log_gamma_bound += std::log(x / (x - s + 1.0));
    }
    return std::numbers::pi * std::exp(log_gamma_bound - s * std::log(beta));
}

QuadratureGrid build_grid(double beta, double tol, int degree_hint) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("grid decay beta must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("grid tolerance must be positive");
    if (degree_hint < 0) throw std::invalid_argument("degree hint must be nonnegative");

    QuadratureGrid g;
    g.beta = beta;
    g.degree_hint = degree_hint;

    const double s = 0.5 * degree_hint + 1.0;
    double x = std::max(1.0, s);
    while (gaussian_tail_bound(beta, std::sqrt(x / beta), degree_hint) > tol) x += 0.25;
    g.radius = 1.02 * std::sqrt(x / beta);
    g.tail_bound = gaussian_tail_bound(beta, g.radius, degree_hint);

    const double scaled = g.radius * std::sqrt(beta);
    const auto radial = static_cast<std::size_t>(24.0 + 8.0 * std::ceil(scaled)) +
                        static_cast<std::size_t>(degree_hint);
    gauss_legendre(radial, 0.0, g.radius, g.radial_nodes, g.radial_weights);
    for (std::size_t i = 0; i < radial; ++i) g.radial_weights[i] *= g.radial_nodes[i];
    g.angular_count = static_cast<std::size_t>(2 * degree_hint + 16);
    return g;
}

const char* to_string(IntegralStatus s) noexcept {
    return s == IntegralStatus::Finite ? "Finite" : "Divergent";
}

namespace {

double evaluate_checked(const PlaneIntegrand& f, complex z) {
    const double v = f(z);
    if (std::isnan(v) || (std::isinf(v) && v < 0)) {
        std::ostringstream msg;
        msg << "integrand is not a nonnegative number at z = " << z.real() << (z.imag() < 0 ? "" : "+")
            << z.imag() << "i";
        throw QuadratureError(msg.str());
    }
    return v;
}

// Integral over r in [lo, hi] with n Gauss-Legendre nodes and m angles.
double integrate_annulus(const PlaneIntegrand& f, complex center, double lo, double hi,
                         std::size_t n, std::size_t m) {
    std::vector<double> nodes, weights;
    gauss_legendre(n, lo, hi, nodes, weights);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(m);
    std::vector<double> terms;
    terms.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weights[i] * nodes[i] * dtheta;
        for (std::size_t j = 0; j < m; ++j) {
            const double v = evaluate_checked(f, center + std::polar(nodes[i], dtheta * static_cast<double>(j)));
            terms.push_back(v == 0.0 ? 0.0 : w * v);
        }
    }
    return pairwise_sum(terms);
}

}  // namespace

IntegralResult integrate_plane(const PlaneIntegrand& f, const QuadratureGrid& grid, complex center) {
    std::vector<double> terms;
    terms.reserve(grid.size());
    grid.for_each_node(center, [&](complex z, double w) {
        const double v = evaluate_checked(f, z);
        if (std::isinf(v)) throw QuadratureError("integrand overflows on the grid");
        terms.push_back(v == 0.0 ? 0.0 : w * v);
    });
    const double value = pairwise_sum(terms);
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
    return IntegralResult::finite_value(value, grid.tail_bound + rounding);
}

IntegralResult probe_divergence(const PlaneIntegrand& f, const ProbeSchedule& schedule, complex center) {
    if (schedule.k_max < 4) throw std::invalid_argument("divergence probe needs at least 4 annuli");
    if (schedule.trigger < 2) throw std::invalid_argument("annulus trigger must be at least 2");
    if (!(schedule.r0 > 0.0)) throw std::invalid_argument("probe radius r0 must be positive");

    IntegralResult result;
    const double core = integrate_annulus(f, center, 0.0, schedule.r0, schedule.radial_nodes,
                                          schedule.angular_nodes);
    auto& trace = result.annulus_trace;
    for (int k = 0; k < schedule.k_max; ++k) {
        const double lo = schedule.r0 * std::ldexp(1.0, k);
        const double c = integrate_annulus(f, center, lo, 2.0 * lo, schedule.radial_nodes,
                                           schedule.angular_nodes);
        trace.push_back(c);

        const int run_start = k - schedule.trigger + 1;
        if (run_start < schedule.first_checked) continue;
        bool rising = true;
        for (int j = run_start; j <= k && rising; ++j) {
            if (!(trace[j] > 0.0)) rising = false;
            if (j > run_start && trace[j] < trace[j - 1]) rising = false;
        }
        if (rising) {
            result.status = IntegralStatus::Divergent;
            result.value = kInf;
            result.error_estimate = 0.0;
            return result;
        }
    }

    std::vector<double> terms{core};
    terms.insert(terms.end(), trace.begin(), trace.end());
    result.value = pairwise_sum(terms);
    if (!std::isfinite(result.value)) {
        // an overflowing annulus that never formed a rising run
        result.status = IntegralStatus::Divergent;
        return result;
    }
    const double last = trace.back();
    const double prev = trace[trace.size() - 2];
    if (last == 0.0) {
        result.error_estimate = 0.0;
    } else if (prev > 0.0 && last < prev) {
        const double ratio = last / prev;
        result.error_estimate = last * ratio / (1.0 - ratio);
    } else {
        result.error_estimate = last;
    }
    return result;
}

}  // namespace fockvol
