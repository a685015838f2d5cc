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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "fockvol/quadrature.hpp"
#include "oracles.hpp"

using namespace fockvol;

namespace {

PlaneIntegrand weighted_gaussian(int m, double beta, complex center = 0.0) {
    return [=](complex z) {
        const double r2 = std::norm(z - center);
        return std::pow(r2, m) * std::exp(-beta * r2);
    };
}

double grid_integral(int m, double beta, double tol) {
    const auto grid = build_grid(beta, tol, 2 * m);
    return integrate_plane(weighted_gaussian(m, beta), grid).value;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("gauss-legendre is exact on low-degree polynomials") {
    std::vector<double> x, w;
    gauss_legendre(10, -1.0, 3.0, x, w);
    REQUIRE(x.size() == 10);
    for (int d = 0; d < 20; ++d) {
        double sum = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], d);
        const double exact = (std::pow(3.0, d + 1) - std::pow(-1.0, d + 1)) / (d + 1);
        CHECK(oracle::rel_err(sum, exact) <= 1e-13);
    }
}

TEST_CASE("pairwise summation") {
    std::vector<double> ones(1000, 0.1);
    CHECK(pairwise_sum(ones) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
    oracle::PointSource src(7);
    std::vector<double> terms(4097);
    for (auto& t : terms) t = src.real(0.0, 1.0);
    CHECK(pairwise_sum(terms) == pairwise_sum(terms));
}

TEST_CASE("grid weights cover the disc") {
    const auto grid = build_grid(1.0, 1e-12, 0);
    double area = 0.0;
    std::size_t count = 0;
    grid.for_each_node(0.0, [&](complex z, double w) {
        CHECK(std::abs(z) <= grid.radius);
        area += w;
        ++count;
    });
    CHECK(count == grid.size());
    CHECK(oracle::rel_err(area, oracle::pi * grid.radius * grid.radius) <= 1e-12);
    CHECK(grid.tail_bound <= 1e-12);
}

TEST_CASE("gaussian integral") {
    CHECK(oracle::rel_err(grid_integral(0, 1.0, 1e-14), oracle::pi) <= 1e-12);
}

TEST_CASE("weighted gaussian fixtures") {
    for (double beta : {0.1, 0.5, 1.0, 2.0, 7.5})
        for (int m : {0, 1, 2, 3, 5, 8}) {
            const double got = grid_integral(m, beta, 1e-12 * oracle::gamma_plane(m, beta));
            CHECK_MESSAGE(oracle::rel_err(got, oracle::gamma_plane(m, beta)) <= 1e-10, "m=", m, " beta=", beta);
        }
}

TEST_CASE("angular dependence integrates correctly") {
    // int Re(z)^2 e^{-|z|^2} = pi / 2
    const auto grid = build_grid(1.0, 1e-14, 2);
    const double got = integrate_plane([](complex z) { return z.real() * z.real() * std::exp(-std::norm(z)); }, grid).value;
    CHECK(oracle::rel_err(got, oracle::pi / 2.0) <= 1e-12);
}

TEST_CASE("shifted centers") {
    const complex c(1.5, -2.0);
    const auto grid = build_grid(1.0, 1e-14, 4);
    const double got = integrate_plane(weighted_gaussian(2, 1.0, c), grid, c).value;
    CHECK(oracle::rel_err(got, oracle::gamma_plane(2, 1.0)) <= 1e-12);
    const double disc = oracle::disc(weighted_gaussian(1, 1.0, c), grid.radius, c);
    const double got1 = integrate_plane(weighted_gaussian(1, 1.0, c), build_grid(1.0, 1e-14, 2), c).value;
    CHECK(oracle::rel_err(got1, disc) <= 1e-10);
}

TEST_CASE("grid size grows as beta shrinks") {
    std::size_t previous = 0;
    double previous_radius = std::numeric_limits<double>::infinity();
    for (double beta : {0.05, 0.2, 1.0, 5.0}) {
        const auto grid = build_grid(beta, 1e-10, 4);
        if (previous != 0) {
            CHECK(grid.size() <= previous);
            CHECK(grid.radius < previous_radius);
        }
        previous = grid.size();
        previous_radius = grid.radius;
    }
}

TEST_CASE("refinement does not increase the error") {
    const double exact = oracle::gamma_plane(3, 0.5);
    double previous = std::numeric_limits<double>::infinity();
    for (double tol : {1e-3, 1e-6, 1e-9, 1e-12}) {
        const double err = std::abs(grid_integral(3, 0.5, tol * exact) - exact) / exact;
        CHECK(err <= previous * 1.0001 + 1e-15);
        CHECK(err <= std::max(tol, 1e-13) * 2.0);
        previous = err;
    }
}

TEST_CASE("tail bound") {
    CHECK(gaussian_tail_bound(1.0, 10.0, 0) == doctest::Approx(oracle::pi * std::exp(-100.0)).epsilon(1e-12));
    CHECK(gaussian_tail_bound(1.0, 0.5, 6) == std::numeric_limits<double>::infinity());
    for (int d : {0, 2, 6})
        for (double R : {3.0, 5.0, 8.0}) {
            // the outside part computed by subtraction from the closed form
            const double inside = oracle::disc(weighted_gaussian(d / 2, 1.0), R);
            const double outside = oracle::gamma_plane(d / 2, 1.0) - inside;
            CHECK(gaussian_tail_bound(1.0, R, d) >= outside - 1e-12);
        }
}

TEST_CASE("invalid grid requests") {
    CHECK_THROWS_AS(build_grid(0.0, 1e-10, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(-1.0, 1e-10, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(std::numeric_limits<double>::infinity(), 1e-10, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1.0, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1.0, 1e-10, -1), std::invalid_argument);
}

TEST_CASE("non-finite integrands are rejected") {
    const auto grid = build_grid(1.0, 1e-10, 0);
    CHECK_THROWS_AS(integrate_plane([](complex) { return std::nan(""); }, grid), QuadratureError);
    CHECK_THROWS_AS(integrate_plane([](complex) { return -std::numeric_limits<double>::infinity(); }, grid),
                    QuadratureError);
    CHECK_THROWS_AS(integrate_plane([](complex) { return std::numeric_limits<double>::infinity(); }, grid),
                    QuadratureError);
    CHECK_THROWS_AS(probe_divergence([](complex) { return std::nan(""); }, {}), QuadratureError);
}

TEST_CASE("integration is deterministic") {
    const auto grid = build_grid(0.7, 1e-12, 6);
    const auto f = weighted_gaussian(3, 0.7);
    CHECK(integrate_plane(f, grid).value == integrate_plane(f, grid).value);
    CHECK(probe_divergence(f, {}).value == probe_divergence(f, {}).value);
}

TEST_CASE("prober on decaying integrands") {
    for (double beta : {0.05, 0.1, 0.5, 1.0, 3.0})
        for (int m : {0, 1, 2}) {
            const auto r = probe_divergence(weighted_gaussian(m, beta), {});
            CHECK_MESSAGE(r.finite(), "m=", m, " beta=", beta);
            if (beta >= 0.5) CHECK(oracle::rel_err(r.value, oracle::gamma_plane(m, beta)) <= 1e-8);
        }
    const auto r = probe_divergence(weighted_gaussian(0, 1.0), {});
    CHECK(r.annulus_trace.size() == 8);
    CHECK(oracle::rel_err(r.value, oracle::pi) <= 1e-10);
}

TEST_CASE("prober on divergent integrands") {
    const auto one = probe_divergence([](complex) { return 1.0; }, {});
    CHECK(one.status == IntegralStatus::Divergent);
    CHECK(std::isinf(one.value));
    const auto inverse_square = probe_divergence([](complex z) { return std::pow(1.0 + std::abs(z), -2.0); }, {});
    CHECK(inverse_square.status == IntegralStatus::Divergent);
    const auto growth = probe_divergence([](complex z) { return std::exp(std::norm(z)); }, {});
    CHECK(growth.status == IntegralStatus::Divergent);
}

TEST_CASE("prober on integrable power tails") {
    // (1 + |z|)^-3 has integral 2 pi int r (1+r)^-3 dr = pi
    const auto r = probe_divergence([](complex z) { return std::pow(1.0 + std::abs(z), -3.0); }, {});
    CHECK(r.finite());
    CHECK(r.value < oracle::pi);
    CHECK(r.value > 0.9 * oracle::pi);
}

TEST_CASE("prober schedule validation") {
    ProbeSchedule s;
    s.k_max = 3;
    CHECK_THROWS_AS(probe_divergence([](complex) { return 1.0; }, s), std::invalid_argument);
    s = {};
    s.trigger = 1;
    CHECK_THROWS_AS(probe_divergence([](complex) { return 1.0; }, s), std::invalid_argument);
    s = {};
    s.r0 = 0.0;
    CHECK_THROWS_AS(probe_divergence([](complex) { return 1.0; }, s), std::invalid_argument);
}

TEST_CASE("status names") {
    CHECK(std::string(to_string(IntegralStatus::Finite)) == "Finite");
    CHECK(std::string(to_string(IntegralStatus::Divergent)) == "Divergent");
}

}  // TEST_SUITE
