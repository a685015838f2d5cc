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

// Reference values computed without the library's own quadrature, SVD or
// log-Gamma code paths.

#ifndef FOCKVOL_TESTS_ORACLES_HPP
#define FOCKVOL_TESTS_ORACLES_HPP

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using complex = std::complex<double>;
constexpr double pi = std::numbers::pi;

inline double rel_err(double value, double expected) {
    if (expected == 0.0) return std::abs(value);
    return std::abs(value - expected) / std::abs(expected);
}

/// 2 pi int_0^inf f(r) r dr, double-exponential rule.
inline double radial(const std::function<double(double)>& f) {
    boost::math::quadrature::exp_sinh<double> rule;
    return 2.0 * pi * rule.integrate([&](double r) { return f(r) * r; }, 1e-14);
}

/// int_0^{2 pi} int_0^R f(r e^{it}) r dr dt by adaptive Gauss-Kronrod in both variables.
inline double disc(const std::function<double(complex)>& f, double R, complex center = 0.0) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    auto inner = [&](double t) {
        return GK::integrate([&](double r) { return f(center + std::polar(r, t)) * r; }, 0.0, R, 12, 1e-13);
    };
    return GK::integrate(inner, 0.0, 2.0 * pi, 12, 1e-13);
}

/// int |z|^{2m} exp(-beta |z|^2) dm(z) = pi m! / beta^(m+1)
inline double gamma_plane(int m, double beta) { return pi * std::tgamma(m + 1.0) / std::pow(beta, m + 1.0); }

/// n! as a product, for the small n where that is exact enough.
inline double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

/// sum_{n=1}^{last} n^-s, smallest terms first in extended precision
inline double zeta_partial(double s, std::size_t last) {
    long double acc = 0.0L;
    for (std::size_t n = last; n >= 1; --n) acc += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    return static_cast<double>(acc);
}

/// Column n singular value of I_{(c z^k, a z)} from the explicit image
/// c a^(n-1) n z^(n+k) / (n+k), with norms from direct factorials (small n only).
inline double shift_weight_direct(unsigned k, complex c, complex a, double alpha, unsigned n) {
    if (n == 0) return 0.0;
    const double coeff = std::abs(c) * std::pow(std::abs(a), n - 1.0) * n / (n + k);
    // ||z^(n+k)|| / ||z^n||
    const double ratio = std::sqrt(factorial(n + k) / std::pow(alpha, n + k) / (factorial(n) / std::pow(alpha, n)));
    return coeff * ratio;
}

/// Random complex numbers in the disc of the given radius.
class PointSource {
public:
    explicit PointSource(std::uint64_t seed) : rng_(seed) {}
    complex in_disc(double radius) {
        complex w;
        do {
            w = complex(unif_(rng_), unif_(rng_));
        } while (std::abs(w) > 1.0);
        return radius * w;
    }
    complex coefficient() { return {unif_(rng_), unif_(rng_)}; }
    std::vector<complex> coefficients(std::size_t count) {
        std::vector<complex> c(count);
        for (auto& x : c) x = coefficient();
        return c;
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unif_{-1.0, 1.0};
};

}  // namespace oracle

#endif  // FOCKVOL_TESTS_ORACLES_HPP
