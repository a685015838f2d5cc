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

#include "fockvol/fock.hpp"

#include <cmath>
#include <string>

namespace fockvol {

FockParams::FockParams(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be a positive finite number");
}

double BasisCoefficientVector::squared_norm() const noexcept {
    double s = 0.0;
    for (const auto& e : entries) s += std::norm(e);
    return s;
}

double log_monomial_norm_sq(std::size_t n, double alpha) noexcept {
    const double nd = static_cast<double>(n);
    return std::lgamma(nd + 1.0) - nd * std::log(alpha);
}

complex basis_eval(std::size_t n, const FockParams& params, complex z) noexcept {
    if (n == 0) return 1.0;
    if (z == complex(0.0)) return 0.0;
    const double nd = static_cast<double>(n);
    const double log_mod = -0.5 * log_monomial_norm_sq(n, params.alpha()) + nd * std::log(std::abs(z));
    return std::polar(std::exp(log_mod), nd * std::arg(z));
}

complex kernel_eval(const FockParams& params, complex w, complex z) noexcept {
    return std::exp(params.alpha() * z * std::conj(w));
}

complex normalized_kernel_eval(const FockParams& params, complex w, complex z) noexcept {
    return std::exp(params.alpha() * z * std::conj(w) - 0.5 * params.alpha() * std::norm(w));
}

double log_normalized_kernel_sq(const FockParams& params, complex w, complex z) noexcept {
    return params.alpha() * (2.0 * (z * std::conj(w)).real() - std::norm(w));
}

ComplexPolynomial truncated_kernel(const FockParams& params, complex w, std::size_t terms) {
    std::vector<complex> c(terms);
    // coefficient of z^n is (alpha conj(w))^n / n!
    const complex step = params.alpha() * std::conj(w);
    complex term = 1.0;
    for (std::size_t n = 0; n < terms; ++n) {
        c[n] = term;
        term *= step / static_cast<double>(n + 1);
    }
    return ComplexPolynomial(std::move(c));
}

complex poly_inner_product(const ComplexPolynomial& P, const ComplexPolynomial& Q,
                           const FockParams& params) {
    const std::size_t common = std::min(P.coeffs().size(), Q.coeffs().size());
    complex acc(0.0);
    for (std::size_t k = 0; k < common; ++k)
        acc += P.coeffs()[k] * std::conj(Q.coeffs()[k]) *
               std::exp(log_monomial_norm_sq(k, params.alpha()));
    return acc;
}

BasisCoefficientVector expand_in_basis(const ComplexPolynomial& P, const FockParams& params,
                                       std::size_t N) {
    if (auto d = P.degree(); d && *d >= N)
        throw TruncationError("truncation " + std::to_string(N) + " does not exceed degree " +
                              std::to_string(*d));
    BasisCoefficientVector out{std::vector<complex>(N, complex(0.0))};
    for (std::size_t n = 0; n < P.coeffs().size(); ++n)
        out.entries[n] = P.coeffs()[n] * std::exp(0.5 * log_monomial_norm_sq(n, params.alpha()));
    return out;
}

double dbar_kernel_norm_sq(const FockParams& params, complex w) noexcept {
    const double x = params.alpha() * std::norm(w);
    return params.alpha() * std::exp(x) * (1.0 + x);
}

double dbar_kernel_norm_sq_series(const FockParams& params, complex w, std::size_t terms) noexcept {
    // |e_n'(w)|^2 = n^2 alpha^n |w|^{2(n-1)} / n!
    const double a = params.alpha();
    const double r2 = std::norm(w);
    double sum = 0.0;
    for (std::size_t n = 1; n < terms; ++n) {
        const double nd = static_cast<double>(n);
        if (r2 == 0.0) {
            if (n == 1) sum += a;
            continue;
        }
        sum += std::exp(2.0 * std::log(nd) + nd * std::log(a) + (nd - 1.0) * std::log(r2) -
                        std::lgamma(nd + 1.0));
    }
    return sum;
}

}  // namespace fockvol
