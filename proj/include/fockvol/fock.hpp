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

#ifndef FOCKVOL_FOCK_HPP
#define FOCKVOL_FOCK_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fockvol/polynomial.hpp"

namespace fockvol {

/// Weight parameter of the Fock space F^2_alpha. The norm is
///
///   ||f||^2 = (alpha/pi) * integral |f(z)|^2 exp(-alpha |z|^2) dm(z),
///
/// under which ||z^n||^2 = n!/alpha^n and e_n(z) = sqrt(alpha^n/n!) z^n
/// (n = 0, 1, ...) is an orthonormal basis.
class FockParams {
public:
    explicit FockParams(double alpha);
    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Coefficients <P, e_n> of a polynomial in the monomial orthonormal basis.
struct BasisCoefficientVector {
    std::vector<complex> entries;
    double squared_norm() const noexcept;
};

class TruncationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// log(n!/alpha^n), i.e. log ||z^n||^2.
double log_monomial_norm_sq(std::size_t n, double alpha) noexcept;

complex basis_eval(std::size_t n, const FockParams& params, complex z) noexcept;

/// K_w(z) = exp(alpha z conj(w)).
complex kernel_eval(const FockParams& params, complex w, complex z) noexcept;

/// k_w(z) = exp(alpha z conj(w) - alpha |w|^2 / 2), the unit-norm kernel.
complex normalized_kernel_eval(const FockParams& params, complex w, complex z) noexcept;

/// log |k_w(z)|^2 = alpha (2 Re(z conj(w)) - |w|^2); finite where |k_w|^2 overflows.
double log_normalized_kernel_sq(const FockParams& params, complex w, complex z) noexcept;

/// Sum_{n<terms} conj(e_n(w)) e_n(z) as a polynomial in z.
ComplexPolynomial truncated_kernel(const FockParams& params, complex w, std::size_t terms);

complex poly_inner_product(const ComplexPolynomial& P, const ComplexPolynomial& Q,
                           const FockParams& params);

/// Throws TruncationError unless N > deg P.
BasisCoefficientVector expand_in_basis(const ComplexPolynomial& P, const FockParams& params,
                                       std::size_t N);

/// ||dK_w/d(conj w)||^2 = alpha exp(alpha|w|^2) (1 + alpha|w|^2).
double dbar_kernel_norm_sq(const FockParams& params, complex w) noexcept;

/// Partial sum Sum_{1<=n<terms} |e_n'(w)|^2 of the series for dbar_kernel_norm_sq.
double dbar_kernel_norm_sq_series(const FockParams& params, complex w, std::size_t terms) noexcept;

}  // namespace fockvol

#endif  // FOCKVOL_FOCK_HPP
