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

#ifndef FOCKVOL_POLYNOMIAL_HPP
#define FOCKVOL_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fockvol {

using complex = std::complex<double>;

/// Polynomial with complex double coefficients, lowest degree first.
///
/// Always stored in canonical form: either no coefficients (the zero
/// polynomial) or a nonzero leading coefficient. Values are immutable once
/// built; every operation returns a fresh canonical polynomial.
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<complex> coeffs);
    ComplexPolynomial(std::initializer_list<complex> coeffs);

    static ComplexPolynomial constant(complex c);
    /// c * z^k
    static ComplexPolynomial monomial(std::size_t k, complex c = 1.0);

    const std::vector<complex>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// Coefficient of z^k, zero past the degree.
    complex coeff(std::size_t k) const noexcept;

    complex operator()(complex z) const noexcept;

    friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

private:
    std::vector<complex> coeffs_;
};

/// psi(z) = slope * z + intercept
struct AffineMap {
    complex slope{0.0};
    complex intercept{0.0};

    ComplexPolynomial to_polynomial() const;
    /// Empty when P has degree two or more.
    static std::optional<AffineMap> from_polynomial(const ComplexPolynomial& P);
};

complex poly_eval(const ComplexPolynomial& P, complex z) noexcept;
ComplexPolynomial poly_derivative(const ComplexPolynomial& P);
/// The antiderivative vanishing at the origin.
ComplexPolynomial poly_antiderivative0(const ComplexPolynomial& P);
/// P(Q(z)).
ComplexPolynomial poly_compose(const ComplexPolynomial& P, const ComplexPolynomial& Q);
ComplexPolynomial poly_multiply(const ComplexPolynomial& P, const ComplexPolynomial& Q);
ComplexPolynomial poly_add(const ComplexPolynomial& P, const ComplexPolynomial& Q);
ComplexPolynomial poly_scale(const ComplexPolynomial& P, complex c);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text grammar shared with the CLI and config files: comma-separated
// coefficients, lowest degree first, each a complex literal of the form
// `<re>`, `<im>i` or `<re>[+|-]<im>i`.
complex parse_complex(std::string_view text);
ComplexPolynomial parse_polynomial(std::string_view text);
std::string format_complex(complex c);
std::string format_polynomial(const ComplexPolynomial& P);

}  // namespace fockvol

#endif  // FOCKVOL_POLYNOMIAL_HPP
