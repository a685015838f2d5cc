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

#include "fockvol/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace fockvol {

namespace {

void canonicalize(std::vector<complex>& c) {
    while (!c.empty() && c.back() == complex(0.0, 0.0)) c.pop_back();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Parses a leading real number. Returns characters consumed, 0 on failure.
std::size_t parse_real_prefix(std::string_view s, double& out) {
    // from_chars rejects a leading '+'
    std::size_t skip = (!s.empty() && s.front() == '+') ? 1 : 0;
    if (skip == 1 && s.size() > 1 && s[1] == '-') return 0;
    const char* first = s.data() + skip;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr == first || !std::isfinite(out)) return 0;
    return static_cast<std::size_t>(ptr - s.data());
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    // shortest form that still round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        char trial[32];
        std::snprintf(trial, sizeof trial, "%.*g", prec, x);
        double back = 0.0;
        std::from_chars(trial, trial + std::char_traits<char>::length(trial), back);
        if (back == x) return trial;
    }
    return buf;
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize(coeffs_);
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<complex> coeffs) : coeffs_(coeffs) {
    canonicalize(coeffs_);
}

ComplexPolynomial ComplexPolynomial::constant(complex c) { return ComplexPolynomial{c}; }

ComplexPolynomial ComplexPolynomial::monomial(std::size_t k, complex c) {
    std::vector<complex> v(k + 1, complex(0.0));
    v[k] = c;
    return ComplexPolynomial(std::move(v));
}

std::optional<std::size_t> ComplexPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

complex ComplexPolynomial::coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : complex(0.0);
}

complex ComplexPolynomial::operator()(complex z) const noexcept { return poly_eval(*this, z); }

ComplexPolynomial AffineMap::to_polynomial() const { return ComplexPolynomial{intercept, slope}; }

std::optional<AffineMap> AffineMap::from_polynomial(const ComplexPolynomial& P) {
    if (P.coeffs().size() > 2) return std::nullopt;
    return AffineMap{P.coeff(1), P.coeff(0)};
}

complex poly_eval(const ComplexPolynomial& P, complex z) noexcept {
    const auto& c = P.coeffs();
    complex acc(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPolynomial poly_derivative(const ComplexPolynomial& P) {
    const auto& c = P.coeffs();
    if (c.size() <= 1) return {};
    std::vector<complex> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial poly_antiderivative0(const ComplexPolynomial& P) {
    const auto& c = P.coeffs();
    if (c.empty()) return {};
    std::vector<complex> q(c.size() + 1, complex(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) q[k + 1] = c[k] / static_cast<double>(k + 1);
    return ComplexPolynomial(std::move(q));
}

ComplexPolynomial poly_multiply(const ComplexPolynomial& P, const ComplexPolynomial& Q) {
    const auto& a = P.coeffs();
    const auto& b = Q.coeffs();
    if (a.empty() || b.empty()) return {};
    std::vector<complex> r(a.size() + b.size() - 1, complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return ComplexPolynomial(std::move(r));
}

ComplexPolynomial poly_add(const ComplexPolynomial& P, const ComplexPolynomial& Q) {
    const auto& a = P.coeffs();
    const auto& b = Q.coeffs();
    std::vector<complex> r(std::max(a.size(), b.size()), complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return ComplexPolynomial(std::move(r));
}

ComplexPolynomial poly_scale(const ComplexPolynomial& P, complex c) {
    std::vector<complex> r = P.coeffs();
    for (auto& x : r) x *= c;
    return ComplexPolynomial(std::move(r));
}

ComplexPolynomial poly_compose(const ComplexPolynomial& P, const ComplexPolynomial& Q) {
    const auto& c = P.coeffs();
    ComplexPolynomial acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = poly_add(poly_multiply(acc, Q), ComplexPolynomial::constant(*it));
    return acc;
}

complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty complex literal");

    auto bad = [&] { return ParseError("malformed complex literal '" + std::string(text) + "'"); };

    // Bare imaginary unit: "i", "+i", "-i".
    if (s == "i" || s == "+i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};

    double first = 0.0;
    std::size_t used = parse_real_prefix(s, first);
    if (used == 0) throw bad();
    std::string_view rest = s.substr(used);
    if (rest.empty()) return {first, 0.0};
    if (rest == "i") return {0.0, first};
    if (rest.front() != '+' && rest.front() != '-') throw bad();

    const double sign = rest.front() == '-' ? -1.0 : 1.0;
    rest.remove_prefix(1);
    if (rest == "i") return {first, sign};
    double second = 0.0;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) throw bad();
    std::size_t used2 = parse_real_prefix(rest, second);
    if (used2 == 0 || rest.substr(used2) != "i") throw bad();
    return {first, sign * second};
}

ComplexPolynomial parse_polynomial(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) return {};
    std::vector<complex> coeffs;
    while (true) {
        auto comma = s.find(',');
        coeffs.push_back(parse_complex(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return ComplexPolynomial(std::move(coeffs));
}

std::string format_complex(complex c) {
    if (c.imag() == 0.0) return format_real(c.real());
    std::string im = format_real(c.imag()) + "i";
    if (c.real() == 0.0) return im;
    if (im.front() != '-') im.insert(im.begin(), '+');
    return format_real(c.real()) + im;
}

std::string format_polynomial(const ComplexPolynomial& P) {
    if (P.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < P.coeffs().size(); ++k) {
        if (k) out += ',';
        out += format_complex(P.coeffs()[k]);
    }
    return out;
}

}  // namespace fockvol
