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

#include <limits>

#include "fockvol/polynomial.hpp"
#include "oracles.hpp"

using namespace fockvol;
using P = ComplexPolynomial;

namespace {

bool canonical(const P& p) { return p.coeffs().empty() || p.coeffs().back() != complex(0.0); }

P random_poly(oracle::PointSource& src, int max_degree) {
    return P(src.coefficients(static_cast<std::size_t>(src.integer(0, max_degree)) + 1));
}

double rel(complex got, complex want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("canonical form drops trailing zeros") {
    CHECK(P{1.0, 2.0, 0.0, 0.0}.coeffs().size() == 2);
    CHECK(P{0.0, 0.0}.is_zero());
    CHECK_FALSE(P{0.0, 0.0}.degree().has_value());
    CHECK(P{3.0}.degree() == 0u);
    CHECK(P::monomial(4, 0.0).is_zero());
    CHECK(P::monomial(3).degree() == 3u);
    CHECK(P{1.0, 2.0}.coeff(7) == complex(0.0));
}

TEST_CASE("evaluation examples") {
    CHECK(poly_eval(P{}, complex(7, 1)) == complex(0.0));
    CHECK(poly_eval(P::monomial(2), complex(0, 2)) == complex(-4, 0));
    CHECK(poly_eval(P{1.0, 3.0}, complex(1, -1)) == complex(4, -3));
    CHECK(P{1.0, 3.0}(2.0) == complex(7.0));
}

TEST_CASE("derivative examples") {
    CHECK(poly_derivative(P::monomial(3)) == P::monomial(2, 3.0));
    CHECK(poly_derivative(P{5.0}).is_zero());
    CHECK(poly_derivative(P{1.0, 2.0, 1.0}) == P{2.0, 2.0});
    CHECK(poly_derivative(P{}).is_zero());
}

TEST_CASE("antiderivative examples") {
    CHECK(poly_antiderivative0(P{}).is_zero());
    CHECK(poly_antiderivative0(P{1.0}) == P::monomial(1));
    CHECK(poly_antiderivative0(P{0.0, 2.0, 3.0}) == P{0.0, 0.0, 1.0, 1.0});
    CHECK(poly_antiderivative0(P{4.0, 1.0}).coeff(0) == complex(0.0));
}

TEST_CASE("composition examples") {
    CHECK(poly_compose(P::monomial(2), P{0.0, 0.5}) == P::monomial(2, 0.25));
    const P any{1.0, complex(0, 2), -3.0, 0.5};
    CHECK(poly_compose(any, P::monomial(1)) == any);
    CHECK(poly_compose(P{1.0, 1.0}, P{1.0, 2.0}) == P{2.0, 2.0});
    CHECK(poly_compose(P{}, P{1.0, 2.0}).is_zero());
    CHECK(poly_compose(P{2.0, 1.0}, P{}) == P{2.0});
}

TEST_CASE("multiplication examples") {
    CHECK(poly_multiply(P{}, P{1.0, 2.0}).is_zero());
    CHECK(poly_multiply(P::monomial(1), P::monomial(1)) == P::monomial(2));
    CHECK(poly_multiply(P{1.0, 1.0}, P{1.0, -1.0}) == P{1.0, 0.0, -1.0});
}

TEST_CASE("addition cancels to canonical zero") {
    const P a{1.0, 2.0, 3.0};
    CHECK(poly_add(a, poly_scale(a, -1.0)).is_zero());
    CHECK(poly_add(P{1.0, 2.0, 3.0}, P{0.0, 0.0, -3.0}).degree() == 1u);
    CHECK(poly_scale(a, 0.0).is_zero());
}

TEST_CASE("affine map round trip") {
    const AffineMap m{complex(0.5, -0.25), complex(2.0, 1.0)};
    const auto back = AffineMap::from_polynomial(m.to_polynomial());
    REQUIRE(back.has_value());
    CHECK(back->slope == m.slope);
    CHECK(back->intercept == m.intercept);
    CHECK_FALSE(AffineMap::from_polynomial(P{0.0, 0.0, 1.0}).has_value());
    const auto zero = AffineMap::from_polynomial(P{});
    REQUIRE(zero.has_value());
    CHECK(zero->slope == complex(0.0));
    CHECK(AffineMap{0.0, 3.0}.to_polynomial().degree() == 0u);
}

TEST_CASE("multiplication agrees with pointwise products") {
    oracle::PointSource src(101);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const P a = random_poly(src, 8), b = random_poly(src, 8);
        const P ab = poly_multiply(a, b);
        CHECK(canonical(ab));
        for (int i = 0; i < 100; ++i) {
            const complex z = src.in_disc(2.0);
            worst = std::max(worst, rel(poly_eval(ab, z), poly_eval(a, z) * poly_eval(b, z)));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("composition agrees with nested evaluation") {
    oracle::PointSource src(202);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const P a = random_poly(src, 8), b = random_poly(src, 3);
        const P ab = poly_compose(a, b);
        CHECK(canonical(ab));
        if (!a.is_zero() && !b.is_zero() && *b.degree() > 0)
            CHECK(ab.degree() == *a.degree() * *b.degree());
        for (int i = 0; i < 100; ++i) {
            const complex z = src.in_disc(1.0);
            worst = std::max(worst, rel(poly_eval(ab, z), poly_eval(a, poly_eval(b, z))));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("derivative inverts the antiderivative") {
    oracle::PointSource src(303);
    for (int trial = 0; trial < 200; ++trial) {
        const P a = random_poly(src, 8);
        const P back = poly_derivative(poly_antiderivative0(a));
        REQUIRE(back.coeffs().size() == a.coeffs().size());
        for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
            // (c/(k+1))*(k+1) can differ from c in the last bit
            CHECK(std::abs(back.coeffs()[k] - a.coeffs()[k]) <=
                  4.0 * std::numeric_limits<double>::epsilon() * std::abs(a.coeffs()[k]));
        }
    }
    // exact on dyadic coefficients
    const P d{0.5, -1.25, complex(0.0, 3.0), 8.0};
    CHECK(poly_derivative(poly_antiderivative0(d)) == d);
}

TEST_CASE("every operation returns canonical polynomials") {
    oracle::PointSource src(404);
    for (int trial = 0; trial < 100; ++trial) {
        const P a = random_poly(src, 6), b = random_poly(src, 6);
        CHECK(canonical(poly_add(a, b)));
        CHECK(canonical(poly_add(a, poly_scale(a, -1.0))));
        CHECK(canonical(poly_derivative(a)));
        CHECK(canonical(poly_antiderivative0(a)));
        CHECK(canonical(poly_scale(a, 0.0)));
    }
}

TEST_CASE("complex literal grammar") {
    CHECK(parse_complex("3") == complex(3, 0));
    CHECK(parse_complex(" -2.5 ") == complex(-2.5, 0));
    CHECK(parse_complex("0.5i") == complex(0, 0.5));
    CHECK(parse_complex("-0.5i") == complex(0, -0.5));
    CHECK(parse_complex("1+2i") == complex(1, 2));
    CHECK(parse_complex("1-2i") == complex(1, -2));
    CHECK(parse_complex("-3.5e-2-4e1i") == complex(-0.035, -40));
    CHECK(parse_complex("1e+2+1e-1i") == complex(100, 0.1));
    CHECK(parse_complex("i") == complex(0, 1));
    CHECK(parse_complex("-i") == complex(0, -1));
    CHECK(parse_complex("2+i") == complex(2, 1));
    CHECK(parse_complex("+4") == complex(4, 0));

    for (const char* bad : {"", "   ", "abc", "1+", "1+2", "2i+1", "1++2i", "1+-2i", "i2", "1 2", "nan", "inf",
                            "1e999", "--1", "1+2j"})
        CHECK_THROWS_AS(parse_complex(bad), ParseError);
}

TEST_CASE("polynomial grammar") {
    CHECK(parse_polynomial("0,1") == P::monomial(1));
    CHECK(parse_polynomial("1,0,-0.5i") == P{1.0, 0.0, complex(0, -0.5)});
    CHECK(parse_polynomial("").is_zero());
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("0,0,0").is_zero());
    CHECK(parse_polynomial(" 1 , 2 ") == P{1.0, 2.0});
    CHECK_THROWS_AS(parse_polynomial("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1,"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z"), ParseError);
}

TEST_CASE("formatting round-trips through the parser") {
    CHECK(format_polynomial(P{}) == "0");
    CHECK(format_polynomial(P{1.0, 0.0, complex(0, -0.5)}) == "1,0,-0.5i");
    CHECK(format_complex(complex(1, 2)) == "1+2i");
    CHECK(format_complex(complex(0.1, -0.2)) == "0.1-0.2i");
    oracle::PointSource src(505);
    for (int trial = 0; trial < 200; ++trial) {
        const P a = random_poly(src, 8);
        CHECK(parse_polynomial(format_polynomial(a)) == a);
    }
    for (double x : {1e-300, -1e300, 1.0 / 3.0, 0.1, 123456789.125})
        CHECK(parse_complex(format_complex(complex(x, -x))) == complex(x, -x));
}

}  // TEST_SUITE
