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

#include "fockvol/operators.hpp"
#include "fockvol/quadrature.hpp"
#include "fockvol/spectra.hpp"
#include "oracles.hpp"

using namespace fockvol;
using P = ComplexPolynomial;

namespace {

const OperatorKind kAllKinds[] = {OperatorKind::Vg,    OperatorKind::Ig,         OperatorKind::Mg,
                                  OperatorKind::IgPsi, OperatorKind::CgPsi,      OperatorKind::VgUpperPsi,
                                  OperatorKind::CgUpperPsi};

SymbolPair pair_of(const char* g, const char* psi) { return {parse_polynomial(g), parse_polynomial(psi)}; }

double entry_abs(const TruncatedOperator& T, std::size_t m, std::size_t n) {
    return std::abs(T.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)));
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("operator kind names") {
    for (auto kind : kAllKinds) CHECK(parse_operator_kind(to_string(kind)) == kind);
    CHECK(parse_operator_kind("igpsi") == OperatorKind::IgPsi);
    CHECK(parse_operator_kind("VGUPPERPSI") == OperatorKind::VgUpperPsi);
    CHECK_THROWS_AS(parse_operator_kind("Tg"), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator_kind(""), std::invalid_argument);
    CHECK_FALSE(requires_psi(OperatorKind::Vg));
    CHECK_FALSE(requires_psi(OperatorKind::Mg));
    CHECK(requires_psi(OperatorKind::CgUpperPsi));
    CHECK_FALSE(is_integral_kind(OperatorKind::Mg));
    CHECK(is_integral_kind(OperatorKind::Ig));
}

TEST_CASE("apply_operator examples") {
    const FockParams unit(1.0);
    const auto zpair = pair_of("0,1", "0,0.5");
    CHECK(apply_operator(OperatorKind::Ig, pair_of("0", ""), unit, P{1.0, 2.0, 3.0}).is_zero());
    CHECK(apply_operator(OperatorKind::IgPsi, zpair, unit, P::monomial(2)) == P::monomial(3, 1.0 / 3.0));
    const auto c = apply_operator(OperatorKind::CgPsi, zpair, unit, P::monomial(2));
    REQUIRE(c.degree() == 3u);
    CHECK(std::abs(c.coeff(3) - 1.0 / 12.0) <= 1e-16);
    CHECK(apply_operator(OperatorKind::Mg, pair_of("0,1", ""), unit, P::monomial(1)) == P::monomial(2));
    // V_z z^n = z^(n+1)/(n+1)
    CHECK(apply_operator(OperatorKind::Vg, pair_of("0,1", ""), unit, P::monomial(3)) == P::monomial(4, 0.25));
    // V_g^psi f = int f(psi) g'
    CHECK(apply_operator(OperatorKind::VgUpperPsi, pair_of("0,0,1", "0,2"), unit, P::monomial(1)) ==
          P::monomial(3, 4.0 / 3.0));
    // C_g^psi f = (int f g')(psi)
    CHECK(apply_operator(OperatorKind::CgUpperPsi, pair_of("0,1", "1,1"), unit, P{1.0}) == P{1.0, 1.0});
}

TEST_CASE("integral kinds vanish at the origin when psi(0) = 0") {
    oracle::PointSource src(21);
    const FockParams unit(1.0);
    for (int i = 0; i < 20; ++i) {
        const SymbolPair pair{P(src.coefficients(4)), P{0.0, src.coefficient()}};
        const P f(src.coefficients(6));
        for (auto kind : kAllKinds) {
            if (!is_integral_kind(kind)) continue;
            CHECK(apply_operator(kind, pair, unit, f).coeff(0) == complex(0.0));
        }
    }
}

TEST_CASE("psi-dependent kinds require psi") {
    const SymbolPair nopsi{P::monomial(1), std::nullopt};
    const FockParams unit(1.0);
    for (auto kind : kAllKinds) {
        if (requires_psi(kind)) {
            CHECK_THROWS_AS(apply_operator(kind, nopsi, unit, P{1.0, 1.0}), MissingSymbolError);
            CHECK_THROWS_AS(build_matrix(kind, nopsi, unit, 4), MissingSymbolError);
            CHECK_THROWS_AS(build_matrix_quadrature(kind, nopsi, unit, 4), MissingSymbolError);
        } else {
            CHECK_NOTHROW(build_matrix(kind, nopsi, unit, 4));
        }
    }
}

TEST_CASE("build_matrix examples") {
    const FockParams unit(1.0);
    const auto A = build_matrix(OperatorKind::IgPsi, pair_of("0,1", "0,0.5"), unit, 4);
    CHECK(entry_abs(A, 2, 1) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(entry_abs(A, 3, 2) == doctest::Approx(std::sqrt(3.0) / 3.0).epsilon(1e-14));
    CHECK(A.matrix.col(0).cwiseAbs().maxCoeff() == 0.0);
    const auto V = build_matrix(OperatorKind::Vg, pair_of("0,1", ""), unit, 3);
    CHECK(entry_abs(V, 1, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entry_abs(V, 2, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(build_matrix(OperatorKind::Vg, pair_of("0,1", ""), unit, 1), std::invalid_argument);
}

TEST_CASE("zero symbol gives the zero matrix for every kind") {
    for (auto kind : kAllKinds) {
        const auto T = build_matrix(kind, pair_of("0", "0.3,0.5"), FockParams(2.0), 12);
        CHECK(T.matrix.cwiseAbs().maxCoeff() == 0.0);
        CHECK_FALSE(T.leakage_flagged);
    }
}

TEST_CASE("columns are basis expansions of the operator images") {
    oracle::PointSource src(22);
    for (int i = 0; i < 10; ++i) {
        const FockParams params(src.real(0.5, 2.0));
        const SymbolPair pair{P(src.coefficients(3)), P{src.coefficient(), src.coefficient()}};
        const std::size_t N = 20;
        for (auto kind : kAllKinds) {
            const auto T = build_matrix(kind, pair, params, N);
            for (std::size_t n = 0; n < N; ++n) {
                const auto en = P::monomial(n, std::exp(-0.5 * log_monomial_norm_sq(n, params.alpha())));
                const auto image = apply_operator(kind, pair, params, en);
                if (image.degree().value_or(0) >= N) continue;
                const auto col = expand_in_basis(image, params, N);
                for (std::size_t m = 0; m < N; ++m) {
                    const complex got = T.matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
                    CHECK(std::abs(got - col.entries[m]) <= 1e-12 * std::max(1.0, std::abs(col.entries[m])));
                }
            }
        }
    }
}

TEST_CASE("shift structure matches the closed-form weights") {
    const FockParams unit(1.0);
    const std::size_t N = 64;
    for (std::size_t k : {1u, 2u}) {
        for (complex a : {complex(0.3), complex(0.5), complex(0.0, 0.5)}) {
            const SymbolPair pair{P::monomial(k), P{0.0, a}};
            const auto T = build_matrix(OperatorKind::IgPsi, pair, unit, N);
            for (std::size_t n = 0; n < N; ++n) {
                for (std::size_t m = 0; m < N; ++m) {
                    if (m == n + k && n >= 1) {
                        CHECK(oracle::rel_err(entry_abs(T, m, n), shift_weights_oracle(k, 1.0, a, unit, n)) <= 1e-10);
                    } else {
                        CHECK(entry_abs(T, m, n) == 0.0);
                    }
                }
            }
        }
    }
}

TEST_CASE("shift weights oracle") {
    const FockParams unit(1.0);
    CHECK(shift_weights_oracle(1, 1.0, 1.0, unit, 1) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(shift_weights_oracle(1, 1.0, 0.5, unit, 3) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(shift_weights_oracle(2, 0.0, 0.5, unit, 3) == 0.0);
    CHECK(shift_weights_oracle(2, 1.0, 0.5, unit, 0) == 0.0);
    CHECK(shift_weights_oracle(1, 1.0, 0.0, unit, 1) == doctest::Approx(0.5 * std::sqrt(2.0)));
    CHECK(shift_weights_oracle(1, 1.0, 0.0, unit, 2) == 0.0);
    for (double alpha : {0.5, 1.0, 3.0})
        for (unsigned k : {0u, 1u, 2u, 3u})
            for (unsigned n = 0; n <= 15; ++n) {
                const complex c(2.0, -1.0), a(0.3, 0.4);
                CHECK(oracle::rel_err(shift_weights_oracle(k, c, a, FockParams(alpha), n),
                                      oracle::shift_weight_direct(k, c, a, alpha, n)) <= 1e-12);
            }
}

TEST_CASE("integration by parts identity") {
    const std::size_t N = 32;
    const FockParams unit(1.0);
    const auto pair = pair_of("1,1", "");
    Eigen::MatrixXcd rhs = build_matrix(OperatorKind::Mg, pair, unit, N).matrix;
    rhs(0, 0) -= pair.g.coeff(0);
    const Eigen::MatrixXcd lhs =
        build_matrix(OperatorKind::Vg, pair, unit, N).matrix + build_matrix(OperatorKind::Ig, pair, unit, N).matrix;
    const auto block = static_cast<Eigen::Index>(N - 1);
    CHECK((lhs - rhs).topLeftCorner(block, block).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("row zero of integral kinds") {
    const FockParams unit(1.0);
    const auto pair = pair_of("1,2,0.5i", "0,0.5i");
    for (auto kind : kAllKinds) {
        const auto T = build_matrix(kind, pair, unit, 16);
        if (is_integral_kind(kind)) CHECK(T.matrix.row(0).cwiseAbs().maxCoeff() == 0.0);
    }
    // composing after integration moves the value at 0 to P(psi(0))
    const auto shifted = build_matrix(OperatorKind::CgPsi, pair_of("1", "0.5,0.5"), unit, 8);
    CHECK(shifted.matrix.row(0).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("truncation leakage is counted and flagged") {
    const FockParams unit(1.0);
    const auto id = build_matrix(OperatorKind::Mg, pair_of("1", ""), unit, 8);
    CHECK_FALSE(id.leakage_flagged);
    const auto V = build_matrix(OperatorKind::Vg, pair_of("0,1", ""), unit, 8);
    CHECK(V.leakage_flagged);
    CHECK(V.column_leakage[7] == doctest::Approx(1.0));
    CHECK(V.column_leakage[6] == 0.0);
    // M_{1+z} e_7 keeps e_7 and loses e_8
    const auto M = build_matrix(OperatorKind::Mg, pair_of("1,1", ""), unit, 8);
    CHECK(M.column_leakage[7] == doctest::Approx(std::sqrt(8.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("quadrature path examples") {
    const FockParams unit(1.0);
    const auto exact = build_matrix(OperatorKind::IgPsi, pair_of("0,1", "0,0.5"), unit, 8);
    const auto quad = build_matrix_quadrature(OperatorKind::IgPsi, pair_of("0,1", "0,0.5"), unit, 8);
    CHECK((exact.matrix - quad.matrix).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(build_matrix_quadrature(OperatorKind::IgPsi, pair_of("0", "0,0.5"), unit, 8).matrix.cwiseAbs().maxCoeff() <=
          1e-14);
    const auto id = build_matrix_quadrature(OperatorKind::Mg, pair_of("1", ""), unit, 8);
    CHECK((id.matrix - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("exact and quadrature paths agree on low-degree fixtures") {
    const char* gs[] = {"1", "0,1", "0.5,-1,0,0.25i", "1,2,0,0,3i"};
    const char* psis[] = {"0,0.5", "0.2,0.5i", "0,1"};
    for (double alpha : {1.0, 2.0}) {
        const FockParams params(alpha);
        for (auto kind : kAllKinds)
            for (const char* g : gs)
                for (const char* psi : psis) {
                    const auto pair = pair_of(g, psi);
                    const double diff = (build_matrix(kind, pair, params, 16).matrix -
                                         build_matrix_quadrature(kind, pair, params, 16).matrix)
                                            .cwiseAbs()
                                            .maxCoeff();
                    CHECK_MESSAGE(diff <= 1e-8, to_string(kind), " g=", g, " psi=", psi, " alpha=", alpha);
                }
    }
}

TEST_CASE("an unreachable quadrature tolerance is reported") {
    CHECK_THROWS_AS(build_matrix_quadrature(OperatorKind::Vg, pair_of("1,1", ""), FockParams(1.0), 8, 1e-19),
                    QuadratureError);
}

TEST_CASE("matrix construction is deterministic") {
    const auto pair = pair_of("0.3,1,0.5i", "0.1,0.7");
    for (auto kind : kAllKinds) {
        const auto a = build_matrix(kind, pair, FockParams(1.7), 24);
        const auto b = build_matrix(kind, pair, FockParams(1.7), 24);
        CHECK(a.matrix == b.matrix);
        CHECK(a.column_leakage == b.column_leakage);
    }
}

}  // TEST_SUITE
