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

#ifndef FOCKVOL_OPERATORS_HPP
#define FOCKVOL_OPERATORS_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fockvol/fock.hpp"
#include "fockvol/polynomial.hpp"

namespace fockvol {

/// Integral operators on F^2_alpha induced by a symbol g and, for the
/// generalized kinds, a second symbol psi. On a polynomial f:
///
///   Vg          int_0^z f g'
///   Ig          int_0^z f' g
///   Mg          g f
///   IgPsi       int_0^z f'(psi(w)) g(w) dw
///   CgPsi       int_0^psi(z) f' g
///   VgUpperPsi  int_0^z f(psi(w)) g'(w) dw
///   CgUpperPsi  int_0^psi(z) f g'
enum class OperatorKind { Vg, Ig, Mg, IgPsi, CgPsi, VgUpperPsi, CgUpperPsi };

std::string to_string(OperatorKind kind);
/// Accepts the enumerator names, case-insensitively. Throws std::invalid_argument.
OperatorKind parse_operator_kind(std::string_view name);
bool requires_psi(OperatorKind kind) noexcept;
bool is_integral_kind(OperatorKind kind) noexcept;

struct SymbolPair {
    ComplexPolynomial g;
    std::optional<ComplexPolynomial> psi;
};

class MissingSymbolError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Relative per-column leakage above which a truncation is flagged.
inline constexpr double kLeakageFlagThreshold = 1e-6;

/// N x N matrix with entry (m, n) = <T e_n, e_m>.
struct TruncatedOperator {
    OperatorKind kind;
    SymbolPair pair;
    FockParams params;
    std::size_t N;
    Eigen::MatrixXcd matrix;
    /// ||dropped part of T e_n|| / ||T e_n|| per column (0 for zero columns).
    std::vector<double> column_leakage;
    bool leakage_flagged = false;
};

ComplexPolynomial apply_operator(OperatorKind kind, const SymbolPair& pair, const FockParams& params,
                                 const ComplexPolynomial& f);

/// Exact construction from apply_operator on the monomials, with the
/// factorial ratios taken in log space.
TruncatedOperator build_matrix(OperatorKind kind, const SymbolPair& pair, const FockParams& params,
                               std::size_t N);

/// Independent construction: entries as planar quadrature of
/// (alpha/pi) (T e_n)(z) conj(e_m(z)) exp(-alpha|z|^2). The quadrature error
/// is self-estimated against a refined grid; a QuadratureError is thrown when
/// it exceeds tol.
TruncatedOperator build_matrix_quadrature(OperatorKind kind, const SymbolPair& pair,
                                          const FockParams& params, std::size_t N,
                                          double tol = 1e-10);

/// Singular value carried by column n of I_{(c z^k, a z)}:
///   |c| n |a|^(n-1) / (n+k) * sqrt((n+k)! / (n! alpha^k)),  zero for n = 0.
double shift_weights_oracle(std::size_t k, complex c, complex a, const FockParams& params,
                            std::size_t n) noexcept;

}  // namespace fockvol

#endif  // FOCKVOL_OPERATORS_HPP
