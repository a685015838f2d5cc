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

#ifndef FOCKVOL_CRITERIA_HPP
#define FOCKVOL_CRITERIA_HPP

#include <span>
#include <string>
#include <vector>

#include "fockvol/fock.hpp"
#include "fockvol/operators.hpp"
#include "fockvol/quadrature.hpp"
#include "fockvol/spectra.hpp"

namespace fockvol {

/// ForI measures I_{(g,psi)} through g; ForC measures C_{(g,psi)} through g(psi).
/// A pair without psi is read as psi(z) = z throughout this module.
enum class TransformWhich { ForI, ForC };

std::string to_string(TransformWhich which);

enum class MembershipStatus { Member, NotMember };
enum class MembershipReason { ZeroSymbol, AffineContractive, AffineNonContractive, NonAffinePsi };

struct MembershipVerdict {
    MembershipStatus status;
    MembershipReason reason;
};

std::string to_string(MembershipStatus s);
std::string to_string(MembershipReason r);

/// Exact S_p decision for polynomial symbols: Member iff the measured symbol
/// vanishes identically, or psi(z) = a z + b with |a| < 1. The answer does not
/// depend on p for this class.
MembershipVerdict classify_symbolic(const SymbolPair& pair, const SchattenOrder& order,
                                    TransformWhich which = TransformWhich::ForI);

/// Inner quadrature for the transforms: decay alpha about conj(a) w.
QuadratureGrid berezin_grid(TransformWhich which, const SymbolPair& pair, const FockParams& params,
                            double tol = 1e-10);

/// (1+|w|)^2 int |k_w(psi(z))|^2 |h(z)|^2 exp(-alpha|z|^2) (1+|z|)^-2 dm(z) with
/// h = g (ForI) or h = g(psi) psi' (ForC). Infinite when the integrand overflows.
double berezin_transform(TransformWhich which, const SymbolPair& pair, const FockParams& params, complex w,
                         const QuadratureGrid& grid);
double berezin_transform(TransformWhich which, const SymbolPair& pair, const FockParams& params, complex w);

struct BerezinLpResult {
    IntegralResult integral;  ///< int B(w)^(p/2) dm(w)
    double norm_estimate;     ///< integral^(1/p); infinite when Divergent
};

/// Outer integral through probe_divergence, inner through berezin_grid.
BerezinLpResult berezin_lp_integral(TransformWhich which, const SymbolPair& pair, const FockParams& params,
                                    const SchattenOrder& order, const ProbeSchedule& outer = {},
                                    double inner_tol = 1e-10);

enum class CriterionMode {
    Symbolic,  ///< exponent analysis decides, quadrature only when finite
    Probe,     ///< annulus prober alone, no symbolic shortcut
};

/// int |h(z)|^p exp((p alpha / 2)(|psi(z)|^2 - |z|^2)) dm(z), h = g or g(psi).
IntegralResult criterion_integral(TransformWhich which, const SymbolPair& pair, const FockParams& params,
                                  const SchattenOrder& order, CriterionMode mode = CriterionMode::Symbolic,
                                  double tol = 1e-12, const ProbeSchedule& schedule = {});

struct CompanionReport {
    ConvergenceReport i_branch;   ///< I_{(g,psi)}
    ConvergenceReport v_branch;   ///< V_g^psi
    ConvergenceReport c_branch;   ///< C_{(g,psi)}
    ConvergenceReport cu_branch;  ///< C_g^psi
    /// I Converged implies V Converged, and likewise C implies C_g^psi. The
    /// converse directions are reported, not asserted.
    bool i_implies_v = true;
    bool c_implies_cu = true;
};

CompanionReport companion_comparison(const SymbolPair& pair, const FockParams& params,
                                     const SchattenOrder& order, std::span<const std::size_t> Ns,
                                     const ConvergenceThresholds& thresholds = {});

/// Left-to-right ratios of the two sides of the integral estimates behind the
/// transform criterion, on concrete inputs. Constants are unspecified, so
/// these are only meaningful against an empirical band.
struct EstimateDiagnostics {
    /// ||I_{(g,psi)} e_n||^2 over int |e_n'|^2 e^{-alpha|w|^2} (1+|w|)^-2 B(w) dm(w), n = 1..3.
    std::vector<double> operator_bound_ratios;
    /// Lower-exponent side over higher-exponent side of the kernel-integral
    /// comparison at each probe point w, for p <= 2 and for p > 2.
    std::vector<double> small_p_ratios;
    std::vector<double> large_p_ratios;
};

EstimateDiagnostics estimate_diagnostics(const SymbolPair& pair, const FockParams& params, double small_p,
                                   double large_p, std::span<const complex> probe_points);

}  // namespace fockvol

#endif  // FOCKVOL_CRITERIA_HPP
