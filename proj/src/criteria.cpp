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

#include "fockvol/criteria.hpp"

#include <cmath>
#include <limits>
#include <functional>
#include <optional>

namespace fockvol {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string to_string(TransformWhich which) { return which == TransformWhich::ForI ? "ForI" : "ForC"; }

std::string to_string(MembershipStatus s) { return s == MembershipStatus::Member ? "Member" : "NotMember"; }

std::string to_string(MembershipReason r) {
    switch (r) {
        case MembershipReason::ZeroSymbol: return "ZeroSymbol";
        case MembershipReason::AffineContractive: return "AffineContractive";
        case MembershipReason::AffineNonContractive: return "AffineNonContractive";
        case MembershipReason::NonAffinePsi: return "NonAffinePsi";
    }
    return "?";
}

namespace {

const ComplexPolynomial kIdentity{0.0, 1.0};

const ComplexPolynomial& psi_or_identity(const SymbolPair& pair) { return pair.psi ? *pair.psi : kIdentity; }

// The symbol whose size the criterion integral measures.
ComplexPolynomial criterion_symbol(TransformWhich which, const SymbolPair& pair) {
    return which == TransformWhich::ForI ? pair.g : poly_compose(pair.g, psi_or_identity(pair));
}

// The symbol inside the Berezin-type transform.
ComplexPolynomial transform_symbol(TransformWhich which, const SymbolPair& pair) {
    if (which == TransformWhich::ForI) return pair.g;
    const auto& psi = psi_or_identity(pair);
    return poly_multiply(poly_compose(pair.g, psi), poly_derivative(psi));
}

double log_abs(complex v) { return v == complex(0.0) ? -kInf : std::log(std::abs(v)); }

int degree_or_zero(const ComplexPolynomial& P) { return static_cast<int>(P.degree().value_or(0)); }

// log of |k_w(psi(z))|^s |h(z)|^s exp(-s alpha |z|^2 / 2) (1+|z|)^-s, the
// common shape of every transform-side integrand.
double log_kernel_weight(const FockParams& params, const ComplexPolynomial& psi, const ComplexPolynomial& h,
                         complex w, complex z, double s) {
    const double lh = log_abs(poly_eval(h, z));
    if (lh == -kInf) return -kInf;
    return 0.5 * s *
           (log_normalized_kernel_sq(params, w, poly_eval(psi, z)) + 2.0 * lh - params.alpha() * std::norm(z) -
            2.0 * std::log1p(std::abs(z)));
}

complex transform_center(const ComplexPolynomial& psi, complex w) {
    if (auto affine = AffineMap::from_polynomial(psi)) return std::conj(affine->slope) * w;
    return 0.0;
}

// Gaussian weight below e^-36 relative to its peak is ignored.
constexpr double kNegligibleLog = 36.0;

// Polar grid about the origin when the origin lies inside the Gaussian bulk,
// otherwise about `center` with enough angles to resolve the kink of |z| at 0.
QuadratureGrid adapt_grid(const QuadratureGrid& grid, complex center, complex& grid_center) {
    const double offset = std::abs(center);
    const double x = grid.beta * offset * offset;
    grid_center = center;
    if (offset == 0.0) return grid;
    QuadratureGrid g = grid;
    if (x <= kNegligibleLog) {
        grid_center = 0.0;
        g.radius = grid.radius + offset;
        const auto radial = static_cast<std::size_t>(12.0 + 4.0 * std::ceil(g.radius * std::sqrt(grid.beta))) +
                            static_cast<std::size_t>(grid.degree_hint);
        gauss_legendre(radial, 0.0, g.radius, g.radial_nodes, g.radial_weights);
        for (std::size_t i = 0; i < radial; ++i) g.radial_weights[i] *= g.radial_nodes[i];
        g.angular_count += static_cast<std::size_t>(std::ceil(std::sqrt(60.0 * grid.beta * offset * g.radius)));
        return g;
    }
    std::size_t m = grid.angular_count;
    auto worst = [&](double md) { return 0.5 * md * (std::log(md / (2.0 * x)) - 1.0); };
    while (static_cast<double>(m) < 2.0 * x && worst(static_cast<double>(m)) > -kNegligibleLog) m += 8;
    g.angular_count = m;
    return g;
}

// int over the plane of exp(log_integrand); +inf when it overflows.
double integrate_log_integrand(const std::function<double(complex)>& log_integrand, const QuadratureGrid& grid,
                               complex center) {
    bool overflow = false;
    auto f = [&](complex z) {
        const double v = std::exp(log_integrand(z));
        if (std::isinf(v)) {
            overflow = true;
            return 0.0;
        }
        return v;
    };
    complex grid_center;
    const auto adapted = adapt_grid(grid, center, grid_center);
    const auto r = integrate_plane(f, adapted, grid_center);
    return overflow ? kInf : r.value;
}

}  // namespace

MembershipVerdict classify_symbolic(const SymbolPair& pair, const SchattenOrder&, TransformWhich which) {
    if (criterion_symbol(which, pair).is_zero()) return {MembershipStatus::Member, MembershipReason::ZeroSymbol};
    const auto affine = AffineMap::from_polynomial(psi_or_identity(pair));
    if (!affine) return {MembershipStatus::NotMember, MembershipReason::NonAffinePsi};
    if (std::abs(affine->slope) < 1.0) return {MembershipStatus::Member, MembershipReason::AffineContractive};
    return {MembershipStatus::NotMember, MembershipReason::AffineNonContractive};
}

QuadratureGrid berezin_grid(TransformWhich which, const SymbolPair& pair, const FockParams& params, double tol) {
    return build_grid(params.alpha(), tol, 2 * degree_or_zero(transform_symbol(which, pair)));
}

double berezin_transform(TransformWhich which, const SymbolPair& pair, const FockParams& params, complex w,
                         const QuadratureGrid& grid) {
    const auto h = transform_symbol(which, pair);
    if (h.is_zero()) return 0.0;
    const auto& psi = psi_or_identity(pair);
    const double scale = std::pow(1.0 + std::abs(w), 2.0);
    const double inner = integrate_log_integrand(
        [&](complex z) { return log_kernel_weight(params, psi, h, w, z, 2.0); }, grid, transform_center(psi, w));
    return scale * inner;
}

double berezin_transform(TransformWhich which, const SymbolPair& pair, const FockParams& params, complex w) {
    return berezin_transform(which, pair, params, w, berezin_grid(which, pair, params));
}

BerezinLpResult berezin_lp_integral(TransformWhich which, const SymbolPair& pair, const FockParams& params,
                                    const SchattenOrder& order, const ProbeSchedule& outer, double inner_tol) {
    if (transform_symbol(which, pair).is_zero()) return {IntegralResult::finite_value(0.0), 0.0};
    const auto grid = berezin_grid(which, pair, params, inner_tol);
    const double half_p = 0.5 * order.p();
    auto f = [&](complex w) {
        const double b = berezin_transform(which, pair, params, w, grid);
        return b == 0.0 ? 0.0 : std::pow(b, half_p);
    };
    BerezinLpResult out{probe_divergence(f, outer), kInf};
    if (out.integral.finite()) out.norm_estimate = std::pow(out.integral.value, 1.0 / order.p());
    return out;
}

IntegralResult criterion_integral(TransformWhich which, const SymbolPair& pair, const FockParams& params,
                                  const SchattenOrder& order, CriterionMode mode, double tol,
                                  const ProbeSchedule& schedule) {
    const auto h = criterion_symbol(which, pair);
    const auto& psi = psi_or_identity(pair);
    const double p = order.p();
    const double half_pa = 0.5 * p * params.alpha();
    auto log_integrand = [&](complex z) {
        const double lh = log_abs(poly_eval(h, z));
        if (lh == -kInf) return -kInf;
        return p * lh + half_pa * (std::norm(poly_eval(psi, z)) - std::norm(z));
    };

    if (mode == CriterionMode::Probe) {
        return probe_divergence([&](complex z) { return std::exp(log_integrand(z)); }, schedule);
    }

    const auto verdict = classify_symbolic(pair, order, which);
    if (verdict.reason == MembershipReason::ZeroSymbol) return IntegralResult::finite_value(0.0);
    if (verdict.status == MembershipStatus::NotMember) {
        IntegralResult r;
        r.status = IntegralStatus::Divergent;
        r.value = kInf;
        return r;
    }

    // psi = a z + b with |a| < 1: the exponent is -beta |z - z0|^2 + const
    const auto affine = *AffineMap::from_polynomial(psi);
    const double contraction = 1.0 - std::norm(affine.slope);
    const double beta = half_pa * contraction;
    const complex center = std::conj(affine.slope) * affine.intercept / contraction;
    const int hint = static_cast<int>(std::ceil(p * degree_or_zero(h)));
    const auto grid = build_grid(beta, tol, hint);
    auto f = [&](complex z) { return std::exp(log_integrand(z)); };
    auto r = integrate_plane(f, grid, center);
    // the tail bound is for unit amplitude; scale by the integrand at the center
    r.error_estimate *= std::max(1.0, std::exp(half_pa * (std::norm(poly_eval(psi, center)) - std::norm(center))));
    return r;
}

CompanionReport companion_comparison(const SymbolPair& pair, const FockParams& params, const SchattenOrder& order,
                                     std::span<const std::size_t> Ns, const ConvergenceThresholds& thresholds) {
    SymbolPair full{pair.g, psi_or_identity(pair)};
    CompanionReport R{
        convergence_diagnose(OperatorKind::IgPsi, full, params, order, Ns, thresholds),
        convergence_diagnose(OperatorKind::VgUpperPsi, full, params, order, Ns, thresholds),
        convergence_diagnose(OperatorKind::CgPsi, full, params, order, Ns, thresholds),
        convergence_diagnose(OperatorKind::CgUpperPsi, full, params, order, Ns, thresholds),
    };
    auto converged = [](const ConvergenceReport& r) { return r.verdict == ConvergenceVerdict::Converged; };
    R.i_implies_v = !converged(R.i_branch) || converged(R.v_branch);
    R.c_implies_cu = !converged(R.c_branch) || converged(R.cu_branch);
    return R;
}

EstimateDiagnostics estimate_diagnostics(const SymbolPair& pair, const FockParams& params, double small_p, double large_p,
                                   std::span<const complex> probe_points) {
    EstimateDiagnostics D;
    const auto& psi = psi_or_identity(pair);
    SymbolPair full{pair.g, psi};
    const double alpha = params.alpha();
    const auto& g = pair.g;
    const int gdeg = degree_or_zero(g);

    const auto inner_grid = berezin_grid(TransformWhich::ForI, full, params, 1e-10);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto f = ComplexPolynomial::monomial(n, std::exp(-0.5 * log_monomial_norm_sq(n, alpha)));
        const auto image = apply_operator(OperatorKind::IgPsi, full, params, f);
        const double lhs = poly_inner_product(image, image, params).real();
        const auto df = poly_derivative(f);
        const auto outer = build_grid(alpha, 1e-10, 2 * degree_or_zero(df) + 2 * gdeg + 2);
        auto integrand = [&](complex w) {
            const double b = berezin_transform(TransformWhich::ForI, full, params, w, inner_grid);
            return std::norm(poly_eval(df, w)) * std::exp(-alpha * std::norm(w)) /
                   std::pow(1.0 + std::abs(w), 2.0) * b;
        };
        const double rhs = integrate_plane(integrand, outer).value;
        D.operator_bound_ratios.push_back(lhs / rhs);
    }

    auto kernel_integral = [&](complex w, double s) {
        const auto grid = build_grid(0.5 * s * alpha, 1e-10, static_cast<int>(std::ceil(s * gdeg)));
        return integrate_log_integrand([&](complex z) { return log_kernel_weight(params, psi, g, w, z, s); }, grid,
                                       transform_center(psi, w));
    };
    for (complex w : probe_points) {
        const double two = kernel_integral(w, 2.0);
        const double lo = kernel_integral(w, small_p);
        const double hi = kernel_integral(w, large_p);
        D.small_p_ratios.push_back(two / std::pow(lo, 2.0 / small_p));
        D.large_p_ratios.push_back(hi / std::pow(two, 0.5 * large_p));
    }
    return D;
}

}  // namespace fockvol
