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

#ifndef FOCKVOL_QUADRATURE_HPP
#define FOCKVOL_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fockvol/polynomial.hpp"

namespace fockvol {

/// Pointwise evaluator of a nonnegative integrand on the plane.
using PlaneIntegrand = std::function<double(complex)>;

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pairwise summation in index order; the result depends only on the input
/// order, never on how the terms were produced.
double pairwise_sum(std::span<const double> terms) noexcept;

/// Gauss-Legendre nodes and weights on [lo, hi].
void gauss_legendre(std::size_t n, double lo, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Polar tensor grid on the disc |z| <= radius: Gauss-Legendre in r (the
/// weights already carry the Jacobian r) times the uniform trapezoid rule in
/// the angle. The part of the plane outside the disc is accounted for by
/// tail_bound, a bound on integral_{|z|>R} |z|^degree_hint exp(-beta|z|^2) dm.
struct QuadratureGrid {
    std::vector<double> radial_nodes;
    std::vector<double> radial_weights;
    std::size_t angular_count = 0;
    double radius = 0.0;
    double beta = 0.0;
    int degree_hint = 0;
    double tail_bound = 0.0;

    std::size_t size() const noexcept { return radial_nodes.size() * angular_count; }
    /// Calls visit(z, weight) over every node, offset by center, in a fixed order.
    void for_each_node(complex center, const std::function<void(complex, double)>& visit) const;
};

/// Grid for integrands bounded by C |z|^degree_hint exp(-beta |z|^2)
/// (relative to center) with tail below tol.
QuadratureGrid build_grid(double beta, double tol, int degree_hint);

/// Upper bound on integral_{|z|>R} |z|^degree exp(-beta|z|^2) dm(z).
double gaussian_tail_bound(double beta, double radius, int degree) noexcept;

enum class IntegralStatus { Finite, Divergent };

struct IntegralResult {
    IntegralStatus status = IntegralStatus::Finite;
    double value = 0.0;           ///< meaningful only when Finite
    double error_estimate = 0.0;
    /// Per-annulus contributions for probed integrals; empty for grid integrals.
    std::vector<double> annulus_trace;

    bool finite() const noexcept { return status == IntegralStatus::Finite; }
    static IntegralResult finite_value(double value, double err = 0.0) {
        return {IntegralStatus::Finite, value, err, {}};
    }
};

const char* to_string(IntegralStatus s) noexcept;

/// Integrates f(center + u) over the plane on the grid. Throws QuadratureError
/// if f is not finite at some node.
IntegralResult integrate_plane(const PlaneIntegrand& f, const QuadratureGrid& grid,
                               complex center = 0.0);

/// Radii r0 * 2^k, k = 0..k_max. The disc |z| <= r0 is integrated first,
/// then the annuli r0 2^k < |z| <= r0 2^(k+1).
struct ProbeSchedule {
    double r0 = 1.0;
    int k_max = 8;
    /// Consecutive non-decreasing annulus contributions that declare divergence.
    int trigger = 3;
    /// Annuli with index below this never start a triggering run.
    int first_checked = 1;
    std::size_t radial_nodes = 32;
    std::size_t angular_nodes = 64;
};

/// Annulus-by-annulus integration of a nonnegative integrand. Returns
/// Divergent as soon as `trigger` consecutive positive contributions are
/// non-decreasing; otherwise Finite with the disc plus annuli summed and the
/// geometric extrapolation of the last two annuli as error estimate.
IntegralResult probe_divergence(const PlaneIntegrand& f, const ProbeSchedule& schedule,
                                complex center = 0.0);

}  // namespace fockvol

#endif  // FOCKVOL_QUADRATURE_HPP
