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

#include "fockvol/spectra.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "fockvol/quadrature.hpp"

namespace fockvol {

SchattenOrder::SchattenOrder(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("Schatten exponent p must be positive");
}

namespace {

bool columns_structurally_orthogonal(const Eigen::MatrixXcd& A) {
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
        int hits = 0;
        for (Eigen::Index c = 0; c < A.cols(); ++c)
            if (A(r, c) != complex(0.0) && ++hits > 1) return false;
    }
    return true;
}

}  // namespace

SingularSpectrum singular_values(const Eigen::MatrixXcd& matrix) {
    SingularSpectrum S;
    if (matrix.size() == 0) return S;
    if (columns_structurally_orthogonal(matrix)) {
        S.values.reserve(static_cast<std::size_t>(matrix.cols()));
        for (Eigen::Index c = 0; c < matrix.cols(); ++c) S.values.push_back(matrix.col(c).stableNorm());
        // rank is at most min(rows, cols)
        std::sort(S.values.begin(), S.values.end(), std::greater<>());
        S.values.resize(static_cast<std::size_t>(std::min(matrix.rows(), matrix.cols())));
        return S;
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(matrix);
    const auto& sv = svd.singularValues();
    S.values.assign(sv.data(), sv.data() + sv.size());
    std::sort(S.values.begin(), S.values.end(), std::greater<>());
    return S;
}

SingularSpectrum singular_values(const TruncatedOperator& T) { return singular_values(T.matrix); }

double schatten_power_sum(const SingularSpectrum& S, const SchattenOrder& order) {
    std::vector<double> terms;
    terms.reserve(S.values.size());
    for (double v : S.values) terms.push_back(v == 0.0 ? 0.0 : std::pow(v, order.p()));
    return pairwise_sum(terms);
}

double schatten_norm(const SingularSpectrum& S, const SchattenOrder& order) {
    return std::pow(schatten_power_sum(S, order), 1.0 / order.p());
}

std::string to_string(ConvergenceVerdict v) {
    switch (v) {
        case ConvergenceVerdict::Converged: return "Converged";
        case ConvergenceVerdict::Diverging: return "Diverging";
        case ConvergenceVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

// Solves (r1^s - 1) / (1 - r2^-s) = q for s > 0: the increment ratio of a
// tail C N^-s sampled at N0 < N1 < N2 with r1 = N1/N0, r2 = N2/N1.
double fit_tail_exponent(double r1, double r2, double q) {
    auto h = [&](double s) { return (std::pow(r1, s) - 1.0) / (1.0 - std::pow(r2, -s)); };
    const double h0 = std::log(r1) / std::log(r2);
    if (!(q > h0)) return 0.0;
    double lo = 0.0, hi = 64.0;
    if (q >= h(hi)) return hi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) < q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ConvergenceReport assess_partial_sums(std::vector<std::size_t> Ns, std::vector<double> partial_sums,
                                      double p, const ConvergenceThresholds& thresholds) {
    if (Ns.size() < 3 || Ns.size() != partial_sums.size())
        throw std::invalid_argument("convergence assessment needs at least three truncation sizes");
    for (std::size_t i = 1; i < Ns.size(); ++i)
        if (Ns[i] <= Ns[i - 1]) throw std::invalid_argument("truncation sizes must be strictly increasing");

    ConvergenceReport R;
    R.thresholds = thresholds;
    R.Ns = std::move(Ns);
    R.partial_sums = std::move(partial_sums);
    for (double s : R.partial_sums) R.partial_norms.push_back(std::pow(s, 1.0 / p));

    const std::size_t k = R.Ns.size();
    const double s0 = R.partial_sums[k - 3], s1 = R.partial_sums[k - 2], s2 = R.partial_sums[k - 1];
    const double n0 = static_cast<double>(R.Ns[k - 3]);
    const double n1 = static_cast<double>(R.Ns[k - 2]);
    const double n2 = static_cast<double>(R.Ns[k - 1]);

    if (s0 > 0.0 && s1 > 0.0 && s2 > 0.0) {
        const double x[3] = {std::log(n0), std::log(n1), std::log(n2)};
        const double y[3] = {std::log(s0), std::log(s1), std::log(s2)};
        const double xm = (x[0] + x[1] + x[2]) / 3.0, ym = (y[0] + y[1] + y[2]) / 3.0;
        double sxy = 0.0, sxx = 0.0;
        for (int i = 0; i < 3; ++i) {
            sxy += (x[i] - xm) * (y[i] - ym);
            sxx += (x[i] - xm) * (x[i] - xm);
        }
        R.slope = sxy / sxx;
    }
    R.last_relative_increment = s2 > 0.0 ? std::abs(s2 - s1) / s2 : 0.0;
    const double d1 = s1 - s0, d2 = s2 - s1;
    if (d1 > 0.0 && d2 > 0.0) R.tail_exponent = fit_tail_exponent(n1 / n0, n2 / n1, d1 / d2);

    const bool all_zero = std::all_of(R.partial_sums.begin(), R.partial_sums.end(),
                                      [](double s) { return s == 0.0; });
    if (all_zero || R.last_relative_increment < thresholds.plateau)
        R.verdict = ConvergenceVerdict::Converged;
    else if (R.tail_exponent >= thresholds.tail_decay_min)
        R.verdict = ConvergenceVerdict::Converged;
    else if (R.slope > thresholds.slope)
        R.verdict = ConvergenceVerdict::Diverging;
    else
        R.verdict = ConvergenceVerdict::Inconclusive;
    return R;
}

ConvergenceReport convergence_diagnose(OperatorKind kind, const SymbolPair& pair, const FockParams& params,
                                       const SchattenOrder& order, std::span<const std::size_t> Ns,
                                       const ConvergenceThresholds& thresholds) {
    if (Ns.size() < 3) throw std::invalid_argument("convergence diagnosis needs at least three truncation sizes");
    std::vector<double> sums;
    std::vector<double> largest;
    std::vector<bool> flags;
    for (std::size_t N : Ns) {
        const auto T = build_matrix(kind, pair, params, N);
        const auto S = singular_values(T);
        sums.push_back(schatten_power_sum(S, order));
        largest.push_back(S.values.empty() ? 0.0 : S.values.front());
        flags.push_back(T.leakage_flagged);
    }
    auto R = assess_partial_sums(std::vector<std::size_t>(Ns.begin(), Ns.end()), std::move(sums), order.p(),
                                 thresholds);
    R.largest_singular_values = std::move(largest);
    R.leakage_flagged = std::move(flags);
    return R;
}

}  // namespace fockvol
