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

#ifndef FOCKVOL_SPECTRA_HPP
#define FOCKVOL_SPECTRA_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fockvol/operators.hpp"

namespace fockvol {

/// Schatten exponent p > 0. Below 1 the "norm" is only a quasi-norm.
class SchattenOrder {
public:
    explicit SchattenOrder(double p);
    double p() const noexcept { return p_; }
    bool quasi_norm() const noexcept { return p_ < 1.0; }

private:
    double p_;
};

/// Singular values, nonincreasing.
struct SingularSpectrum {
    std::vector<double> values;
};

/// Dense SVD, except when no two columns share a nonzero row: then T*T is
/// diagonal and the singular values are the column norms, which keeps full
/// relative accuracy on the tiny values of shift-like matrices.
SingularSpectrum singular_values(const Eigen::MatrixXcd& matrix);
SingularSpectrum singular_values(const TruncatedOperator& T);

/// Sum of lambda_n^p, pairwise summed.
double schatten_power_sum(const SingularSpectrum& S, const SchattenOrder& order);
/// (Sum lambda_n^p)^(1/p).
double schatten_norm(const SingularSpectrum& S, const SchattenOrder& order);

enum class ConvergenceVerdict { Converged, Diverging, Inconclusive };
std::string to_string(ConvergenceVerdict v);

/// Heuristic thresholds for reading partial Schatten sums; always echoed in reports.
struct ConvergenceThresholds {
    /// Relative change of the last partial sum below which it has plateaued.
    double plateau = 1e-8;
    /// Fitted log-log growth rate above which the sums diverge.
    double slope = 0.05;
    /// Power-law decay exponent of the increments above which the tail sums.
    double tail_decay_min = 0.25;
};

struct ConvergenceReport {
    std::vector<std::size_t> Ns;
    std::vector<double> partial_sums;   ///< Sum lambda^p at each N
    std::vector<double> partial_norms;  ///< (Sum lambda^p)^(1/p) at each N
    std::vector<double> largest_singular_values;
    std::vector<bool> leakage_flagged;
    double slope = 0.0;
    double last_relative_increment = 0.0;
    /// Exponent s of a fitted tail ~ N^-s from the last two increments; 0 when they do not decay.
    double tail_exponent = 0.0;
    ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
    ConvergenceThresholds thresholds;
};

/// Verdict rules applied to the last three sizes, in order: every sum zero
/// or last relative increment below plateau -> Converged; tail exponent at
/// least tail_decay_min -> Converged; slope above threshold -> Diverging;
/// otherwise Inconclusive.
ConvergenceReport assess_partial_sums(std::vector<std::size_t> Ns, std::vector<double> partial_sums,
                                      double p, const ConvergenceThresholds& thresholds);

/// Requires Ns strictly increasing with at least three sizes.
ConvergenceReport convergence_diagnose(OperatorKind kind, const SymbolPair& pair, const FockParams& params,
                                       const SchattenOrder& order, std::span<const std::size_t> Ns,
                                       const ConvergenceThresholds& thresholds = {});

}  // namespace fockvol

#endif  // FOCKVOL_SPECTRA_HPP
