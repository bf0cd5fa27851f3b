#pragma once

#include <cstdint>
#include <vector>

#include "agglab/params.hpp"

namespace agglab {

// Integer-Pareto immigration law: support {1, 2, 3, ...} with exact tail
// P(eps >= k) = k^{-alpha}. The pure power makes every tail computation exact
// and keeps the slowly varying factor of the scaling sequence constant.
struct ParetoIntLaw {
    double alpha = 1.0;  // tail index, must lie in (0,2)

    void validate() const;
};

// Inverse-transform draw: floor(u^{-1/alpha}) for u in (0,1), which realizes
// P(eps >= k) = k^{-alpha} exactly. Returned as an integer-valued double;
// values beyond 2^53 (possible for small alpha) are approximate, which is
// harmless because the statistical error dominates at that magnitude.
double imm_sample(const ParetoIntLaw& law, double u);

// Exact tail function P(eps > x) = (floor(x)+1)^{-alpha} for x >= 0.
double imm_tail(const ParetoIntLaw& law, double x);

// E(eps) = zeta(alpha); domain error for alpha <= 1 (infinite mean).
double imm_mean(const ParetoIntLaw& law);

// Exact truncated moments E(eps 1{eps <= cap}) and E(eps^2 1{eps <= cap}),
// evaluated by summation by parts against the exact tail (no pmf subtraction,
// so no cancellation). cap >= 0; cap is floored to an integer count.
double imm_truncated_mean(const ParetoIntLaw& law, double cap);
double imm_truncated_second_moment(const ParetoIntLaw& law, double cap);

// Scaling sequence a_N for the aggregation limits.
//
//   asymptotic: max{ (N/(1-m^alpha))^{1/alpha} - 1, 1 }, inverting
//               N * imm_tail(a) / (1 - m^alpha) = 1 against the exact
//               stationary-tail asymptotic.
//   empirical:  max{ left-continuous (1-1/N) quantile of the sample, 1 };
//               requires a stationary sample of size >= N
//               (InsufficientSampleError otherwise).
enum class ScalingMode { asymptotic, empirical };

double scaling_aN(std::uint64_t N, const ModelParams& params, ScalingMode mode,
                  const std::vector<double>* stationary_sample = nullptr);

// On-demand scaling sequence N -> a_N. Owns a copy of the stationary sample
// so empirical mode has no lifetime hazards.
struct ScalingSequence {
    ScalingMode mode = ScalingMode::asymptotic;
    std::vector<double> stationary_sample;  // used only in empirical mode

    double at(std::uint64_t N, const ModelParams& params) const;
};

// Limit of the truncated-moment ratio for a regularly varying law with tail
// index alpha:
//   beta >= alpha: lim x^beta P(Y>x) / E(Y^beta 1{Y<=x}) = (beta-alpha)/alpha
//   beta <  alpha: lim x^beta P(Y>x) / E(Y^beta 1{Y>x})  = (alpha-beta)/alpha
double karamata_limit(double beta, double alpha);

// Which denominator the finite-x ratio uses: the moment truncated below the
// threshold (beta above the tail index) or the tail moment (beta below it).
enum class MomentForm { truncated_below, tail_above };

// Finite-x ratio x^beta P(Y>x) / E(Y^beta 1{...}), exact for the integer
// Pareto law (the form is selected automatically from beta vs alpha, matching
// the regime of karamata_limit) or empirical from a sample (explicit form).
// Throws std::domain_error when the selected denominator carries no mass.
double truncated_moment_ratio(const ParetoIntLaw& law, double beta, double x);
double truncated_moment_ratio(const std::vector<double>& sample, double beta, double x,
                              MomentForm form = MomentForm::truncated_below);

// Hill estimator of the tail index: the reciprocal of the mean log-spacing of
// the top m order statistics relative to the (m+1)-th. Requires 2 <= m and
// m < sample size; non-positive values in the top block or an all-equal top
// block (zero spacings) signal InvalidSampleError.
double hill_estimate(const std::vector<double>& sample, std::size_t m);

// Default top-block size floor(n^0.6).
std::size_t hill_default_m(std::size_t n);

}  // namespace agglab
