#include "agglab/pareto_int.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "agglab/errors.hpp"
#include "agglab/special.hpp"

namespace agglab {
namespace {

// pmf(k) = k^{-alpha} - (k+1)^{-alpha}, evaluated without cancellation as
// k^{-alpha} * (1 - (1+1/k)^{-alpha}).
double pareto_pmf(double alpha, double k) {
    return std::pow(k, -alpha) * (-std::expm1(-alpha * std::log1p(1.0 / k)));
}

// E(eps^beta 1{eps <= K}) by summation by parts against the exact tail:
//   sum_{k=1}^K (k^beta - (k-1)^beta) k^{-alpha}  -  K^beta (K+1)^{-alpha}.
// Every summand is nonnegative, so compensated summation holds machine
// accuracy.
double truncated_power_moment(double alpha, double beta, std::uint64_t K) {
    if (K == 0) return 0.0;
    double sum = 0.0, comp = 0.0;
    double prev_pow = 0.0;  // (k-1)^beta
    for (std::uint64_t k = 1; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        const double cur_pow = std::pow(kd, beta);
        const double term = (cur_pow - prev_pow) * std::pow(kd, -alpha);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        prev_pow = cur_pow;
    }
    const double Kd = static_cast<double>(K);
    return sum - std::pow(Kd, beta) * std::pow(Kd + 1.0, -alpha);
}

// E(eps^beta 1{eps > K}) for beta < alpha: direct pmf sum up to
// K0 = max(K, 32), then the binomial expansion of the pmf in 1/k turns the
// remainder into the Hurwitz-zeta series
//   sum_{j >= 1} (-1)^{j+1} ((alpha)_j / j!) zeta(alpha + j - beta, K0 + 1),
// whose terms decay at least like (K0+1)^{-j}; beta < alpha keeps every
// argument right of the zeta pole.
double tail_power_moment(double alpha, double beta, std::uint64_t K) {
    const std::uint64_t K0 = std::max<std::uint64_t>(K, 32);
    double sum = 0.0;
    for (std::uint64_t k = K + 1; k <= K0; ++k) {
        const double kd = static_cast<double>(k);
        sum += std::pow(kd, beta) * pareto_pmf(alpha, kd);
    }
    double signed_coef = 1.0;  // (-1)^j (alpha)_j / j!
    for (int j = 1; j <= 64; ++j) {
        signed_coef *= -(alpha + j - 1.0) / j;
        const double term =
            -signed_coef * hurwitz_zeta(alpha + j - beta, static_cast<double>(K0) + 1.0);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

void ParetoIntLaw::validate() const {
    if (!(alpha > 0.0) || !(alpha < 2.0)) {
        throw std::invalid_argument("ParetoIntLaw: alpha must lie in (0,2)");
    }
}

double imm_sample(const ParetoIntLaw& law, double u) {
    law.validate();
    if (!(u > 0.0) || !(u < 1.0)) {
        throw std::invalid_argument("imm_sample: u must lie strictly inside (0,1)");
    }
    return std::floor(std::pow(u, -1.0 / law.alpha));
}

double imm_tail(const ParetoIntLaw& law, double x) {
    law.validate();
    if (!(x >= 0.0)) throw std::invalid_argument("imm_tail: x must be >= 0");
    return std::pow(std::floor(x) + 1.0, -law.alpha);
}

double imm_mean(const ParetoIntLaw& law) {
    law.validate();
    if (law.alpha <= 1.0) {
        throw std::domain_error("imm_mean: infinite mean for alpha <= 1");
    }
    return riemann_zeta(law.alpha);
}

double imm_truncated_mean(const ParetoIntLaw& law, double cap) {
    law.validate();
    if (!(cap >= 0.0)) throw std::invalid_argument("imm_truncated_mean: cap must be >= 0");
    if (cap < 1.0) return 0.0;
    const std::uint64_t K = static_cast<std::uint64_t>(std::floor(cap));
    const double Kd = static_cast<double>(K);
    return power_sum(law.alpha, K) - Kd * std::pow(Kd + 1.0, -law.alpha);
}

double imm_truncated_second_moment(const ParetoIntLaw& law, double cap) {
    law.validate();
    if (!(cap >= 0.0)) {
        throw std::invalid_argument("imm_truncated_second_moment: cap must be >= 0");
    }
    if (cap < 1.0) return 0.0;
    const std::uint64_t K = static_cast<std::uint64_t>(std::floor(cap));
    const double Kd = static_cast<double>(K);
    // sum (2k-1) k^{-alpha} - K^2 (K+1)^{-alpha}
    return 2.0 * power_sum(law.alpha - 1.0, K) - power_sum(law.alpha, K) -
           Kd * Kd * std::pow(Kd + 1.0, -law.alpha);
}

double scaling_aN(std::uint64_t N, const ModelParams& params, ScalingMode mode,
                  const std::vector<double>* stationary_sample) {
    params.validate();
    if (N == 0) throw std::invalid_argument("scaling_aN: N must be >= 1");
    if (mode == ScalingMode::asymptotic) {
        const double denom = 1.0 - std::pow(params.m_xi, params.alpha);
        return std::max(std::pow(static_cast<double>(N) / denom, 1.0 / params.alpha) - 1.0,
                        1.0);
    }
    if (stationary_sample == nullptr) {
        throw std::invalid_argument("scaling_aN: empirical mode requires a stationary sample");
    }
    if (stationary_sample->size() < N) {
        throw InsufficientSampleError(
            "scaling_aN: empirical mode needs a stationary sample of size >= N");
    }
    // Left-continuous (1 - 1/N) quantile: the smallest order statistic whose
    // empirical cdf reaches the level. With n sample points the 1-based rank
    // is ceil(n (1 - 1/N)) = n - floor(n/N), computed in integers to dodge
    // rounding at exact-quantile levels.
    std::vector<double> work(*stationary_sample);
    const std::size_t n = work.size();
    const std::size_t rank = std::max<std::size_t>(1, n - static_cast<std::size_t>(n / N));
    std::nth_element(work.begin(), work.begin() + (rank - 1), work.end());
    return std::max(work[rank - 1], 1.0);
}

double ScalingSequence::at(std::uint64_t N, const ModelParams& params) const {
    return scaling_aN(N, params, mode,
                      stationary_sample.empty() ? nullptr : &stationary_sample);
}

double karamata_limit(double beta, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::invalid_argument("karamata_limit: need finite beta and alpha > 0");
    }
    return beta >= alpha ? (beta - alpha) / alpha : (alpha - beta) / alpha;
}

double truncated_moment_ratio(const ParetoIntLaw& law, double beta, double x) {
    law.validate();
    if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(beta)) {
        throw std::invalid_argument("truncated_moment_ratio: need finite beta and x > 0");
    }
    if (x >= 9.0e18) {
        throw std::invalid_argument("truncated_moment_ratio: threshold too large");
    }
    const double num = std::pow(x, beta) * imm_tail(law, x);
    const std::uint64_t K = static_cast<std::uint64_t>(std::floor(x));
    if (beta >= law.alpha) {
        const double den = truncated_power_moment(law.alpha, beta, K);
        if (!(den > 0.0)) {
            throw std::domain_error("truncated_moment_ratio: no mass at or below the threshold");
        }
        return num / den;
    }
    // eps >= 1 almost surely, so the tail moment is strictly positive.
    return num / tail_power_moment(law.alpha, beta, K);
}

double truncated_moment_ratio(const std::vector<double>& sample, double beta, double x,
                              MomentForm form) {
    if (sample.empty()) throw std::invalid_argument("truncated_moment_ratio: empty sample");
    if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(beta)) {
        throw std::invalid_argument("truncated_moment_ratio: need finite beta and x > 0");
    }
    const double n = static_cast<double>(sample.size());
    double tail_count = 0.0;
    double moment = 0.0;
    for (double y : sample) {
        const bool above = y > x;
        if (above) tail_count += 1.0;
        if (above == (form == MomentForm::tail_above)) moment += std::pow(y, beta);
    }
    if (!(moment > 0.0)) {
        throw std::domain_error("truncated_moment_ratio: selected moment carries no mass");
    }
    return std::pow(x, beta) * (tail_count / n) / (moment / n);
}

double hill_estimate(const std::vector<double>& sample, std::size_t m) {
    if (m < 2 || m >= sample.size()) {
        throw std::invalid_argument("hill_estimate: need 2 <= m < sample size");
    }
    std::vector<double> top(sample);
    std::partial_sort(top.begin(), top.begin() + m + 1, top.end(), std::greater<double>());
    // Block is descending, so positivity of the (m+1)-th largest covers all.
    if (!(top[m] > 0.0)) {
        throw InvalidSampleError("hill_estimate: non-positive value in the top order block");
    }
    const double log_ref = std::log(top[m]);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += std::log(top[i]) - log_ref;
    if (!(sum > 0.0)) {
        throw InvalidSampleError("hill_estimate: degenerate (zero) log-spacings");
    }
    return static_cast<double>(m) / sum;
}

std::size_t hill_default_m(std::size_t n) {
    return static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 0.6)));
}

}  // namespace agglab
