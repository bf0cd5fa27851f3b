#include "agglab/special.hpp"

#include <cmath>
#include <stdexcept>

namespace agglab {
namespace {

// Bernoulli numbers B_2, B_4, ..., B_16 for the Euler-Maclaurin tail.
constexpr double kBernoulli2j[8] = {
    1.0 / 6.0,     -1.0 / 30.0,    1.0 / 42.0,    -1.0 / 30.0,
    5.0 / 66.0,    -691.0 / 2730.0, 7.0 / 6.0,    -3617.0 / 510.0,
};

// zeta(s, a) for a >= 24 via Euler-Maclaurin:
//   a^{1-s}/(s-1) + a^{-s}/2 + sum_j B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * a^{-s-2j+1}
double hurwitz_em_tail(double s, double a) {
    double result = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
    double rising = s;                       // (s)(s+1)...(s+2j-2), starts at j=1 term s
    double apow = std::pow(a, -s - 1.0);     // a^{-s-2j+1} at j=1
    double factorial = 2.0;                  // (2j)! at j=1
    const double a2 = a * a;
    for (int j = 1; j <= 8; ++j) {
        result += kBernoulli2j[j - 1] / factorial * rising * apow;
        // advance to j+1
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        apow /= a2;
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return result;
}

}  // namespace

double c_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 2.0)) {
        throw std::invalid_argument("c_alpha: alpha must lie in (0,2)");
    }
    if (alpha == 1.0) return kPi / 2.0;
    // Gamma(2-alpha)*cos(pi*alpha/2)/(1-alpha): both factors flip sign at
    // alpha=1, so the ratio stays positive on the whole interval.
    return std::tgamma(2.0 - alpha) * std::cos(kPi * alpha / 2.0) / (1.0 - alpha);
}

double cosine_integral_small(double x) {
    if (!(x > 0.0) || x > 2.0) {
        throw std::invalid_argument("cosine_integral_small: need 0 < x <= 2");
    }
    double sum = 0.0;
    double term = 1.0;  // (-x^2)^k / (2k)! running value, k from 1
    const double x2 = -x * x;
    for (int k = 1; k <= 24; ++k) {
        term *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
        sum += term / (2.0 * k);
        if (std::fabs(term) < 1e-19) break;
    }
    return kEulerGamma + std::log(x) + sum;
}

double compensated_sine_constant_series() {
    // sum_{k>=1} (-1)^k / ((2k)(2k+1)!)
    double sum = 0.0;
    double fact = 1.0;  // (2k+1)! running value
    double sign = -1.0;
    for (int k = 1; k <= 24; ++k) {
        fact *= (2.0 * k) * (2.0 * k + 1.0);
        const double term = sign / (2.0 * k * fact);
        sum += term;
        sign = -sign;
        if (std::fabs(term) < 1e-19) break;
    }
    return std::sin(1.0) - cosine_integral_small(1.0) + sum;
}

double riemann_zeta(double s) {
    if (s == 1.0) throw std::domain_error("riemann_zeta: pole at s = 1");
    if (s <= 0.0) {
        if (s == 0.0) return -0.5;
        // Functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
        return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * 0.5 * s) *
               std::tgamma(1.0 - s) * riemann_zeta(1.0 - s);
    }
    return hurwitz_zeta(s, 1.0);
}

double hurwitz_zeta(double s, double a) {
    if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (!(a >= 1.0)) throw std::invalid_argument("hurwitz_zeta: need a >= 1");
    double head = 0.0;
    while (a < 24.0) {
        head += std::pow(a, -s);
        a += 1.0;
    }
    return head + hurwitz_em_tail(s, a);
}

double harmonic_number(std::uint64_t n) {
    if (n == 0) return 0.0;
    if (n <= 200000) {
        // Compensated (Kahan) summation from the small end up.
        double sum = 0.0, comp = 0.0;
        for (std::uint64_t k = n; k >= 1; --k) {
            const double y = 1.0 / static_cast<double>(k) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum;
    }
    const double x = static_cast<double>(n);
    const double ix2 = 1.0 / (x * x);
    return std::log(x) + kEulerGamma + 0.5 / x -
           ix2 * (1.0 / 12.0 - ix2 * (1.0 / 120.0 - ix2 / 252.0));
}

double power_sum(double p, std::uint64_t K) {
    if (K == 0) return 0.0;
    if (p == 1.0) return harmonic_number(K);
    if (K <= 200000) {
        double sum = 0.0, comp = 0.0;
        for (std::uint64_t k = K; k >= 1; --k) {
            const double y = std::pow(static_cast<double>(k), -p) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum;
    }
    // sum_{k<=K} k^{-p} = zeta(p) - zeta(p, K+1); no cancellation danger:
    // for p < 1 the partial sum itself is the large quantity.
    return riemann_zeta(p) - hurwitz_zeta(p, static_cast<double>(K) + 1.0);
}

std::complex<double> polylog_unit_circle(double s, double u) {
    if (!(s > 0.0) || !(s < 2.0) || s == 1.0) {
        throw std::invalid_argument("polylog_unit_circle: need s in (0,2), s != 1");
    }
    if (u == 0.0 || std::fabs(u) > 0.5) {
        throw std::invalid_argument("polylog_unit_circle: need 0 < |u| <= 0.5");
    }
    // Singular part Gamma(1-s) * (-iu)^{s-1}; (-iu) = |u| e^{-i pi/2 sign u}.
    const double mag = std::pow(std::fabs(u), s - 1.0);
    const double phase = -(kPi / 2.0) * (s - 1.0) * (u > 0 ? 1.0 : -1.0);
    std::complex<double> result =
        std::tgamma(1.0 - s) * mag * std::complex<double>(std::cos(phase), std::sin(phase));
    // Taylor part sum_k zeta(s-k) (iu)^k / k!; |u| <= 0.5 makes 12 terms ample.
    std::complex<double> iu_pow(1.0, 0.0);
    const std::complex<double> iu(0.0, u);
    double kfact = 1.0;
    for (int k = 0; k <= 12; ++k) {
        result += riemann_zeta(s - k) * iu_pow / kfact;
        iu_pow *= iu;
        kfact *= (k + 1.0);
    }
    return result;
}

}  // namespace agglab
