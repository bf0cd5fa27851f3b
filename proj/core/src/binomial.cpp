#include "agglab/binomial.hpp"

#include <cmath>
#include <stdexcept>

namespace agglab {
namespace {

// CDF inversion, adequate while n*p stays small: O(n*p + tail) pmf ratio
// walk from k = 0.
double binomial_inversion(double n, double p, Xoshiro256pp& rng) {
    const double q = 1.0 - p;
    const double r = p / q;
    double f = std::exp(n * std::log1p(-p));  // q^n without cancellation
    double u = rng.u01();
    double k = 0.0;
    // Probability beyond mean + 60 sd + 100 is far below 2^-64; the cap only
    // guards against floating-point mass-deficit pathologies.
    const double cap = std::min(n, std::floor(n * p + 60.0 * std::sqrt(n * p * q) + 100.0));
    while (u > f && k < cap) {
        u -= f;
        k += 1.0;
        f *= r * (n - k + 1.0) / k;
    }
    return k;
}

// BTRS transformed rejection (triangle-parallelogram-exponential hat over the
// binomial histogram) with lgamma acceptance; constant expected cost in n.
// Requires p <= 0.5 and n*p large enough that the hat fits (>= 10).
double binomial_btrs(double n, double p, Xoshiro256pp& rng) {
    const double spq = std::sqrt(n * p * (1.0 - p));
    const double b = 1.15 + 2.53 * spq;
    const double a = -0.0873 + 0.0248 * b + 0.01 * p;
    const double c = n * p + 0.5;
    const double v_r = 0.92 - 4.2 / b;
    const double u_rv_r = 0.86 * v_r;
    const double alpha = (2.83 + 5.1 / b) * spq;
    const double lpq = std::log(p / (1.0 - p));
    const double m = std::floor((n + 1.0) * p);
    const double h = std::lgamma(m + 1.0) + std::lgamma(n - m + 1.0);

    for (;;) {
        double v = rng.u01();
        double u;
        if (v <= u_rv_r) {
            // Inside the central box the hat equals the target closely
            // enough that acceptance is immediate.
            u = v / v_r - 0.43;
            return std::floor((2.0 * a / (0.5 - std::fabs(u)) + b) * u + c);
        }
        if (v >= v_r) {
            u = rng.u01() - 0.5;
        } else {
            u = v / v_r - 0.93;
            u = (u < 0.0 ? -0.5 : 0.5) - u;
            v = rng.u01() * v_r;
        }
        const double us = 0.5 - std::fabs(u);
        const double k = std::floor((2.0 * a / us + b) * u + c);
        if (k < 0.0 || k > n) continue;
        v = v * alpha / (a / (us * us) + b);
        if (std::log(v) <=
            h - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) + (k - m) * lpq) {
            return k;
        }
    }
}

}  // namespace

double binomial_draw(double n, double p, Xoshiro256pp& rng) {
    if (!(n >= 0.0) || std::floor(n) != n || !std::isfinite(n)) {
        throw std::invalid_argument("binomial_draw: n must be a nonnegative integer value");
    }
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument("binomial_draw: p must lie in [0,1]");
    }
    if (p <= 0.0 || n == 0.0) return 0.0;
    if (p >= 1.0) return n;
    if (p > 0.5) return n - binomial_draw(n, 1.0 - p, rng);
    if (n * p <= 30.0) return binomial_inversion(n, p, rng);
    return binomial_btrs(n, p, rng);
}

}  // namespace agglab
