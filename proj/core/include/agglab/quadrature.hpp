// Adaptive quadrature for the compensated jump integrals behind every
// alpha-stable exponent in this project.  Strategy for an oscillatory
// power-law integrand e^{icu} u^{-1-alpha} on (0, infinity):
//   * (0,1]: a power substitution removes the integrable singularity at 0,
//     then ordinary adaptive quadrature applies;
//   * [1,U]: adaptive quadrature on panels no longer than one half-period,
//     U chosen so that |c| U is deep in the asymptotic regime;
//   * [U,inf): integration-by-parts asymptotic series (naive truncation of
//     an oscillatory improper integral is wrong in the third decimal, which
//     is exactly the failure mode this module exists to avoid).
#pragma once

#include <complex>
#include <functional>

#include "agglab/errors.hpp"

namespace agglab {

struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_subdivisions = 200;   // adaptive workspace intervals per panel
    double upper_cutoff = 1e6;    // truncation point for improper integrals

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
            throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
        }
        if (!(upper_cutoff > 1.0)) {
            throw std::invalid_argument("QuadratureConfig: upper_cutoff must be > 1");
        }
        if (max_subdivisions < 8) {
            throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 8");
        }
    }
};

// Adaptive integration of f over the finite interval [a,b].  Throws
// QuadratureError when the requested tolerances cannot be certified.  The
// optional out-parameter receives the error estimate.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg, double* abs_err = nullptr);

// int_U^inf u^{-p} e^{icu} du  by the integration-by-parts series
//   -e^{icU} sum_{s=0}^{S-1} g^(s)(U) / (ic)^{s+1},  g(u) = u^{-p},
// valid once |c| U >> p.  The optional out-parameter receives a bound on the
// truncation remainder (magnitude of the first omitted term).
std::complex<double> oscillatory_power_tail(double p, double c, double U,
                                            double* err_bound = nullptr);

// Compensated Levy exponent integral
//   J(c) = int_0^inf (e^{icu} - 1 - icu 1{u<=1}) alpha u^{-1-alpha} du,
// the building block of every characteristic-function exponent here.
// Finite for all alpha in (0,2) including alpha = 1.
std::complex<double> levy_exponent_integral(double c, double alpha,
                                            const QuadratureConfig& cfg);

// Pure (uncompensated) variant int_0^inf (e^{icu} - 1) alpha u^{-1-alpha} du,
// absolutely convergent only for alpha < 1.  Throws std::domain_error above.
std::complex<double> levy_exponent_integral_pure(double c, double alpha,
                                                 const QuadratureConfig& cfg);

}  // namespace agglab
