// Special-function kernel: the stable-law constant C_alpha, the compensated
// sine integral constant C (series route; the quadrature route lives in
// quadrature.hpp/analytic.hpp), Riemann/Hurwitz zeta machinery used for
// exact moments of the integer Pareto law, and the polylogarithm on the unit
// circle used by the exact finite-size characteristic-function expansions.
#pragma once

#include <complex>
#include <cstdint>

namespace agglab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024310;

// Frozen value of the compensated sine constant C used by the alpha = 1
// closed forms; both live evaluations (series and quadrature) are checked
// against it in the tests.
inline constexpr double kCompensatedSineConstant = 0.4227843350984671394;

// Tail-weight constant of the one-dimensional alpha-stable limit:
//   Gamma(2-alpha) * cos(pi*alpha/2) / (1-alpha)   for alpha != 1,
//   pi/2                                           for alpha == 1.
// Strictly positive on (0,2).
double c_alpha(double alpha);

// C = int_1^inf u^{-2} sin u du + int_0^1 u^{-2} (sin u - u) du evaluated by
// series:  sin(1) - Ci(1) + sum_{k>=1} (-1)^k / ((2k)(2k+1)!),  with
// Ci(1) = gamma + sum_{k>=1} (-1)^k / ((2k)(2k)!).  The independent adaptive
// quadrature evaluation is constant_C() in analytic.hpp; the two must agree
// to 1e-8.
double compensated_sine_constant_series();

// Cosine integral Ci(x) for x in (0, 2], by the standard power series
// gamma + log x + sum_{k>=1} (-x^2)^k / ((2k)(2k)!).
double cosine_integral_small(double x);

// Riemann zeta on the real line, s != 1.  Euler-Maclaurin for s > 0 and the
// functional equation for s <= 0 (needed for polylog series coefficients).
double riemann_zeta(double s);

// Hurwitz zeta zeta(s, a) for real s != 1 and a >= 1, by Euler-Maclaurin
// after shifting a past a fixed threshold.  Used for partial-sum tails.
double hurwitz_zeta(double s, double a);

// Harmonic number H_n = sum_{k=1}^n 1/k (asymptotic expansion for large n).
double harmonic_number(std::uint64_t n);

// Partial power sum  sum_{k=1}^K k^{-p}  for real p; exact compensated
// summation for moderate K, zeta-tail evaluation for large K.
double power_sum(double p, std::uint64_t K);

// Polylogarithm on the unit circle, Li_s(e^{iu}), for s in (0,2), s != 1 and
// 0 < |u| <= 0.5, by the singular expansion
//   Li_s(e^{iu}) = Gamma(1-s) (-iu)^{s-1} + sum_{k>=0} zeta(s-k) (iu)^k / k!.
std::complex<double> polylog_unit_circle(double s, double u);

}  // namespace agglab
