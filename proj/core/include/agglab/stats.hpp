#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "agglab/analytic.hpp"

namespace agglab {

// Empirical characteristic function estimate at one theta: the sample mean of
// exp(i<theta, x>) with the combined standard error of its real and imaginary
// parts. stderr_ <= sqrt(2/n) always (the cos/sin variances sum to at most 1).
struct ECFEstimate {
    std::vector<double> theta;
    ComplexCF value;
    double stderr_ = 0.0;
    std::uint64_t n = 0;
};

// data is row-major with `dim` coordinates per sample; theta.size() == dim.
ECFEstimate ecf(const double* data, std::uint64_t n, std::size_t dim,
                const std::vector<double>& theta);
ECFEstimate ecf(const std::vector<double>& flat, std::size_t dim,
                const std::vector<double>& theta);

// Two-sided Kolmogorov-Smirnov distance of a sample against a cdf (one
// sample) or against a second sample. Inputs are copied and sorted.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic two-sided critical values: sqrt(-ln(level/2)/2) scaled by the
// effective sample size.
double ks_critical(double level, std::uint64_t n);
double ks_critical_two_sample(double level, std::uint64_t n, std::uint64_t m);

// Left-continuous empirical quantile: the smallest order statistic whose
// empirical cdf reaches p (1-based rank max{1, ceil(n p)}).
double quantile_left_continuous(std::vector<double> sample, double p);

}  // namespace agglab
