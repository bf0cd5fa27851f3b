#include "agglab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agglab {

ECFEstimate ecf(const double* data, std::uint64_t n, std::size_t dim,
                const std::vector<double>& theta) {
    if (n == 0) throw std::invalid_argument("ecf: empty sample");
    if (theta.size() != dim || dim == 0) {
        throw std::invalid_argument("ecf: theta dimension mismatch");
    }
    double sum_c = 0.0, sum_s = 0.0, sum_c2 = 0.0, sum_s2 = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double* row = data + i * dim;
        double dot = 0.0;
        for (std::size_t j = 0; j < dim; ++j) dot += theta[j] * row[j];
        const double c = std::cos(dot);
        const double s = std::sin(dot);
        sum_c += c;
        sum_s += s;
        sum_c2 += c * c;
        sum_s2 += s * s;
    }
    const double nd = static_cast<double>(n);
    const double mean_c = sum_c / nd;
    const double mean_s = sum_s / nd;
    // Population-normalized variances keep stderr_ <= sqrt(2/n) exactly.
    const double var_c = std::max(0.0, sum_c2 / nd - mean_c * mean_c);
    const double var_s = std::max(0.0, sum_s2 / nd - mean_s * mean_s);

    ECFEstimate e;
    e.theta = theta;
    e.value = ComplexCF{mean_c, mean_s};
    e.stderr_ = std::sqrt((var_c + var_s) / nd);
    e.n = n;
    return e;
}

ECFEstimate ecf(const std::vector<double>& flat, std::size_t dim,
                const std::vector<double>& theta) {
    if (dim == 0 || flat.size() % dim != 0) {
        throw std::invalid_argument("ecf: flat sample size is not a multiple of dim");
    }
    return ecf(flat.data(), flat.size() / dim, dim, theta);
}

double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("ks_statistic_two_sample: empty sample");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical(double level, std::uint64_t n) {
    if (!(level > 0.0) || !(level < 1.0) || n == 0) {
        throw std::invalid_argument("ks_critical: need 0 < level < 1 and n >= 1");
    }
    return std::sqrt(-0.5 * std::log(level / 2.0)) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(double level, std::uint64_t n, std::uint64_t m) {
    if (!(level > 0.0) || !(level < 1.0) || n == 0 || m == 0) {
        throw std::invalid_argument("ks_critical_two_sample: need 0 < level < 1 and n, m >= 1");
    }
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    return std::sqrt(-0.5 * std::log(level / 2.0)) * std::sqrt((nd + md) / (nd * md));
}

double quantile_left_continuous(std::vector<double> sample, double p) {
    if (sample.empty()) throw std::invalid_argument("quantile_left_continuous: empty sample");
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument("quantile_left_continuous: p must lie in [0,1]");
    }
    const double n = static_cast<double>(sample.size());
    const std::size_t rank = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(n * p)));
    const std::size_t idx = std::min(rank, sample.size()) - 1;
    std::nth_element(sample.begin(), sample.begin() + static_cast<std::ptrdiff_t>(idx),
                     sample.end());
    return sample[idx];
}

}  // namespace agglab
