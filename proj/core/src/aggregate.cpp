#include "agglab/aggregate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "agglab/pareto_int.hpp"
#include "agglab/special.hpp"

namespace agglab {
namespace {

void check_grid(const std::vector<double>& t_grid, double t_max_allowed) {
    if (t_grid.empty()) throw std::invalid_argument("aggregation: empty t_grid");
    double prev = -1.0;
    for (double t : t_grid) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw std::invalid_argument("aggregation: t_grid entries must be finite and >= 0");
        }
        if (t < prev) throw std::invalid_argument("aggregation: t_grid must be increasing");
        if (t > t_max_allowed) {
            throw std::invalid_argument("aggregation: t_grid entry beyond the allowed range");
        }
        prev = t;
    }
}

void check_regime(const ModelParams& params, const CenteringMode& centering) {
    const bool alpha_below_one = params.alpha < 1.0;
    const bool alpha_one = params.alpha == 1.0;
    switch (centering.kind) {
        case CenteringKind::none:
            if (!alpha_below_one) {
                throw std::invalid_argument(
                    "iterated_aggregate: uncentered aggregation requires alpha < 1");
            }
            return;
        case CenteringKind::truncated:
            if (!(alpha_below_one || alpha_one)) {
                throw std::invalid_argument(
                    "iterated_aggregate: truncated centering applies for alpha <= 1");
            }
            return;
        case CenteringKind::mean:
            if (!(params.alpha > 1.0)) {
                throw std::invalid_argument(
                    "iterated_aggregate: mean centering requires alpha > 1");
            }
            return;
    }
}

constexpr std::uint64_t kCopyBlock = 4096;

}  // namespace

CenteringMode CenteringMode::truncated(double a, double c_hat) {
    if (!(a > 0.0) || !std::isfinite(c_hat)) {
        throw std::invalid_argument("CenteringMode: truncated needs a > 0 and a finite estimate");
    }
    CenteringMode m;
    m.kind = CenteringKind::truncated;
    m.a = a;
    m.c_hat = c_hat;
    return m;
}

CenteringMode CenteringMode::none() {
    return CenteringMode{};
}

CenteringMode CenteringMode::mean(double mu) {
    if (!std::isfinite(mu)) throw std::invalid_argument("CenteringMode: mean must be finite");
    CenteringMode m;
    m.kind = CenteringKind::mean;
    m.mu = mu;
    return m;
}

double CenteringMode::center_value() const {
    switch (kind) {
        case CenteringKind::truncated: return c_hat;
        case CenteringKind::none: return 0.0;
        case CenteringKind::mean: return mu;
    }
    return 0.0;
}

double truncated_mean_estimate(const std::vector<double>& sample, double a) {
    if (sample.empty()) throw std::invalid_argument("truncated_mean_estimate: empty sample");
    if (!(a > 0.0)) throw std::invalid_argument("truncated_mean_estimate: threshold must be > 0");
    double sum = 0.0, comp = 0.0;
    for (double x : sample) {
        const double contrib = (x <= a) ? x : 0.0;
        const double y = contrib - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(sample.size());
}

AggregateSeries copy_partial_sums(const PathEnsemble& ensemble,
                                  const std::vector<double>& t_grid, double a_N,
                                  const CenteringMode& centering) {
    check_grid(t_grid, 1.0);
    if (!(a_N > 0.0)) throw std::invalid_argument("copy_partial_sums: a_N must be > 0");
    if (centering.kind == CenteringKind::mean && !(ensemble.params.alpha > 1.0)) {
        throw std::invalid_argument("copy_partial_sums: mean centering requires alpha > 1");
    }
    const std::size_t cols = static_cast<std::size_t>(ensemble.horizon) + 1;
    const double center = centering.center_value();
    const double N = static_cast<double>(ensemble.n_copies);

    AggregateSeries out;
    out.t_grid = t_grid;
    out.scaling = a_N;
    out.centering = centering;
    out.values.reserve(t_grid.size());

    std::vector<double> current(cols, 0.0);
    std::vector<double> segment(cols, 0.0);
    std::uint64_t prev_rows = 0;
    for (double t : t_grid) {
        const std::uint64_t rows = static_cast<std::uint64_t>(std::floor(N * t));
        std::fill(segment.begin(), segment.end(), 0.0);
        for (std::uint64_t r = prev_rows; r < rows; ++r) {
            const double* row = ensemble.values.data() + r * cols;
            for (std::size_t c = 0; c < cols; ++c) segment[c] += row[c];
        }
        const double centered_rows = static_cast<double>(rows - prev_rows) * center;
        for (std::size_t c = 0; c < cols; ++c) {
            current[c] += (segment[c] - centered_rows) / a_N;
        }
        out.values.push_back(current);
        prev_rows = rows;
    }
    return out;
}

AggregateSeries iterated_aggregate(const ModelParams& params, std::uint64_t N,
                                   std::uint64_t n, const std::vector<double>& t_grid,
                                   double a_N, const CenteringMode& centering,
                                   std::uint64_t seed, int jobs) {
    params.validate();
    if (n < 2) throw std::invalid_argument("iterated_aggregate: need n >= 2");
    if (N < 1) throw std::invalid_argument("iterated_aggregate: need N >= 1");
    if (!(a_N > 0.0)) throw std::invalid_argument("iterated_aggregate: a_N must be > 0");
    check_grid(t_grid, std::numeric_limits<double>::infinity());
    check_regime(params, centering);

    const double nd = static_cast<double>(n);
    std::vector<std::uint64_t> boundaries;  // floor(n t_i), nondecreasing
    boundaries.reserve(t_grid.size());
    for (double t : t_grid) {
        boundaries.push_back(static_cast<std::uint64_t>(std::floor(nd * t)));
    }
    const std::size_t n_points = t_grid.size();

    // Per-copy partial sums at the grid boundaries, accumulated into
    // per-block slots; the final reduction walks blocks in index order so the
    // bytes do not depend on the worker count.
    const std::uint64_t n_blocks = (N + kCopyBlock - 1) / kCopyBlock;
    std::vector<double> block_totals(n_blocks * n_points, 0.0);

    const auto run_block = [&](std::uint64_t b) {
        double* totals = block_totals.data() + b * n_points;
        const std::uint64_t lo = b * kCopyBlock;
        const std::uint64_t hi = std::min(lo + kCopyBlock, N);
        std::vector<double> partial(n_points);
        for (std::uint64_t c = lo; c < hi; ++c) {
            Xoshiro256pp rng = Xoshiro256pp::for_stream(seed, c);
            SimConfig burn_cfg;  // defaults; only burn-in resolution is used
            double x = init_stationary(params, burn_cfg, rng);
            double acc = 0.0;  // sum_{k=1}^{K} X_k, excludes the seed state
            std::size_t next_point = 0;
            std::uint64_t k = 0;
            while (next_point < n_points) {
                while (next_point < n_points && boundaries[next_point] == k) {
                    partial[next_point++] = acc;
                }
                if (next_point >= n_points) break;
                x = step(x, params, rng);
                acc += x;
                ++k;
            }
            for (std::size_t i = 0; i < n_points; ++i) totals[i] += partial[i];
        }
    };

    const int workers =
        std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(n_blocks, 64))));
    if (workers == 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::uint64_t> next_block{0};
        std::exception_ptr first_error;
        std::atomic<bool> failed{false};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (;;) {
                        const std::uint64_t b = next_block.fetch_add(1);
                        if (b >= n_blocks || failed.load()) return;
                        run_block(b);
                    }
                } catch (...) {
                    if (!failed.exchange(true)) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    const double scaling = (params.alpha == 1.0)
                               ? nd * std::log(nd) * a_N
                               : std::pow(nd, 1.0 / params.alpha) * a_N;
    const double center = centering.center_value();

    AggregateSeries out;
    out.t_grid = t_grid;
    out.scaling = scaling;
    out.centering = centering;
    out.values.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        double total = 0.0;
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            total += block_totals[b * n_points + i];
        }
        const double centered =
            total - static_cast<double>(boundaries[i]) * static_cast<double>(N) * center;
        out.values.push_back({centered / scaling});
    }
    return out;
}

std::uint64_t iterated_copy_schedule(std::uint64_t n, bool cubic) {
    const std::uint64_t floor_copies = 100000;
    const std::uint64_t powered = cubic ? n * n * n : n * n;
    return std::max(floor_copies, powered);
}

}  // namespace agglab
