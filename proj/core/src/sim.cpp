#include "agglab/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "agglab/binomial.hpp"
#include "agglab/errors.hpp"
#include "agglab/pareto_int.hpp"

namespace agglab {
namespace {

// Copies are processed in fixed-size blocks; workers claim whole blocks, and
// every copy owns the stream (seed, copy index), so any partition of the
// block sequence yields identical bytes.
constexpr std::uint64_t kCopyBlock = 4096;

}  // namespace

void SimConfig::validate() const {
    if (n_copies < 1) throw std::invalid_argument("SimConfig: n_copies must be >= 1");
    if (horizon < 0) throw std::invalid_argument("SimConfig: horizon must be >= 0");
    if (burn_in && *burn_in < 0) {
        throw std::invalid_argument("SimConfig: burn_in must be >= 0");
    }
    if (memory_cap_values < 1) {
        throw std::invalid_argument("SimConfig: memory cap must be positive");
    }
}

int resolved_burn_in(const ModelParams& params, const SimConfig& config) {
    params.validate();
    config.validate();
    if (config.burn_in) return *config.burn_in;
    if (params.m_xi == 0.0) return 1;
    const double bound = std::ceil(std::log(1e-6) / std::log(params.m_xi));
    return std::max(static_cast<int>(bound), 50);
}

double step(double x, const ModelParams& params, Xoshiro256pp& rng) {
    if (!(x >= 0.0)) throw std::invalid_argument("step: state must be >= 0");
    const double survivors = binomial_draw(x, params.m_xi, rng);
    const ParetoIntLaw law{params.alpha};
    return survivors + imm_sample(law, rng.u01());
}

double init_stationary(const ModelParams& params, const SimConfig& config,
                       Xoshiro256pp& rng) {
    const int burn = resolved_burn_in(params, config);
    double x = 0.0;
    for (int i = 0; i < burn; ++i) x = step(x, params, rng);
    return x;
}

PathEnsemble simulate_ensemble(const ModelParams& params, const SimConfig& config,
                               int jobs) {
    params.validate();
    config.validate();
    const std::uint64_t cols = static_cast<std::uint64_t>(config.horizon) + 1;
    if (config.n_copies > config.memory_cap_values / cols) {
        throw ResourceLimitError("simulate_ensemble: N x (horizon+1) exceeds the memory cap");
    }

    PathEnsemble out;
    out.values.resize(config.n_copies * cols);
    out.n_copies = config.n_copies;
    out.horizon = config.horizon;
    out.params = params;
    out.config = config;

    const auto run_copy = [&](std::uint64_t c) {
        Xoshiro256pp rng = Xoshiro256pp::for_stream(config.seed, c);
        double x = init_stationary(params, config, rng);
        double* row = out.values.data() + c * cols;
        row[0] = x;
        for (std::uint64_t j = 1; j < cols; ++j) {
            x = step(x, params, rng);
            row[j] = x;
        }
    };

    const std::uint64_t n_blocks = (config.n_copies + kCopyBlock - 1) / kCopyBlock;
    const int workers =
        std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(n_blocks, 64))));
    if (workers == 1) {
        for (std::uint64_t c = 0; c < config.n_copies; ++c) run_copy(c);
        return out;
    }

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
                    const std::uint64_t lo = b * kCopyBlock;
                    const std::uint64_t hi = std::min(lo + kCopyBlock, config.n_copies);
                    for (std::uint64_t c = lo; c < hi; ++c) run_copy(c);
                }
            } catch (...) {
                if (!failed.exchange(true)) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

PathEnsemble conditional_tail_sample(const PathEnsemble& ensemble, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("conditional_tail_sample: threshold must be > 0");
    const std::uint64_t cols = static_cast<std::uint64_t>(ensemble.horizon) + 1;
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < ensemble.n_copies; ++c) {
        if (ensemble.at(c, 0) > x) ++count;
    }
    if (count < 200) {
        throw InsufficientExceedancesError(
            "conditional_tail_sample: fewer than 200 rows exceed the threshold");
    }
    PathEnsemble out;
    out.values.reserve(count * cols);
    out.n_copies = count;
    out.horizon = ensemble.horizon;
    out.params = ensemble.params;
    out.config = ensemble.config;
    out.config.n_copies = count;
    for (std::uint64_t c = 0; c < ensemble.n_copies; ++c) {
        if (!(ensemble.at(c, 0) > x)) continue;
        for (std::uint64_t j = 0; j < cols; ++j) {
            out.values.push_back(ensemble.at(c, static_cast<int>(j)) / x);
        }
    }
    return out;
}

TailProcessDraw tail_process_draw(const ModelParams& params, int ell_min, int ell_max,
                                  Xoshiro256pp& rng) {
    params.validate();
    if (ell_min > ell_max) {
        throw std::invalid_argument("tail_process_draw: need ell_min <= ell_max");
    }
    TailProcessDraw d;
    d.ell_min = ell_min;
    d.ell_max = ell_max;
    // Fixed draw order and count: Y_0 first, then the geometric uniform,
    // consumed even when m_xi = 0 (where K = 0 almost surely).
    const double u_y = rng.u01();
    const double u_k = rng.u01();
    d.y0 = std::pow(u_y, -1.0 / params.alpha);
    if (params.m_xi > 0.0) {
        // Failures-before-success count with success probability 1 - m^alpha.
        d.K = static_cast<std::uint64_t>(
            std::floor(std::log(u_k) / (params.alpha * std::log(params.m_xi))));
    } else {
        d.K = 0;
    }
    d.values.resize(static_cast<std::size_t>(ell_max - ell_min) + 1);
    for (int ell = ell_min; ell <= ell_max; ++ell) {
        double y;
        if (params.m_xi == 0.0) {
            y = (ell == 0) ? d.y0 : 0.0;  // m^ell is ill-defined for ell < 0
        } else if (ell >= 0) {
            y = std::pow(params.m_xi, ell) * d.y0;
        } else {
            const bool alive = d.K >= static_cast<std::uint64_t>(-ell);
            y = alive ? std::pow(params.m_xi, ell) * d.y0 : 0.0;
        }
        d.values[static_cast<std::size_t>(ell - ell_min)] = y;
    }
    return d;
}

}  // namespace agglab
