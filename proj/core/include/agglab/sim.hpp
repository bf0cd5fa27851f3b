#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "agglab/params.hpp"
#include "agglab/rng.hpp"

namespace agglab {

// Ensemble simulation plan. burn_in left empty selects the automatic value
// max{ceil(log 1e-6 / log m_xi), 50} for m_xi > 0 (geometric forgetting to
// sub-1e-6 total-variation bias, with a safety floor) and 1 for m_xi = 0
// (one step from 0 is already an exact stationary draw).
struct SimConfig {
    std::uint64_t n_copies = 1;               // N, independent copies
    int horizon = 0;                          // stored generations beyond index 0
    std::uint64_t seed = 0;                   // master seed; copies split off it
    std::optional<int> burn_in;               // empty = automatic
    std::uint64_t memory_cap_values = 250'000'000;  // ensemble size guard

    void validate() const;
};

int resolved_burn_in(const ModelParams& params, const SimConfig& config);

// N x (horizon+1) row-major ensemble of stationary paths. States are stored
// as integer-valued doubles: heavy-tailed states can exceed any fixed-width
// integer, and below 2^53 the doubles are exact.
struct PathEnsemble {
    std::vector<double> values;
    std::uint64_t n_copies = 0;
    int horizon = 0;
    ModelParams params;
    SimConfig config;

    double at(std::uint64_t copy, int coord) const {
        return values[copy * static_cast<std::uint64_t>(horizon + 1) +
                      static_cast<std::uint64_t>(coord)];
    }
};

// One generation of the recursion: Binomial(x, m_xi) offspring survivors plus
// a fresh immigration draw. Draw order is fixed (binomial first, then the
// immigration uniform) as part of the reproducibility contract.
double step(double x, const ModelParams& params, Xoshiro256pp& rng);

// Approximate stationary draw: burn-in from state 0.
double init_stationary(const ModelParams& params, const SimConfig& config,
                       Xoshiro256pp& rng);

// N independent stationary paths. Copy c draws from the dedicated stream
// (seed, c), so the output is bit-identical for any worker count; workers
// only partition the copy range. Throws ResourceLimitError when the value
// count would exceed the configured cap.
PathEnsemble simulate_ensemble(const ModelParams& params, const SimConfig& config,
                               int jobs = 1);

// Rows with X_0 > x, scaled entrywise by 1/x: the empirical conditional law
// of x^{-1}(X_0,...,X_k) given X_0 > x. Fewer than 200 exceedance rows throw
// InsufficientExceedancesError.
PathEnsemble conditional_tail_sample(const PathEnsemble& ensemble, double x);

// One draw of the forward tail process on a contiguous index window:
//   Y_ell = m^ell * Y_0                  for ell >= 0,
//   Y_ell = m^ell * Y_0 * 1{K >= -ell}   for ell < 0,
// with Y_0 continuous Pareto (P(Y_0 > y) = y^{-alpha}, y >= 1) and K
// geometric, P(K = k) = m^{alpha k} (1 - m^alpha).
struct TailProcessDraw {
    double y0 = 1.0;
    std::uint64_t K = 0;
    int ell_min = 0;
    int ell_max = 0;
    std::vector<double> values;  // Y_ell for ell in [ell_min, ell_max]

    double at(int ell) const {
        return values[static_cast<std::size_t>(ell - ell_min)];
    }
};

// Consumes exactly two uniforms (Y_0, then K) regardless of parameters.
TailProcessDraw tail_process_draw(const ModelParams& params, int ell_min, int ell_max,
                                  Xoshiro256pp& rng);

}  // namespace agglab
