#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agglab/aggregate.hpp"
#include "agglab/analytic.hpp"
#include "agglab/params.hpp"

namespace agglab {

// Monte Carlo budgets and tolerances shared by the verification checks.
// Defaults are sized so the full default suite finishes in a couple of
// minutes on one core; callers needing acceptance-grade sizes raise them
// explicitly.
struct CheckSettings {
    double z_max = 4.0;            // per-point z gate for ECF comparisons
    double bias_allowance = 0.02;  // finite-size CF bias absorbed before z

    std::uint64_t cf_copies = 30000;      // N per replication in CF checks
    std::uint64_t cf_reps = 120;          // replications = ECF sample size
    std::uint64_t center_pool = 1000000;  // independent draws behind c_hat

    std::uint64_t tail_N = 1000000;  // ensemble size for tail checks
    double quantile_level = 0.999;   // tail threshold quantile
    double tail_z_max = 3.0;         // z gate for tail-ratio points
    double ks_level = 0.01;          // KS significance level

    std::uint64_t iter_n = 50;             // time scale of iterated runs
    std::uint64_t iter_reps = 60;          // replications of iterated runs
    std::optional<std::uint64_t> iter_N;   // overrides the N(n) schedule
    bool iter_cubic_schedule = false;      // N = n^3 instead of max{1e5, n^2}
    double iter_alpha1_mean_tol = 0.10;    // |mean - t| gate at alpha = 1
    double iter_alpha1_spread_tol = 0.15;  // replication sd gate at alpha = 1

    double karamata_rel_tol = 0.02;  // relative gate at the largest x

    int k = 1;     // window coordinates beyond index 0
    int jobs = 1;  // worker count; never affects result bytes

    void validate() const;
};

// One compared quantity inside a report: an ECF grid point, a KS distance,
// or a scalar ratio, depending on the check.
struct CheckPoint {
    std::string label;
    std::vector<double> theta;  // grid point; empty for scalar statistics
    double observed_re = 0.0;
    double observed_im = 0.0;
    double expected_re = 0.0;
    double expected_im = 0.0;
    double stderr_ = 0.0;
    double z = 0.0;
    bool pass = true;
};

struct VerificationReport {
    std::string check;
    ModelParams params;
    std::map<std::string, std::uint64_t> sizes;  // ordered for stable output
    std::vector<CheckPoint> points;
    double max_abs_diff = 0.0;
    bool pass = true;
    std::string tolerance_policy;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;  // serialized only into the metadata sidecar
    std::vector<std::string> warnings;
};

// Coarse symmetric default grids: {-2,-1,-0.5,0,0.5,1,2} for scalars, the
// {-2,0,2}^dim product beyond (3^dim points).
std::vector<std::vector<double>> default_theta_grid(std::size_t dim);

// Scaled copy-sums with truncated-mean centering vs the window CF: per
// replication, cf_copies stationary copies are summed over a (k+1)-window,
// centered by an independently estimated truncated mean, scaled by a_N; the
// replication ECF is compared pointwise to cf_mu with z-scores that combine
// the ECF standard error and the propagated center-estimate noise.
VerificationReport check_copy_sum_cf(const ModelParams& params, std::uint64_t seed,
                                     const CheckSettings& settings,
                                     const std::vector<std::vector<double>>& theta_grid = {});

// Which centering the shifted-law check applies; auto picks none for
// alpha < 1 and mean for alpha > 1 (the strictly stable regimes).
enum class ShiftedCenterChoice { auto_by_alpha, truncated, none, mean };

// Same machinery against the drift-shifted strictly stable CF (or against
// the plain window CF when the truncated centering is requested explicitly).
VerificationReport check_shifted_copy_sum_cf(
    const ModelParams& params, std::uint64_t seed, const CheckSettings& settings,
    ShiftedCenterChoice mode = ShiftedCenterChoice::auto_by_alpha,
    const std::vector<std::vector<double>>& theta_grid = {});

// Iterated aggregation vs its scalar limit: for alpha != 1, replication ECFs
// of the value at each t against exp(t * log cf_Z(shifted)); for alpha = 1,
// concentration of the value near t (mean and spread gates).
VerificationReport check_iterated_cf(const ModelParams& params, std::uint64_t seed,
                                     const CheckSettings& settings,
                                     const std::vector<double>& t_points = {});

// Stationary-tail constant and the window sum-tail ratio at the empirical
// quantile threshold, each within tail_z_max binomial-delta standard errors.
VerificationReport check_tail_ratio(const ModelParams& params, std::uint64_t seed,
                                    const CheckSettings& settings);

// Conditional law above the threshold vs the forward tail process margins:
// per-coordinate KS against m^j-scaled Pareto(alpha) (coordinate collapse
// diagnostic instead when m = 0).
VerificationReport check_forward_tail(const ModelParams& params, std::uint64_t seed,
                                      const CheckSettings& settings);

// Exact-law truncated-moment ratios along an x grid vs the Karamata limit;
// the largest grid point carries the relative-error gate (strict decrease
// when the limit is 0 at beta = alpha).
VerificationReport check_karamata(const ModelParams& params, double beta,
                                  const CheckSettings& settings,
                                  const std::vector<double>& x_grid = {});

}  // namespace agglab
