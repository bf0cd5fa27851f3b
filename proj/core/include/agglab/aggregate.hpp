#pragma once

#include <cstdint>
#include <vector>

#include "agglab/params.hpp"
#include "agglab/sim.hpp"

namespace agglab {

// Per-copy centering applied inside the aggregation functionals.
//   truncated(a, c_hat): subtract an externally estimated truncated mean
//                        E(X 1{X <= a}); valid for every alpha in (0,2).
//   none:                no centering; valid for alpha < 1.
//   mean(mu):            subtract the exact stationary mean; needs alpha > 1.
enum class CenteringKind { truncated, none, mean };

struct CenteringMode {
    CenteringKind kind = CenteringKind::none;
    double a = 0.0;      // truncation threshold (truncated)
    double c_hat = 0.0;  // estimated truncated mean (truncated)
    double mu = 0.0;     // exact stationary mean (mean)

    static CenteringMode truncated(double a, double c_hat);
    static CenteringMode none();
    static CenteringMode mean(double mu);

    // The per-copy value subtracted before scaling.
    double center_value() const;
};

// Scaled, centered partial-sum values along a time grid. For copy sums each
// grid point carries a (horizon+1)-vector; iterated aggregation is scalar.
struct AggregateSeries {
    std::vector<double> t_grid;
    std::vector<std::vector<double>> values;
    double scaling = 1.0;
    CenteringMode centering;
};

// Average of x 1{x <= a} over the sample (values above a contribute zero).
double truncated_mean_estimate(const std::vector<double>& sample, double a);

// Copy-indexed partial sums: for each t the rows 1..floor(N t) of the
// ensemble are summed per coordinate, centered by floor(N t) times the
// center value, and divided by a_N. Values are built by prefix-summing the
// per-interval increments, so adjacent-grid telescoping is exact in floating
// point. Requires an increasing t_grid inside [0,1]; mean centering is
// rejected for alpha <= 1.
AggregateSeries copy_partial_sums(const PathEnsemble& ensemble,
                                  const std::vector<double>& t_grid, double a_N,
                                  const CenteringMode& centering);

// Iterated temporal aggregation: simulate N stationary copies to horizon
// floor(n t_max) and form, per grid point t,
//   ( sum_{k=1}^{floor(n t)} sum_{j=1}^{N} X_k^{(j)}
//     - floor(n t) * N * center ) / scaling,
// scaling = n^{1/alpha} a_N for alpha != 1 and n log(n) a_N for alpha = 1.
// The generation-0 states seed the recursion but are excluded from the sums.
// Copies stream through dedicated (seed, copy) generators and reduce in fixed
// block order, so the result is bit-identical for any jobs count and never
// materializes the N x horizon ensemble. Centering must match the regime:
// truncated or none for alpha < 1, truncated at alpha = 1, mean for
// alpha > 1.
AggregateSeries iterated_aggregate(const ModelParams& params, std::uint64_t N,
                                   std::uint64_t n, const std::vector<double>& t_grid,
                                   double a_N, const CenteringMode& centering,
                                   std::uint64_t seed, int jobs = 1);

// Copy-count schedule tying the inner limit to the time scale: N = max{1e5,
// n^2} by default, the steeper n^3 alternative on request.
std::uint64_t iterated_copy_schedule(std::uint64_t n, bool cubic = false);

}  // namespace agglab
