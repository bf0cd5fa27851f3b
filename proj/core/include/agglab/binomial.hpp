#pragma once

#include "agglab/rng.hpp"

namespace agglab {

// Binomial(n, p) draw.  n is an integer-valued double because simulated
// population states live in doubles (heavy-tailed states can exceed any
// fixed-width integer; values stay exact below 2^53 and the statistical
// error dominates the representation error beyond that).
//
// Sublinear in n: CDF inversion while the expected count is small, and the
// BTRS transformed-rejection sampler (with lgamma acceptance) above -- a
// naive n-fold Bernoulli loop would make heavy-tailed states infeasible.
// p <= 0 returns 0 and p >= 1 returns n, consuming no draws in either case.
double binomial_draw(double n, double p, Xoshiro256pp& rng);

}  // namespace agglab
