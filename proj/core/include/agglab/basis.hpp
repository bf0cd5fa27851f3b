#pragma once

#include <vector>

#include "agglab/params.hpp"

namespace agglab {

// Rays of the (k+1)-dimensional limit law's Levy measure.  vectors[j] (j >= 1)
// is the direction contributed by immigration arriving j steps into the
// observation window: a unit burst followed by its geometric offspring decay.
// vectors[0] carries everything that immigrated before the window opened;
// summing that geometric history is what produces the (1-m^a)^{-1/a}
// normalization on the leading ray.
struct StableBasis {
    int k = 0;
    // (k+1) vectors, each of length (k+1); vectors[j][ell] is coordinate ell.
    std::vector<std::vector<double>> vectors;
};

// Exact ray directions for horizon k:
//   vectors[0] = (1 - m^a)^{-1/a} * (1, m, m^2, ..., m^k)
//   vectors[j] = (0, ..., 0, 1, m, ..., m^{k-j})            for j >= 1
// The system is triangular, hence linearly independent.
StableBasis basis_vectors(int k, const ModelParams& params);

}  // namespace agglab
