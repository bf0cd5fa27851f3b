#include "agglab/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace agglab {

StableBasis basis_vectors(int k, const ModelParams& params) {
    params.validate();
    if (k < 0) throw std::invalid_argument("basis_vectors: horizon k must be >= 0");
    const double m = params.m_xi;
    const double a = params.alpha;

    StableBasis basis;
    basis.k = k;
    basis.vectors.assign(static_cast<std::size_t>(k) + 1,
                         std::vector<double>(static_cast<std::size_t>(k) + 1, 0.0));
    const double head = std::pow(1.0 - std::pow(m, a), -1.0 / a);
    for (int j = 0; j <= k; ++j) {
        auto& v = basis.vectors[static_cast<std::size_t>(j)];
        double geo = (j == 0) ? head : 1.0;
        for (int ell = j; ell <= k; ++ell) {
            v[static_cast<std::size_t>(ell)] = geo;
            geo *= m;
        }
    }
    return basis;
}

}  // namespace agglab
