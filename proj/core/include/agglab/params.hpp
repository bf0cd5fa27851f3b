// Model parameters of the subcritical branching process with heavy-tailed
// immigration: offspring mean m_xi in [0,1) and immigration tail index
// alpha in (0,2).  alpha == 1 selects the separate log-corrected regime in
// every closed form; values merely *near* 1 are legal but flagged, because
// the alpha/(1-alpha) drift pole is genuine and no interpolation across the
// regimes is attempted.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace agglab {

struct ModelParams {
    double m_xi = 0.0;   // offspring mean, 0 <= m_xi < 1 (subcritical)
    double alpha = 1.0;  // immigration tail index, 0 < alpha < 2

    void validate() const {
        if (!(m_xi >= 0.0) || !(m_xi < 1.0) || !std::isfinite(m_xi)) {
            throw std::invalid_argument("ModelParams: m_xi must lie in [0,1), got " +
                                        std::to_string(m_xi));
        }
        if (!(alpha > 0.0) || !(alpha < 2.0) || !std::isfinite(alpha)) {
            throw std::invalid_argument("ModelParams: alpha must lie in (0,2), got " +
                                        std::to_string(alpha));
        }
    }

    bool is_alpha_one() const { return alpha == 1.0; }

    // True when alpha is within 1e-6 of 1 without being exactly 1.  The
    // alpha != 1 closed forms are still used verbatim (the pole is real);
    // reports carry a domain warning for such parameter choices.
    bool near_alpha_one() const {
        return !is_alpha_one() && std::fabs(alpha - 1.0) < 1e-6;
    }
};

}  // namespace agglab
