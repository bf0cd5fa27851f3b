// Closed-form limit objects vs frozen independent-oracle values, plus the
// exact structural identities the laws must satisfy.  Oracle values were
// computed at 25-digit precision from the defining formulas before this
// library existed; tolerances are absolute.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "agglab/analytic.hpp"
#include "agglab/basis.hpp"
#include "agglab/quadrature.hpp"
#include "agglab/special.hpp"
#include "test_util.hpp"

using namespace agglab;

namespace {
const ModelParams kA05M05{0.5, 0.5};
const ModelParams kA05M0{0.0, 0.5};
const ModelParams kA1M05{0.5, 1.0};
const ModelParams kA1M0{0.0, 1.0};
const ModelParams kA15M05{0.5, 1.5};
const ModelParams kA15M0{0.0, 1.5};
const ModelParams kA15M03{0.3, 1.5};
}  // namespace

TEST(Basis, ExactRays) {
    const StableBasis b = basis_vectors(2, kA05M05);
    ASSERT_EQ(b.vectors.size(), 3u);
    const double norm = std::pow(1.0 - std::pow(0.5, 0.5), -1.0 / 0.5);
    EXPECT_NEAR(b.vectors[0][0], norm, 1e-13);
    EXPECT_NEAR(b.vectors[0][1], norm * 0.5, 1e-13);
    EXPECT_NEAR(b.vectors[0][2], norm * 0.25, 1e-13);
    EXPECT_DOUBLE_EQ(b.vectors[1][0], 0.0);
    EXPECT_DOUBLE_EQ(b.vectors[1][1], 1.0);
    EXPECT_DOUBLE_EQ(b.vectors[1][2], 0.5);
    EXPECT_DOUBLE_EQ(b.vectors[2][0], 0.0);
    EXPECT_DOUBLE_EQ(b.vectors[2][1], 0.0);
    EXPECT_DOUBLE_EQ(b.vectors[2][2], 1.0);
    // m = 0 degenerates to the standard coordinate rays.
    const StableBasis b0 = basis_vectors(1, kA15M0);
    EXPECT_DOUBLE_EQ(b0.vectors[0][0], 1.0);
    EXPECT_DOUBLE_EQ(b0.vectors[0][1], 0.0);
    EXPECT_DOUBLE_EQ(b0.vectors[1][1], 1.0);
}

TEST(CfMu, FrozenOracleValues) {
    EXPECT_CNEAR(cf_mu({0.7, 1.3}, 1, kA1M05).value(), 0.042510664593389905454,
                 -0.0077644141785645798207, 1e-14);
    EXPECT_CNEAR(cf_mu({0.3, -0.7, 1.1}, 2, kA1M05).value(), 0.26158936191239992432,
                 0.02826193583548459733, 1e-14);
    EXPECT_CNEAR(cf_mu({1.0}, 0, kA1M0).value(), 0.18957579226498824743,
                 0.085293242703477231252, 1e-14);
    EXPECT_CNEAR(cf_mu({0.7, 1.3}, 1, kA05M05).value(), 0.15218993596131678613,
                 -0.019160047798085683668, 1e-14);
    EXPECT_CNEAR(cf_mu({1.0}, 0, kA05M0).value(), 0.27644392544297165506,
                 0.071564460316768672496, 1e-14);
    EXPECT_CNEAR(cf_mu({0.3, -0.7, 1.1}, 2, kA15M05).value(), 0.10723452682641425834,
                 0.0061374814560164708881, 1e-14);
    EXPECT_CNEAR(cf_mu({1.0}, 0, kA15M0).value(), 0.071818015175196627208,
                 0.038618482774276371075, 1e-14);
    EXPECT_CNEAR(cf_mu({-2.0}, 0, kA15M0).value(), 0.0003856416618791271069,
                 0.00073897777248310678062, 1e-14);
}

TEST(CfMu, MarginalDoesNotDependOnOffspringMean) {
    // The one-dimensional marginal of the limit is the same stable law for
    // every offspring mean: the (1 - m^alpha) factor cancels against the
    // geometric ray masses.
    for (double theta : {-2.0, -0.5, 0.7, 1.0}) {
        const auto with_m = cf_mu({theta}, 0, kA1M05).value();
        const auto without_m = cf_mu({theta}, 0, kA1M0).value();
        EXPECT_LE(std::abs(with_m - without_m), 1e-14) << "theta=" << theta;
        const auto with_m15 = cf_mu({theta}, 0, kA15M05).value();
        const auto without_m15 = cf_mu({theta}, 0, kA15M0).value();
        EXPECT_LE(std::abs(with_m15 - without_m15), 1e-14) << "theta=" << theta;
    }
}

TEST(CfMu, HermitianModulusAndZero) {
    const std::vector<double> th{0.7, -1.3, 0.4};
    const std::vector<double> neg{-0.7, 1.3, -0.4};
    for (double alpha : {0.5, 1.0, 1.5}) {
        const ModelParams p{0.5, alpha};
        const auto plus = cf_mu(th, 2, p).value();
        const auto minus = cf_mu(neg, 2, p).value();
        EXPECT_LE(std::abs(minus - std::conj(plus)), 1e-15);
        EXPECT_LE(std::abs(plus), 1.0 + 1e-12);
    }
    EXPECT_CNEAR(cf_mu({0.0, 0.0}, 1, kA1M05).value(), 1.0, 0.0, 0.0);
}

TEST(CfMu, StationarityWindowIdentities) {
    // Appending theta = 0 marginalizes the last coordinate; prepending 0
    // drops the first by stationarity.  Both must hold exactly.
    const std::vector<double> th{0.9, -0.4, 1.2};
    for (double alpha : {0.5, 1.0, 1.5}) {
        for (double m : {0.0, 0.5}) {
            const ModelParams p{m, alpha};
            const auto base = cf_mu(th, 2, p).value();
            const auto padded_back = cf_mu({0.9, -0.4, 1.2, 0.0}, 3, p).value();
            const auto padded_front = cf_mu({0.0, 0.9, -0.4, 1.2}, 3, p).value();
            EXPECT_LE(std::abs(padded_back - base), 1e-13 * std::abs(base));
            EXPECT_LE(std::abs(padded_front - base), 1e-13 * std::abs(base));
        }
    }
}

TEST(CfMu, IntegralRouteAgreesOnSpotGrid) {
    // The full acceptance grid lives in the acceptance binary; here a fast
    // diagonal spot check across all regimes.
    const QuadratureConfig quad;
    double max_gap = 0.0;
    for (int k : {0, 1}) {
        for (double alpha : {0.5, 1.0, 1.5}) {
            for (double m : {0.0, 0.5}) {
                const ModelParams p{m, alpha};
                for (double t : {-3.0, -1.2, -0.3, 0.6, 1.5, 3.0}) {
                    const std::vector<double> th(static_cast<std::size_t>(k) + 1, t);
                    const auto a = cf_mu(th, k, p).value();
                    const auto b = cf_mu_integral(th, k, p, quad).value();
                    max_gap = std::max(max_gap, std::abs(a - b));
                }
            }
        }
    }
    EXPECT_LE(max_gap, 1e-9);
}

TEST(Innovation, FrozenOracleValues) {
    EXPECT_CNEAR(innovation_cf(1.1, kA05M05).value(), 0.67120658298246818289,
                 -0.11176222393075749745, 1e-14);
    EXPECT_CNEAR(innovation_cf(0.8, kA1M05).value(), 0.53339293408123349278,
                 -0.010075773332215349259, 1e-14);
    EXPECT_CNEAR(innovation_cf(-0.6, kA15M03).value(), 0.36234777161261278979,
                 -0.1067295925576094632, 1e-14);
}

TEST(Innovation, AutoregressiveFactorization) {
    // cf_mu((t_0,...,t_{k-1} - m t_k, t_k), k)
    //   = cf_mu((t_0,...,t_{k-1}), k-1) * innovation_cf(t_k):
    // the window law solves the lag-one recursion in distribution.
    const std::vector<double> pool{0.37, -1.12, 0.85, 2.1, -0.44, 1.7};
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        for (double m : {0.0, 0.3, 0.5}) {
            const ModelParams p{m, alpha};
            for (int k = 1; k <= 3; ++k) {
                std::vector<double> th(pool.begin(), pool.begin() + k);
                const double tk = pool[static_cast<std::size_t>(k) + 1];
                std::vector<double> lhs_th = th;
                lhs_th.back() -= m * tk;
                lhs_th.push_back(tk);
                const auto lhs = cf_mu_exponent(lhs_th, k, p);
                const auto rhs = cf_mu_exponent(th, k - 1, p) + innovation_cf_exponent(tk, p);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(ShiftedCf, DriftRemovalAndDomain) {
    // cf_shifted_mu = cf_mu * exp(+i (alpha/(1-alpha)) <theta, 1>).
    const std::vector<double> th{0.8, -0.3};
    for (double alpha : {0.5, 1.5}) {
        const ModelParams p{0.5, alpha};
        const double drift = (alpha / (1.0 - alpha)) * (0.8 - 0.3);
        const auto expected =
            cf_mu(th, 1, p).value() * std::exp(std::complex<double>(0.0, drift));
        EXPECT_LE(std::abs(cf_shifted_mu(th, 1, p).value() - expected), 1e-14);
    }
    EXPECT_THROW(cf_shifted_mu(th, 1, kA1M05), std::domain_error);
}

TEST(ShiftedCf, StrictStability) {
    // Strictly stable: n * log cf(theta) = log cf(n^{1/alpha} theta).
    for (double alpha : {0.5, 1.5}) {
        const ModelParams p{0.5, alpha};
        for (double n : {2.0, 3.0}) {
            const std::vector<double> th{0.7, -0.2};
            const double scale = std::pow(n, 1.0 / alpha);
            const std::vector<double> th_scaled{0.7 * scale, -0.2 * scale};
            const auto lhs = n * cf_shifted_mu_exponent(th, 1, p);
            const auto rhs = cf_shifted_mu_exponent(th_scaled, 1, p);
            EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(lhs));
        }
    }
}

TEST(CfZ, FrozenOracleValues) {
    EXPECT_CNEAR(cf_Z(1.0, kA05M05, true).value(), 0.51663453913397709801,
                 0.29521535009230406425, 1e-14);
    EXPECT_CNEAR(cf_Z(1.0, kA05M05, false).value(), 0.52755398415779053449,
                 -0.27522744004829943661, 1e-14);
    EXPECT_CNEAR(cf_Z(1.0, kA15M05, true).value(), -0.0013170640512316070623,
                 0.010137062533395153602, 1e-14);
    EXPECT_CNEAR(cf_Z(1.0, kA15M05, false).value(), -0.00012665881815462644133,
                 -0.010221479935155870381, 1e-14);
    EXPECT_CNEAR(cf_Z(-0.7, kA15M05, true).value(), -0.061257560400865185885,
                 0.030151417704706235715, 1e-14);
    EXPECT_THROW(cf_Z(1.0, kA1M05, true), std::domain_error);
    EXPECT_THROW(cf_Z(1.0, kA1M05, false), std::domain_error);
}

TEST(CfZ, DriftConstant) {
    EXPECT_NEAR(b_alpha(kA05M05), -0.5857864376269049512, 1e-15);
    EXPECT_NEAR(b_alpha(kA15M05), -2.4852813742385702928, 1e-14);
    EXPECT_THROW(b_alpha(kA1M05), std::domain_error);
}

TEST(CfZ, SpectralRouteMatchesBelowOne) {
    // Independent derivation: difference of two pure Levy integrals along the
    // forward spectral sums.  Valid only for alpha < 1.
    const QuadratureConfig quad;
    for (double theta : {-1.5, -0.5, 0.5, 1.0, 2.0}) {
        const auto spectral = cf_Z_spectral(theta, kA05M05, quad).value();
        const auto closed = cf_Z(theta, kA05M05, true).value();
        EXPECT_LE(std::abs(spectral - closed), 1e-9) << "theta=" << theta;
    }
    EXPECT_THROW(cf_Z_spectral(1.0, kA15M05, quad), std::domain_error);
}

TEST(CfZ, CompensatedSpectralNegativeControl) {
    // Above alpha = 1 the naive compensated spectral route converges to the
    // WRONG law (the compensator drift does not cancel): the gap against the
    // true shifted CF is macroscopic and exactly predictable.
    const QuadratureConfig quad;
    const double gap1 =
        std::abs(cf_Z_spectral_compensated(1.0, kA15M05, quad).value() -
                 cf_Z(1.0, kA15M05, true).value());
    EXPECT_NEAR(gap1, 0.020393315474996523524, 1e-12);
    EXPECT_GT(gap1, 1e-3);
    const double gap15 =
        std::abs(cf_Z_spectral_compensated(1.5, kA15M05, quad).value() -
                 cf_Z(1.5, kA15M05, true).value());
    EXPECT_NEAR(gap15, 0.00034304809857239017154, 1e-12);
}

TEST(TailFunctionals, FrozenOracleValues) {
    EXPECT_NEAR(levy_mass_above(1, kA05M05, 1.0), 1.3502644822540165951, 1e-14);
    EXPECT_NEAR(levy_mass_above(1, kA05M05, 2.0), 0.95478117179715779536, 1e-14);
    EXPECT_NEAR(levy_mass_above(0, kA1M05, 1.0), 1.0, 1e-14);
    EXPECT_NEAR(levy_mass_above(1, kA1M05, 1.0), 1.6180339887498948482, 1e-14);
    EXPECT_NEAR(levy_mass_above(3, kA15M05, 1.0), 3.440527330536329817, 1e-14);
    EXPECT_NEAR(sum_tail_ratio(1, kA05M05), 1.5176380902050415247, 1e-14);
    EXPECT_NEAR(sum_tail_ratio(1, kA1M05), 2.0, 1e-14);
    EXPECT_NEAR(sum_tail_ratio(2, kA15M05), 4.1490772608372975931, 1e-14);
    EXPECT_NEAR(sum_tail_ratio(2, kA05M0), 3.0, 1e-14);
    EXPECT_NEAR(stationary_tail_constant(kA05M05), 3.4142135623730950488, 1e-14);
    EXPECT_DOUBLE_EQ(sum_tail_ratio(0, kA15M05), 1.0);
    EXPECT_DOUBLE_EQ(stationary_tail_constant(kA05M0), 1.0);
}

TEST(TailFunctionals, DualRouteAndHomogeneity) {
    // sum_tail_ratio re-derived through the ray decomposition, and the
    // r^{-alpha} homogeneity of the Levy tail mass.
    const ModelParams p{0.5, 1.5};
    const StableBasis b = basis_vectors(2, p);
    double s = 0.0;
    for (const auto& v : b.vectors) {
        double d = 0.0;
        for (double x : v) d += x;
        s += std::pow(d, p.alpha);
    }
    s *= 1.0 - std::pow(p.m_xi, p.alpha);
    EXPECT_NEAR(s, sum_tail_ratio(2, p), 1e-13);
    EXPECT_NEAR(levy_mass_above(2, p, 3.7) * std::pow(3.7, p.alpha),
                levy_mass_above(2, p, 1.0), 1e-13);
}

TEST(TailFunctionals, DriftCenterAndPerColumnIdentities) {
    // (1 - m^alpha) sum_j <theta, v_j^alpha> == <theta, 1> for every theta,
    // equivalently each coordinate column of ray masses sums to one.
    for (double alpha : {0.5, 1.0, 1.5}) {
        const ModelParams p{0.5, alpha};
        const StableBasis b = basis_vectors(3, p);
        const std::vector<double> th{0.9, -0.2, 1.4, 0.3};
        double lhs = 0.0;
        for (const auto& v : b.vectors) {
            for (std::size_t l = 0; l < v.size(); ++l) {
                if (v[l] > 0.0) lhs += th[l] * std::pow(v[l], alpha);
            }
        }
        lhs *= 1.0 - std::pow(0.5, alpha);
        EXPECT_NEAR(lhs, 0.9 - 0.2 + 1.4 + 0.3, 1e-13);
        for (std::size_t l = 0; l < 4; ++l) {
            double col = 0.0;
            for (const auto& v : b.vectors) {
                if (v[l] > 0.0) col += std::pow(v[l], alpha);
            }
            col *= 1.0 - std::pow(0.5, alpha);
            EXPECT_NEAR(col, 1.0, 1e-13) << "alpha=" << alpha << " column=" << l;
        }
    }
}

TEST(Constants, QuadratureRouteForC) {
    // The compensated sine constant via adaptive quadrature must agree with
    // the series value (dual-route requirement).
    const QuadratureConfig quad;
    EXPECT_NEAR(constant_C(quad), kCompensatedSineConstant, 5e-10);
}
