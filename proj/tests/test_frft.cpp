#include <cmath>
#include <numbers>

#include "doctest.h"
#include "phaseret/frft.hpp"
#include "support.hpp"

using namespace phaseret;
using testsupport::default_grid;

namespace {

const double kPi = std::numbers::pi;

double coeff_distance(const HermiteExpansion& a, const HermiteExpansion& b) {
    double m = 0.0;
    const int top = std::max(a.max_index(), b.max_index());
    for (int n = 0; n <= top; ++n)
        m = std::max(m, std::abs(a.coefficient(n) - b.coefficient(n)));
    return m;
}

}  // namespace

TEST_CASE("frft_spectral: theta = 0 is the bitwise identity") {
    auto& gen = testsupport::rng(301);
    const HermiteExpansion e = testsupport::random_expansion(gen, 9);
    const HermiteExpansion out = frft_spectral(e, RationalAngle::rational(0, 1));
    for (int n = 0; n <= 9; ++n) CHECK(out.coefficient(n) == e.coefficient(n));
}

TEST_CASE("frft_spectral: parity at theta = pi") {
    // F_pi reflects the synthesized signal
    const double r = 1.0 / std::numbers::sqrt2;
    const HermiteExpansion e({r, r});
    const HermiteExpansion rotated = frft_spectral(e, RationalAngle::rational(1, 1));
    const Grid g = default_grid();
    const SampledSignal lhs = synthesize(rotated, g);
    const SampledSignal orig = synthesize(e, g);
    for (std::size_t i = 0; i < g.n_points; ++i) {
        const complexd reflected = orig.values[g.n_points - 1 - i];
        CHECK(std::abs(lhs.values[i] - reflected) <= 1e-10);
    }
}

TEST_CASE("frft_spectral: e^{-i n theta} phase on a single mode") {
    std::vector<complexd> c(3, complexd(0.0));
    c[2] = 1.0;
    const HermiteExpansion out =
        frft_spectral(HermiteExpansion(std::move(c)), RationalAngle::rational(1, 2));
    CHECK(out.coefficient(2) == complexd(-1.0, 0.0));  // e^{-i pi}, exact table
}

TEST_CASE("frft_spectral: group law composes phases") {
    auto& gen = testsupport::rng(302);
    const HermiteExpansion e = testsupport::random_expansion(gen, 16);

    SUBCASE("quarter-turn rationals compose bitwise") {
        const RationalAngle t1 = RationalAngle::rational(1, 2);
        const RationalAngle t2 = RationalAngle::rational(3, 2);
        const HermiteExpansion two = frft_spectral(frft_spectral(e, t1), t2);
        CHECK(coeff_distance(two, e) == 0.0);  // F_{3pi/2} inverts F_{pi/2}
    }

    SUBCASE("generic rationals compose to a few ulp") {
        const RationalAngle t1 = RationalAngle::rational(2, 7);
        const RationalAngle t2 = RationalAngle::rational(3, 5);
        const HermiteExpansion two = frft_spectral(frft_spectral(e, t1), t2);
        const HermiteExpansion one = frft_spectral(e, t1 + t2);
        CHECK(coeff_distance(two, one) <= 1e-13);
    }

    SUBCASE("real angles compose to a few ulp") {
        const HermiteExpansion two = frft_spectral(frft_spectral(e, 0.813), 1.492);
        const HermiteExpansion one = frft_spectral(e, 0.813 + 1.492);
        CHECK(coeff_distance(two, one) <= 1e-13);
    }
}

TEST_CASE("frft_spectral: unitary on coefficients") {
    auto& gen = testsupport::rng(303);
    const HermiteExpansion e = testsupport::random_expansion(gen, 16);
    const HermiteExpansion out = frft_spectral(e, 1.234567);
    CHECK(std::abs(out.squared_coefficient_norm() - e.squared_coefficient_norm()) <= 1e-14);
}

TEST_CASE("frft_grid: exact special cases") {
    const Grid g = default_grid();
    auto& gen = testsupport::rng(304);
    const SampledSignal psi = synthesize(testsupport::random_expansion(gen, 10), g);

    SUBCASE("theta = 0 returns the input unchanged") {
        const SampledSignal out = frft_grid(psi, 0.0);
        CHECK(max_abs_difference(out, psi) == 0.0);
    }

    SUBCASE("theta = pi reflects") {
        const SampledSignal out = frft_grid(psi, kPi);
        for (std::size_t i = 0; i < g.n_points; ++i)
            CHECK(std::abs(out.values[i] - psi.values[g.n_points - 1 - i]) <= 1e-8);
    }

    SUBCASE("theta = pi/2 fixes the Gaussian") {
        const SampledSignal h0 = synthesize(HermiteExpansion({1.0}), g);
        const SampledSignal out = frft_grid(h0, 0.5 * kPi);
        CHECK(max_abs_difference(out, h0) <= 1e-10);
    }
}

TEST_CASE("frft_grid: asymmetric grids are rejected") {
    const Grid g{-3.0, 0.1, 64};
    CHECK_THROWS_AS(frft_grid(SampledSignal(g, std::vector<complexd>(64)), 0.4),
                    AsymmetricGridError);
}

TEST_CASE("frft_grid: agrees with the spectral route") {
    const Grid g = default_grid();
    std::vector<complexd> c(5, complexd(0.0));
    c[4] = 1.0;
    const HermiteExpansion e(std::move(c));
    const SampledSignal psi = synthesize(e, g);
    for (double theta : {0.3, 1.1, 2.5}) {
        const SampledSignal grid_route = frft_grid(psi, theta);
        const SampledSignal spectral_route = synthesize(frft_spectral(expand(psi, 8), theta), g);
        CHECK(max_abs_difference(grid_route, spectral_route) <= 1e-6);
    }
}

TEST_CASE("frft_grid: dual route across random angles and states") {
    const Grid g = default_grid();
    auto& gen = testsupport::rng(305);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const HermiteExpansion e = testsupport::random_expansion(gen, 16);
        const SampledSignal psi = synthesize(e, g);
        const double theta = angle(gen);
        const SampledSignal grid_route = frft_grid(psi, theta);
        const SampledSignal spectral_route = synthesize(frft_spectral(e, theta), g);
        CHECK(max_abs_difference(grid_route, spectral_route) <= 1e-6);
        CHECK(std::abs(squared_norm(grid_route) - 1.0) <= 1e-6);
    }
}

TEST_CASE("frft_grid: odd-length grids go through the arbitrary-length transform") {
    const Grid g = Grid::symmetric(12.0, 999);
    std::vector<complexd> c(7, complexd(0.0));
    c[6] = 1.0;
    const HermiteExpansion e(std::move(c));
    const SampledSignal psi = synthesize(e, g);
    for (double theta : {0.4, 1.3, 2.8, 4.4}) {
        const SampledSignal a = frft_grid(psi, theta);
        const SampledSignal b = synthesize(frft_spectral(e, theta), g);
        CHECK(max_abs_difference(a, b) <= 1e-6);
    }
}

TEST_CASE("frft_grid: quarter-turn window dispatches instead of failing") {
    const Grid g = default_grid();
    auto& gen = testsupport::rng(306);
    const HermiteExpansion e = testsupport::random_expansion(gen, 8);
    const SampledSignal psi = synthesize(e, g);
    for (double theta : {1e-4, kPi - 5e-4, 0.5 * kPi + 2e-4, 1.5 * kPi - 3e-4}) {
        const SampledSignal grid_route = frft_grid(psi, theta);
        const SampledSignal spectral_route = synthesize(frft_spectral(e, theta), g);
        // Strang-split residual: O(eps^3) splitting error on top of the grid budget
        CHECK(max_abs_difference(grid_route, spectral_route) <= 1e-6);
    }
}

TEST_CASE("quadrature_intensity: eigenfunction densities are theta-invariant") {
    const Grid g = default_grid();

    SUBCASE("h_0 density is the closed-form Gaussian at every angle") {
        const HermiteExpansion e({1.0});
        for (double theta : {0.0, 0.7, 2.0}) {
            const IntensityProfile p = quadrature_intensity(e, theta, g);
            for (std::size_t i = 0; i < g.n_points; i += 31) {
                const double x = g.point(i);
                const double want = std::exp(-x * x) / std::sqrt(kPi);
                CHECK(std::abs(p.density[i] - want) <= 1e-8);
            }
        }
    }

    SUBCASE("single modes up to 16") {
        for (int n : {1, 5, 16}) {
            std::vector<complexd> c(static_cast<std::size_t>(n) + 1, complexd(0.0));
            c.back() = 1.0;
            const HermiteExpansion e(std::move(c));
            const IntensityProfile base = quadrature_intensity(e, 0.0, g);
            for (double theta : {0.9, 1.7, 5.1}) {
                const IntensityProfile p = quadrature_intensity(e, theta, g);
                CHECK(max_abs_difference(p, base) <= 1e-10);
            }
        }
    }

    SUBCASE("integrates to one") {
        auto& gen = testsupport::rng(307);
        const HermiteExpansion e = testsupport::random_expansion(gen, 12);
        CHECK(std::abs(integral(quadrature_intensity(e, 1.3, g)) - 1.0) <= 1e-6);
    }

    SUBCASE("the k = 16 pair shares its density at pi/4") {
        const double r = 1.0 / std::numbers::sqrt2;
        std::vector<complexd> cp(17, complexd(0.0)), cm(17, complexd(0.0));
        cp[0] = cm[0] = r;
        cp[16] = complexd(0.0, r);
        cm[16] = complexd(0.0, -r);
        const IntensityProfile pp =
            quadrature_intensity(HermiteExpansion(std::move(cp)),
                                 RationalAngle::rational(1, 4), g);
        const IntensityProfile pm =
            quadrature_intensity(HermiteExpansion(std::move(cm)),
                                 RationalAngle::rational(1, 4), g);
        CHECK(max_abs_difference(pp, pm) <= 1e-10);
    }
}

TEST_CASE("quadrature_mean: grid moment matches the ladder oracle") {
    const double r = 1.0 / std::numbers::sqrt2;
    const HermiteExpansion e({r, r});

    CHECK(std::abs(quadrature_mean(HermiteExpansion({1.0}), 0.9)) <= 1e-10);

    const double mq = testsupport::ladder_mean_q(e);
    CHECK(mq == doctest::Approx(r).epsilon(1e-12));  // exact ladder algebra
    CHECK(std::abs(quadrature_mean(e, 0.0) - mq) <= 1e-6);

    const double mp = testsupport::ladder_mean_p(e);
    CHECK(mp == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(quadrature_mean(e, 0.5 * kPi) - mp) <= 1e-6);

    // generic state, generic angle
    auto& gen = testsupport::rng(308);
    const HermiteExpansion f = testsupport::random_expansion(gen, 10);
    for (double theta : {0.3, 1.9, 4.4}) {
        const double want = testsupport::ladder_mean_q(f) * std::cos(theta) +
                            testsupport::ladder_mean_p(f) * std::sin(theta);
        CHECK(std::abs(quadrature_mean(f, theta) - want) <= 1e-6);
    }
}
