#include <cmath>
#include <numbers>

#include "doctest.h"
#include "phaseret/weyl.hpp"
#include "support.hpp"

using namespace phaseret;
using testsupport::default_grid;

namespace {

const double kPi = std::numbers::pi;

SampledSignal random_state(std::mt19937& gen, const Grid& g, int max_index = 8) {
    return synthesize(testsupport::random_expansion(gen, max_index), g);
}

}  // namespace

TEST_CASE("symplectic_form: values and antisymmetry") {
    CHECK(symplectic_form({1, 0}, {0, 1}) == 1.0);
    CHECK(symplectic_form({2, 3}, {5, 7}) == -1.0);
    auto& gen = testsupport::rng(401);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const PhasePoint x{d(gen), d(gen)}, y{d(gen), d(gen)}, z{d(gen), d(gen)};
        CHECK(symplectic_form(x, x) == 0.0);
        CHECK(symplectic_form(x, y) == -symplectic_form(y, x));
        const double lhs = symplectic_form({x.q + y.q, x.p + y.p}, z);
        CHECK(lhs == doctest::Approx(symplectic_form(x, z) + symplectic_form(y, z))
                         .epsilon(1e-12));
    }
}

TEST_CASE("weyl_apply: identity, pure modulation, pure shift") {
    const Grid g = default_grid();
    auto& gen = testsupport::rng(402);
    const SampledSignal psi = random_state(gen, g);

    SUBCASE("zero displacement is the identity") {
        const SampledSignal out = weyl_apply(psi, {0.0, 0.0});
        CHECK(max_abs_difference(out, psi) == 0.0);
    }

    SUBCASE("x = (0, p) multiplies by e^{ipt}") {
        const double p = 1.7;
        const SampledSignal out = weyl_apply(psi, {0.0, p});
        for (std::size_t i = 0; i < g.n_points; i += 53) {
            const complexd want = psi.values[i] * std::polar(1.0, p * g.point(i));
            CHECK(std::abs(out.values[i] - want) <= 1e-14);
        }
        CHECK(std::abs(squared_norm(out) - squared_norm(psi)) <= 1e-12);
    }

    SUBCASE("x = (q, 0) shifts: compare against resynthesis") {
        const double q = 0.6180339887;
        const HermiteExpansion e = expand(psi, 8);
        const SampledSignal out = weyl_apply(psi, {q, 0.0});
        // oracle: psi(t - q) evaluated exactly through the expansion
        for (std::size_t i = 100; i < g.n_points - 100; i += 61) {
            complexd want = 0.0;
            for (int n = 0; n <= 8; ++n)
                want += e.coefficient(n) * hermite_eval(n, g.point(i) - q);
            CHECK(std::abs(out.values[i] - want) <= 1e-9);
        }
    }

    SUBCASE("oversized displacement is rejected, not wrapped") {
        CHECK_THROWS_AS(weyl_apply(psi, {13.0, 0.0}), std::domain_error);
    }
}

TEST_CASE("weyl_apply: composition rule and commutation relation") {
    const Grid g = default_grid();
    auto& gen = testsupport::rng(403);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int trial = 0; trial < 15; ++trial) {
        const SampledSignal psi = random_state(gen, g);
        const PhasePoint x{d(gen), d(gen)}, y{d(gen), d(gen)};

        const SampledSignal lhs = weyl_apply(weyl_apply(psi, y), x);
        SampledSignal rhs = weyl_apply(psi, {x.q + y.q, x.p + y.p});
        const complexd phase = std::polar(1.0, -0.5 * symplectic_form(x, y));
        for (auto& v : rhs.values) v *= phase;
        CHECK(max_abs_difference(lhs, rhs) <= 1e-8);

        const SampledSignal wxy = weyl_apply(weyl_apply(psi, y), x);
        SampledSignal wyx = weyl_apply(weyl_apply(psi, x), y);
        const complexd comm = std::polar(1.0, -symplectic_form(x, y));
        for (auto& v : wyx.values) v *= comm;
        CHECK(max_abs_difference(wxy, wyx) <= 1e-8);
    }
}

TEST_CASE("characteristic_function: normalization, Gaussian value, Weyl route") {
    const Grid g = default_grid();
    const HermiteExpansion vacuum({1.0});

    CHECK(std::abs(characteristic_function(vacuum, 0.9, 0.0, g) - 1.0) <= 1e-8);

    // density pi^{-1/2} e^{-x^2} has transform e^{-u^2/4}
    const complexd got = characteristic_function(vacuum, 0.0, 1.0, g);
    const double oracle = testsupport::quad_trapezoid(
        [](double x) { return std::cos(x) * std::exp(-x * x) / std::sqrt(kPi); }, -12.0, 12.0);
    CHECK(std::abs(got.real() - oracle) <= 1e-8);
    CHECK(got.real() == doctest::Approx(std::exp(-0.25)).epsilon(1e-8));
    CHECK(std::abs(got.imag()) <= 1e-8);

    // two-route agreement at random (theta, u)
    auto& gen = testsupport::rng(404);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> us(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const HermiteExpansion e = testsupport::random_expansion(gen, 8);
        const double theta = angle(gen);
        const double u = us(gen);
        const complexd fourier_route = characteristic_function(e, theta, u, g);
        const SampledSignal psi = synthesize(e, g);
        const complexd weyl_route =
            inner_product(psi, weyl_apply(psi, {u * std::sin(theta), -u * std::cos(theta)}));
        CHECK(std::abs(fourier_route - weyl_route) <= 1e-6);
    }
}

TEST_CASE("metaplectic_apply: identity and pure factors") {
    const Grid g = default_grid();
    auto& gen = testsupport::rng(405);
    const SampledSignal psi = random_state(gen, g);

    SUBCASE("identity matrix") {
        const SampledSignal out =
            align_global_phase(psi, metaplectic_apply(psi, SymplecticMatrix2::identity()));
        CHECK(max_abs_difference(out, psi) <= 1e-8);
    }

    SUBCASE("non-symplectic input is rejected") {
        CHECK_THROWS_AS(metaplectic_apply(psi, SymplecticMatrix2{2.0, 0.0, 0.0, 1.0}),
                        NonSymplecticError);
    }

    SUBCASE("rotation matches the spectral route up to phase") {
        const HermiteExpansion e = expand(psi, 8);
        for (double theta : {0.4, 1.2, 2.8}) {
            const SampledSignal rotated =
                metaplectic_apply(psi, SymplecticMatrix2::rotation(theta));
            // U(S_theta) = R(theta) = F_{-theta}
            const SampledSignal spectral = synthesize(frft_spectral(e, -theta), g);
            CHECK(max_abs_difference(align_global_phase(spectral, rotated), spectral) <= 1e-6);
        }
    }
}

TEST_CASE("metaplectic_apply: norm preservation and Weyl covariance") {
    const Grid g = default_grid();
    auto& gen = testsupport::rng(406);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        const SampledSignal psi = random_state(gen, g, 6);
        const SymplecticMatrix2 s = testsupport::random_symplectic(gen);
        const PhasePoint x{d(gen), d(gen)};

        const SampledSignal us_psi = metaplectic_apply(psi, s);
        CHECK(std::abs(squared_norm(us_psi) - 1.0) <= 1e-6);

        const SampledSignal lhs = metaplectic_apply(weyl_apply(psi, x), s);
        const PhasePoint sx{s.a11 * x.q + s.a12 * x.p, s.a21 * x.q + s.a22 * x.p};
        const SampledSignal rhs = weyl_apply(us_psi, sx);
        CHECK(max_abs_difference(align_global_phase(rhs, lhs), rhs) <= 1e-6);
    }
}
