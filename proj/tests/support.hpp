#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "phaseret/grid.hpp"
#include "phaseret/hermite.hpp"
#include "phaseret/symplectic.hpp"

namespace testsupport {

using phaseret::complexd;

// ---------------------------------------------------------------------------
// oracles (independent of the library's evaluation paths)

// Integer coefficients of the physicists' Hermite polynomial H_n via
// H_{n+1} = 2x H_n - 2n H_{n-1}. Exact in double for n <= ~20.
inline std::vector<double> hermite_poly_coeffs(int n) {
    std::vector<std::vector<double>> h(static_cast<std::size_t>(n) + 1);
    h[0] = {1.0};
    if (n >= 1) h[1] = {0.0, 2.0};
    for (int k = 2; k <= n; ++k) {
        std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
        for (std::size_t i = 0; i < h[static_cast<std::size_t>(k) - 1].size(); ++i)
            c[i + 1] += 2.0 * h[static_cast<std::size_t>(k) - 1][i];
        for (std::size_t i = 0; i < h[static_cast<std::size_t>(k) - 2].size(); ++i)
            c[i] -= 2.0 * (k - 1.0) * h[static_cast<std::size_t>(k) - 2][i];
        h[static_cast<std::size_t>(k)] = std::move(c);
    }
    return h[static_cast<std::size_t>(n)];
}

// h_n(x) from the exact-coefficient polynomial times normalization and Gaussian.
inline double hermite_exact(int n, double x) {
    const auto coeffs = hermite_poly_coeffs(n);
    double poly = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) poly = poly * x + coeffs[i];
    double lognorm = 0.0;  // log(2^n n! sqrt(pi)) / 2
    for (int k = 1; k <= n; ++k) lognorm += std::log(2.0 * k);
    lognorm = 0.5 * (lognorm + 0.5 * std::log(std::numbers::pi));
    return poly * std::exp(-0.5 * x * x - lognorm);
}

// Fine composite-trapezoid quadrature of f on [a, b].
inline double quad_trapezoid(const std::function<double(double)>& f, double a, double b,
                             std::size_t n = 200000) {
    double acc = 0.5 * (f(a) + f(b));
    const double h = (b - a) / static_cast<double>(n);
    for (std::size_t i = 1; i < n; ++i) acc += f(a + h * static_cast<double>(i));
    return acc * h;
}

// <psi|Q|psi> and <psi|P|psi> from the ladder relations on the coefficients:
// Q h_n = (sqrt(n) h_{n-1} + sqrt(n+1) h_{n+1})/sqrt(2),
// P h_n = i (sqrt(n+1) h_{n+1} - sqrt(n) h_{n-1})/sqrt(2).
inline double ladder_mean_q(const phaseret::HermiteExpansion& e) {
    double acc = 0.0;
    for (int n = 0; n + 1 <= e.max_index(); ++n)
        acc += 2.0 * std::real(std::conj(e.coefficient(n + 1)) * e.coefficient(n)) *
               std::sqrt((n + 1.0) / 2.0);
    return acc;
}

inline double ladder_mean_p(const phaseret::HermiteExpansion& e) {
    double acc = 0.0;
    for (int n = 0; n + 1 <= e.max_index(); ++n)
        acc -= 2.0 * std::imag(std::conj(e.coefficient(n + 1)) * e.coefficient(n)) *
               std::sqrt((n + 1.0) / 2.0);
    return acc;
}

// W(q,p) by direct y-quadrature with exact Hermite evaluation of psi at the
// needed off-grid points.
inline double wigner_point_oracle(const phaseret::HermiteExpansion& e, double q, double p,
                                  double ymax = 14.0, std::size_t n = 4000) {
    const auto psi_at = [&](double x) {
        complexd acc = 0.0;
        for (int k = 0; k <= e.max_index(); ++k)
            acc += e.coefficient(k) * phaseret::hermite_eval(k, x);
        return acc;
    };
    const double h = 2.0 * ymax / static_cast<double>(n);
    complexd acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double y = -ymax + h * static_cast<double>(i);
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        acc += w * std::conj(psi_at(q + y)) * psi_at(q - y) *
               std::polar(1.0, 2.0 * p * y);
    }
    return (acc * h / std::numbers::pi).real();
}

// ---------------------------------------------------------------------------
// deterministic random generators

inline std::mt19937& rng(std::uint32_t seed = 0) {
    static std::mt19937 gen(12345u);
    if (seed != 0) gen.seed(seed);
    return gen;
}

inline phaseret::HermiteExpansion random_expansion(std::mt19937& gen, int max_index) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<complexd> c(static_cast<std::size_t>(max_index) + 1);
    double norm2 = 0.0;
    for (auto& v : c) {
        v = complexd(dist(gen), dist(gen));
        norm2 += std::norm(v);
    }
    for (auto& v : c) v /= std::sqrt(norm2);
    return phaseret::HermiteExpansion(std::move(c));
}

inline phaseret::SymplecticMatrix2 random_symplectic(std::mt19937& gen, double max_log_a = 0.4,
                                                     double max_shear = 0.8) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> loga(-max_log_a, max_log_a);
    std::uniform_real_distribution<double> shear(-max_shear, max_shear);
    using M = phaseret::SymplecticMatrix2;
    return M::rotation(angle(gen)) * M::dilation(std::exp(loga(gen))) * M::shear(shear(gen));
}

inline phaseret::Grid default_grid() { return phaseret::Grid::symmetric(12.0, 1024); }

}  // namespace testsupport
