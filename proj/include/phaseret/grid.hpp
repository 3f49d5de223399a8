#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "phaseret/errors.hpp"

namespace phaseret {

using complexd = std::complex<double>;

/// Uniform real grid x_i = x0 + i*dx, i = 0..n_points-1.
struct Grid {
    double x0 = 0.0;
    double dx = 1.0;
    std::size_t n_points = 2;

    static Grid symmetric(double halfwidth, std::size_t n);

    double point(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
    double last() const { return point(n_points - 1); }
    // Distance from the origin to the nearer endpoint; the usable half-width.
    double halfwidth() const;
    bool is_symmetric(double tol = 1e-9) const;
    std::vector<double> points() const;

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.x0 == b.x0 && a.dx == b.dx && a.n_points == b.n_points;
    }
};

/// Complex samples of a signal on a uniform grid.
struct SampledSignal {
    Grid grid;
    std::vector<complexd> values;

    SampledSignal() = default;
    SampledSignal(Grid g, std::vector<complexd> v);
};

/// Nonnegative density samples on a uniform grid. Small negative entries
/// (roundoff) inside `slack` are clamped to zero at construction.
struct IntensityProfile {
    Grid grid;
    std::vector<double> density;

    IntensityProfile() = default;
    IntensityProfile(Grid g, std::vector<double> d, double slack = 1e-12);
};

// Trapezoid quadrature weight of grid node i.
double trapezoid_weight(const Grid& g, std::size_t i);

// Conjugate-linear in the first argument, linear in the second.
complexd inner_product(const SampledSignal& phi, const SampledSignal& psi);
double squared_norm(const SampledSignal& psi);
double norm(const SampledSignal& psi);

double integral(const IntensityProfile& p);
// (1/2) * integral |p - q|.
double total_variation_distance(const IntensityProfile& p, const IntensityProfile& q);

// Pointwise |psi|^2 as a density on psi's grid.
IntensityProfile intensity_of(const SampledSignal& psi, double slack = 1e-12);

double max_abs_difference(const SampledSignal& a, const SampledSignal& b);
double max_abs_difference(const IntensityProfile& a, const IntensityProfile& b);

// Band-limited (discrete-Fourier) evaluation of psi at arbitrary points.
// Points outside the source window evaluate to zero, not to the periodic image.
std::vector<complexd> sample_bandlimited(const SampledSignal& psi,
                                         const std::vector<double>& points);
SampledSignal resample_bandlimited(const SampledSignal& psi, const Grid& target);

// Multiply `sig` by the phase that makes <ref, sig> real and positive.
// Leaves `sig` unchanged when the overlap is numerically zero.
SampledSignal align_global_phase(const SampledSignal& ref, const SampledSignal& sig);

}  // namespace phaseret
