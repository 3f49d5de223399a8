#pragma once

#include <vector>

#include "phaseret/grid.hpp"

namespace phaseret {

/// A signal as finite complex coefficients over the orthonormal Hermite basis
/// {h_n}. Coefficients beyond the stored range are implicitly zero.
struct HermiteExpansion {
    std::vector<complexd> coefficients;  // c_0 .. c_N

    HermiteExpansion() = default;
    explicit HermiteExpansion(std::vector<complexd> c) : coefficients(std::move(c)) {}

    int max_index() const { return static_cast<int>(coefficients.size()) - 1; }
    complexd coefficient(int n) const;
    double squared_coefficient_norm() const;
};

// Orthonormal Hermite function h_n(x), evaluated by the stable normalized
// three-term recurrence h_{n+1} = sqrt(2/(n+1)) x h_n - sqrt(n/(n+1)) h_{n-1}.
double hermite_eval(int n, double x);

// h_n at many points.
std::vector<double> hermite_row(int n, const std::vector<double>& xs);

// Rows h_{indices[k]} evaluated with a single upward recurrence pass per point.
// `indices` must be sorted ascending and nonnegative.
std::vector<std::vector<double>> hermite_rows(const std::vector<int>& indices,
                                              const std::vector<double>& xs);

// Half-width a grid needs before h_0..h_N can be trusted on it: the classical
// turning point sqrt(2N+1) plus a fixed decay margin.
double required_halfwidth(int max_index);
void require_grid_adequate(const Grid& g, int max_index);

// c_n = trapezoid <h_n, psi> for n = 0..N. Throws GridTooSmallError when the
// grid does not cover the support of h_N.
HermiteExpansion expand(const SampledSignal& psi, int N);

// Pointwise sum_n c_n h_n(x) over the grid. An empty expansion gives zero.
SampledSignal synthesize(const HermiteExpansion& e, const Grid& g);

}  // namespace phaseret
