#include "phaseret/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phaseret/fft.hpp"

namespace phaseret {

Grid Grid::symmetric(double halfwidth, std::size_t n) {
    if (n < 2) throw std::invalid_argument("Grid::symmetric: need at least 2 points");
    if (!(halfwidth > 0.0)) throw std::invalid_argument("Grid::symmetric: halfwidth must be positive");
    const double dx = 2.0 * halfwidth / static_cast<double>(n - 1);
    return Grid{-halfwidth, dx, n};
}

double Grid::halfwidth() const { return std::min(-x0, last()); }

bool Grid::is_symmetric(double tol) const {
    return std::abs(x0 + last()) <= tol * std::max(1.0, std::abs(x0));
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(n_points);
    for (std::size_t i = 0; i < n_points; ++i) xs[i] = point(i);
    return xs;
}

SampledSignal::SampledSignal(Grid g, std::vector<complexd> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.n_points)
        throw std::invalid_argument("SampledSignal: value count does not match grid");
}

IntensityProfile::IntensityProfile(Grid g, std::vector<double> d, double slack)
    : grid(g), density(std::move(d)) {
    if (density.size() != grid.n_points)
        throw std::invalid_argument("IntensityProfile: value count does not match grid");
    for (double& v : density) {
        if (v < 0.0) {
            if (v < -slack)
                throw std::invalid_argument("IntensityProfile: negative density beyond slack");
            v = 0.0;
        }
    }
}

double trapezoid_weight(const Grid& g, std::size_t i) {
    return (i == 0 || i + 1 == g.n_points) ? 0.5 * g.dx : g.dx;
}

static void require_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw GridMismatchError("operands live on different grids");
}

complexd inner_product(const SampledSignal& phi, const SampledSignal& psi) {
    require_same_grid(phi.grid, psi.grid);
    complexd acc = 0.0;
    for (std::size_t i = 0; i < phi.values.size(); ++i)
        acc += trapezoid_weight(phi.grid, i) * std::conj(phi.values[i]) * psi.values[i];
    return acc;
}

double squared_norm(const SampledSignal& psi) {
    double acc = 0.0;
    for (std::size_t i = 0; i < psi.values.size(); ++i)
        acc += trapezoid_weight(psi.grid, i) * std::norm(psi.values[i]);
    return acc;
}

double norm(const SampledSignal& psi) { return std::sqrt(squared_norm(psi)); }

double integral(const IntensityProfile& p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.density.size(); ++i)
        acc += trapezoid_weight(p.grid, i) * p.density[i];
    return acc;
}

double total_variation_distance(const IntensityProfile& p, const IntensityProfile& q) {
    require_same_grid(p.grid, q.grid);
    double acc = 0.0;
    for (std::size_t i = 0; i < p.density.size(); ++i)
        acc += trapezoid_weight(p.grid, i) * std::abs(p.density[i] - q.density[i]);
    return 0.5 * acc;
}

IntensityProfile intensity_of(const SampledSignal& psi, double slack) {
    std::vector<double> d(psi.values.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::norm(psi.values[i]);
    return IntensityProfile(psi.grid, std::move(d), slack);
}

double max_abs_difference(const SampledSignal& a, const SampledSignal& b) {
    require_same_grid(a.grid, b.grid);
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

double max_abs_difference(const IntensityProfile& a, const IntensityProfile& b) {
    require_same_grid(a.grid, b.grid);
    double m = 0.0;
    for (std::size_t i = 0; i < a.density.size(); ++i)
        m = std::max(m, std::abs(a.density[i] - b.density[i]));
    return m;
}

std::vector<complexd> sample_bandlimited(const SampledSignal& psi,
                                         const std::vector<double>& points) {
    const Grid& g = psi.grid;
    const std::size_t n = g.n_points;
    fft::cvec spec(psi.values.begin(), psi.values.end());
    spec = fft::transform(std::move(spec), false);

    const double lo = g.x0 - 0.5 * g.dx;
    const double hi = g.last() + 0.5 * g.dx;
    const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * g.dx);

    std::vector<complexd> out(points.size(), complexd(0.0));
    for (std::size_t m = 0; m < points.size(); ++m) {
        const double t = points[m];
        if (t < lo || t > hi) continue;
        const double u = t - g.x0;
        // spectrum sum with per-bin phase recurrence; Nyquist bin split evenly
        const complexd step = std::polar(1.0, dw * u);
        complexd ph(1.0, 0.0);
        complexd acc(0.0);
        const std::size_t half = n / 2;
        for (std::size_t k = 0; k < n; ++k) {
            complexd rot = ph;  // e^{i w_k u} for the positive-alias bin
            if (k > half || (k == half && n % 2 == 0)) {
                // negative-frequency alias: w = (k - n) * dw
                rot = ph * std::polar(1.0, -dw * static_cast<double>(n) * u);
            }
            if (k == half && n % 2 == 0) {
                const double wn = dw * static_cast<double>(half);
                rot = complexd(std::cos(wn * u), 0.0);
            }
            acc += spec[k] * rot;
            ph *= step;
        }
        out[m] = acc / static_cast<double>(n);
    }
    return out;
}

SampledSignal resample_bandlimited(const SampledSignal& psi, const Grid& target) {
    return SampledSignal(target, sample_bandlimited(psi, target.points()));
}

SampledSignal align_global_phase(const SampledSignal& ref, const SampledSignal& sig) {
    const complexd ov = inner_product(ref, sig);
    if (std::abs(ov) < 1e-300) return sig;
    const complexd phase = std::conj(ov) / std::abs(ov);
    SampledSignal out = sig;
    for (auto& v : out.values) v *= phase;
    return out;
}

}  // namespace phaseret
