#include "phaseret/weyl.hpp"

#include <cmath>
#include <numbers>

#include "phaseret/fft.hpp"

namespace phaseret {

namespace {

const double kPi = std::numbers::pi;

// psi(t - q) by discrete-Fourier fractional shifting.
SampledSignal fractional_shift(const SampledSignal& psi, double q) {
    if (q == 0.0) return psi;
    const Grid& g = psi.grid;
    const double width = g.dx * static_cast<double>(g.n_points - 1);
    if (std::abs(q) > 0.5 * width)
        throw std::domain_error("weyl_apply: displacement exceeds half the grid width; "
                                "the shifted signal would wrap around");
    const std::size_t n = g.n_points;
    fft::cvec spec(psi.values.begin(), psi.values.end());
    spec = fft::transform(std::move(spec), false);
    const double dw = 2.0 * kPi / (static_cast<double>(n) * g.dx);
    for (std::size_t k = 0; k < n; ++k) {
        if (n % 2 == 0 && k == n / 2) {
            spec[k] *= std::cos(dw * static_cast<double>(k) * q);
            continue;
        }
        const double f = (k <= n / 2) ? static_cast<double>(k)
                                      : static_cast<double>(k) - static_cast<double>(n);
        spec[k] *= std::polar(1.0, -f * dw * q);
    }
    spec = fft::transform(std::move(spec), true);
    return SampledSignal(g, std::vector<complexd>(spec.begin(), spec.end()));
}

}  // namespace

double symplectic_form(const PhasePoint& x, const PhasePoint& y) {
    return x.q * y.p - x.p * y.q;
}

SampledSignal weyl_apply(const SampledSignal& psi, const PhasePoint& x) {
    if (!std::isfinite(x.q) || !std::isfinite(x.p))
        throw std::invalid_argument("weyl_apply: non-finite displacement");
    SampledSignal out = fractional_shift(psi, x.q);
    const complexd half_phase = std::polar(1.0, -0.5 * x.q * x.p);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const double t = out.grid.point(i);
        out.values[i] *= half_phase * std::polar(1.0, x.p * t);
    }
    return out;
}

complexd characteristic_function(const HermiteExpansion& e, double theta, double u,
                                 const Grid& g) {
    const IntensityProfile rho = quadrature_intensity(e, theta, g);
    complexd acc = 0.0;
    for (std::size_t i = 0; i < g.n_points; ++i)
        acc += trapezoid_weight(g, i) * std::polar(1.0, -u * g.point(i)) * rho.density[i];
    return acc;
}

SampledSignal metaplectic_apply(const SampledSignal& psi, const SymplecticMatrix2& s) {
    const IwasawaFactors f = iwasawa_decompose(s);  // rejects non-symplectic input
    SampledSignal cur = psi;

    if (f.shear != 0.0) {
        std::vector<complexd> vals(cur.values.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const double x = cur.grid.point(i);
            vals[i] = cur.values[i] * std::polar(1.0, 0.5 * f.shear * x * x);
        }
        cur = SampledSignal(cur.grid, std::move(vals));
    }

    if (f.dilation != 1.0) {
        const double a = f.dilation;
        std::vector<double> pts(cur.grid.n_points);
        for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = cur.grid.point(i) / a;
        std::vector<complexd> vals = sample_bandlimited(cur, pts);
        const double scale = 1.0 / std::sqrt(a);
        for (auto& v : vals) v *= scale;
        cur = SampledSignal(cur.grid, std::move(vals));
    }

    if (f.rotation != 0.0) cur = frft_grid(cur, -f.rotation);  // R(theta) = F_{-theta}

    return cur;
}

}  // namespace phaseret
