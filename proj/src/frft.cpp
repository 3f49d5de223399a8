#include "phaseret/frft.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "phaseret/fft.hpp"

namespace phaseret {

namespace {

constexpr double kQuarterWindow = 1e-3;  // |theta - k pi/2| routed through quarter turns
const double kPi = std::numbers::pi;

double wrap_2pi(double v) {
    double r = std::fmod(v, 2.0 * kPi);
    if (r < 0.0) r += 2.0 * kPi;
    return r;
}

void require_symmetric(const Grid& g) {
    if (!g.is_symmetric())
        throw AsymmetricGridError("grid fractional transform needs a grid symmetric about 0");
}

// Single chirp-multiply / chirp-convolve / chirp-multiply pass; valid when
// theta stays away from multiples of pi (|sin theta| >= ~sin(pi/4) here).
SampledSignal chirp_pass(const SampledSignal& psi, double theta) {
    const Grid& g = psi.grid;
    const std::size_t n = g.n_points;
    const double s = std::sin(theta);
    const double ct = std::cos(theta) / s;
    const complexd amp = std::sqrt(complexd(1.0, -ct)) / std::sqrt(2.0 * kPi);

    fft::cvec pre(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = g.point(k);
        pre[k] = psi.values[k] * std::polar(1.0, 0.5 * ct * x * x);
    }
    // kernel split: e^{i ct (u^2+t^2)/2} chirps around the oscillatory core
    // sum_k pre_k e^{-i u_m x_k / s}, evaluated exactly by the chirp-z transform
    fft::cvec core = fft::czt(pre, g.x0, g.dx, g.x0 / s, g.dx / s, n);
    std::vector<complexd> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double u = g.point(m);
        out[m] = amp * g.dx * std::polar(1.0, 0.5 * ct * u * u) * core[m];
    }
    return SampledSignal(g, std::move(out));
}

SampledSignal reflect(const SampledSignal& psi) {
    std::vector<complexd> out(psi.values.rbegin(), psi.values.rend());
    return SampledSignal(psi.grid, std::move(out));
}

// Multiplication by e^{i c x^2}.
SampledSignal quadratic_chirp(const SampledSignal& psi, double c) {
    std::vector<complexd> out(psi.values.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double x = psi.grid.point(k);
        out[k] = psi.values[k] * std::polar(1.0, c * x * x);
    }
    return SampledSignal(psi.grid, std::move(out));
}

// Multiplication by e^{i c w^2} on discrete-Fourier frequencies.
SampledSignal spectral_chirp(const SampledSignal& psi, double c) {
    const std::size_t n = psi.grid.n_points;
    fft::cvec spec(psi.values.begin(), psi.values.end());
    spec = fft::transform(std::move(spec), false);
    const double dw = 2.0 * kPi / (static_cast<double>(n) * psi.grid.dx);
    for (std::size_t k = 0; k < n; ++k) {
        const double f = (k <= n / 2) ? static_cast<double>(k)
                                      : static_cast<double>(k) - static_cast<double>(n);
        const double w = f * dw;
        spec[k] *= std::polar(1.0, c * w * w);
    }
    spec = fft::transform(std::move(spec), true);
    return SampledSignal(psi.grid, std::vector<complexd>(spec.begin(), spec.end()));
}

// F_eps for |eps| << 1 by symmetric splitting of e^{-i eps (Q^2 + P^2 - 1)/2}.
SampledSignal small_angle_residual(const SampledSignal& psi, double eps) {
    SampledSignal out = quadratic_chirp(psi, -0.25 * eps);
    out = spectral_chirp(out, -0.5 * eps);
    out = quadratic_chirp(out, -0.25 * eps);
    const complexd ph = std::polar(1.0, 0.5 * eps);
    for (auto& v : out.values) v *= ph;
    return out;
}

SampledSignal quarter_turn(const SampledSignal& psi, int q) {
    switch (q & 3) {
        case 0: return psi;
        case 1: return chirp_pass(psi, 0.5 * kPi);
        case 2: return reflect(psi);
        default: return chirp_pass(psi, 1.5 * kPi);
    }
}

}  // namespace

complexd frft_phase(int n, const RationalAngle& theta) {
    if (theta.is_rational()) {
        const std::int64_t p = theta.denominator();
        std::int64_t m = (static_cast<std::int64_t>(n) * theta.numerator()) % (2 * p);
        if (m < 0) m += 2 * p;
        const std::int64_t g = std::gcd(m, p);
        const std::int64_t mr = m / g, pr = p / g;
        if (mr == 0) return complexd(1.0, 0.0);
        if (pr == 1) return complexd(-1.0, 0.0);                   // e^{-i pi}
        if (pr == 2) return complexd(0.0, mr == 1 ? -1.0 : 1.0);  // e^{-i pi mr / 2}, mr in {1,3}
        return std::polar(1.0, -kPi * static_cast<double>(mr) / static_cast<double>(pr));
    }
    return std::polar(1.0, -std::fmod(static_cast<double>(n) * theta.radians(), 2.0 * kPi));
}

HermiteExpansion frft_spectral(const HermiteExpansion& e, const RationalAngle& theta) {
    HermiteExpansion out = e;
    for (int n = 0; n <= out.max_index(); ++n) {
        const complexd ph = frft_phase(n, theta);
        if (ph != complexd(1.0, 0.0)) out.coefficients[static_cast<std::size_t>(n)] *= ph;
    }
    return out;
}

HermiteExpansion frft_spectral(const HermiteExpansion& e, double theta) {
    return frft_spectral(e, RationalAngle::real(theta));
}

SampledSignal frft_grid(const SampledSignal& psi, double theta) {
    require_symmetric(psi.grid);
    const double t = wrap_2pi(theta);

    const int nearest = static_cast<int>(std::lround(t / (0.5 * kPi)));
    const double eps = t - 0.5 * kPi * nearest;
    if (std::abs(eps) < kQuarterWindow) {
        SampledSignal out = quarter_turn(psi, nearest);
        if (eps != 0.0) out = small_angle_residual(out, eps);
        return out;
    }

    // single pass inside [pi/4, 3pi/4] U [5pi/4, 7pi/4]; otherwise borrow an
    // exact quarter turn so the chirp kernel never degenerates
    const bool in_band = (t >= 0.25 * kPi && t <= 0.75 * kPi) ||
                         (t >= 1.25 * kPi && t <= 1.75 * kPi);
    if (in_band) return chirp_pass(psi, t);
    return chirp_pass(quarter_turn(psi, 1), wrap_2pi(t - 0.5 * kPi));
}

IntensityProfile quadrature_intensity(const HermiteExpansion& e, const RationalAngle& theta,
                                      const Grid& g) {
    require_grid_adequate(g, std::max(e.max_index(), 0));
    const SampledSignal rotated = synthesize(frft_spectral(e, theta), g);
    return intensity_of(rotated);
}

IntensityProfile quadrature_intensity(const HermiteExpansion& e, double theta, const Grid& g) {
    return quadrature_intensity(e, RationalAngle::real(theta), g);
}

double quadrature_mean(const HermiteExpansion& e, double theta) {
    const int N = std::max(e.max_index(), 0);
    const double hw = std::max(12.0, required_halfwidth(N) + 2.0);
    const Grid g = Grid::symmetric(hw, 2048);
    const IntensityProfile rho = quadrature_intensity(e, theta, g);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.n_points; ++i)
        acc += trapezoid_weight(g, i) * g.point(i) * rho.density[i];
    return acc;
}

}  // namespace phaseret
