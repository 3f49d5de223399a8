#include "phaseret/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaseret::fft {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

void transform_pow2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("transform_pow2: length must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& v : a) v /= static_cast<double>(n);
}

cvec transform(cvec a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0) return a;
    if (is_pow2(n)) {
        transform_pow2(a, inverse);
        return a;
    }
    // Bluestein: X_m = conj(c_m) * sum_j (a_j conj(c_j)) c_{m-j}, c_j = e^{i pi j^2 / n}
    const double sign = inverse ? 1.0 : -1.0;
    const std::size_t L = next_pow2(2 * n - 1);
    cvec u(L, 0.0), v(L, 0.0);
    std::vector<std::complex<double>> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double phase = sign * std::numbers::pi * static_cast<double>(j) *
                             static_cast<double>(j) / static_cast<double>(n);
        chirp[j] = std::polar(1.0, phase);
        u[j] = a[j] * chirp[j];
        v[j] = std::conj(chirp[j]);
        if (j > 0) v[L - j] = std::conj(chirp[j]);
    }
    transform_pow2(u, false);
    transform_pow2(v, false);
    for (std::size_t i = 0; i < L; ++i) u[i] *= v[i];
    transform_pow2(u, true);
    cvec out(n);
    for (std::size_t m = 0; m < n; ++m) out[m] = u[m] * chirp[m];
    if (inverse)
        for (auto& x : out) x /= static_cast<double>(n);
    return out;
}

cvec czt(const cvec& a, double y0, double dy, double w0, double dw, std::size_t m_count) {
    const std::size_t n = a.size();
    if (n == 0 || m_count == 0) return cvec(m_count, 0.0);
    // (w0 + m dw)(y0 + j dy) = w0 y0 + m dw y0 + j dy w0 + phi (m^2 + j^2 - (m-j)^2),
    // phi = dw dy / 2
    const double phi = 0.5 * dw * dy;
    const std::size_t L = next_pow2(n + m_count - 1);
    cvec u(L, 0.0), v(L, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double jd = static_cast<double>(j);
        u[j] = a[j] * std::polar(1.0, -(jd * dy * w0 + jd * jd * phi));
    }
    const std::size_t dmax = std::max(n, m_count);
    for (std::size_t d = 0; d < dmax; ++d) {
        const double dd = static_cast<double>(d);
        const std::complex<double> k = std::polar(1.0, dd * dd * phi);
        if (d < m_count) v[d] = k;
        if (d > 0 && d < n) v[L - d] = k;
    }
    transform_pow2(u, false);
    transform_pow2(v, false);
    for (std::size_t i = 0; i < L; ++i) u[i] *= v[i];
    transform_pow2(u, true);
    cvec out(m_count);
    for (std::size_t m = 0; m < m_count; ++m) {
        const double md = static_cast<double>(m);
        out[m] = u[m] * std::polar(1.0, -(w0 * y0 + md * dw * y0 + md * md * phi));
    }
    return out;
}

}  // namespace phaseret::fft
