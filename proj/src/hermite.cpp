#include "phaseret/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaseret {

namespace {

constexpr double kGridMargin = 4.0;
const double kH0Norm = std::pow(std::numbers::pi, -0.25);

}  // namespace

complexd HermiteExpansion::coefficient(int n) const {
    if (n < 0 || n > max_index()) return 0.0;
    return coefficients[static_cast<std::size_t>(n)];
}

double HermiteExpansion::squared_coefficient_norm() const {
    double acc = 0.0;
    for (const auto& c : coefficients) acc += std::norm(c);
    return acc;
}

double hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: negative index");
    if (!std::isfinite(x)) throw std::invalid_argument("hermite_eval: non-finite argument");
    double hm = kH0Norm * std::exp(-0.5 * x * x);
    if (n == 0) return hm;
    double h = std::numbers::sqrt2 * x * hm;
    for (int k = 1; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1.0)) * x * h - std::sqrt(k / (k + 1.0)) * hm;
        hm = h;
        h = next;
    }
    return h;
}

std::vector<double> hermite_row(int n, const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = hermite_eval(n, xs[i]);
    return out;
}

std::vector<std::vector<double>> hermite_rows(const std::vector<int>& indices,
                                              const std::vector<double>& xs) {
    for (std::size_t k = 1; k < indices.size(); ++k)
        if (indices[k] <= indices[k - 1])
            throw std::invalid_argument("hermite_rows: indices must be strictly ascending");
    if (!indices.empty() && indices.front() < 0)
        throw std::invalid_argument("hermite_rows: negative index");

    std::vector<std::vector<double>> rows(indices.size(), std::vector<double>(xs.size()));
    if (indices.empty()) return rows;
    const int top = indices.back();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        double hm = kH0Norm * std::exp(-0.5 * x * x);
        double h = std::numbers::sqrt2 * x * hm;
        std::size_t slot = 0;
        if (indices[slot] == 0) rows[slot++][i] = hm;
        if (slot < indices.size() && indices[slot] == 1 && top >= 1) rows[slot++][i] = h;
        for (int k = 1; k < top && slot < indices.size(); ++k) {
            const double next =
                std::sqrt(2.0 / (k + 1.0)) * x * h - std::sqrt(k / (k + 1.0)) * hm;
            hm = h;
            h = next;
            if (indices[slot] == k + 1) rows[slot++][i] = h;
        }
    }
    return rows;
}

double required_halfwidth(int max_index) {
    return std::sqrt(2.0 * max_index + 1.0) + kGridMargin;
}

void require_grid_adequate(const Grid& g, int max_index) {
    if (g.halfwidth() < required_halfwidth(max_index))
        throw GridTooSmallError("grid half-width " + std::to_string(g.halfwidth()) +
                                " below the turning point of h_" + std::to_string(max_index) +
                                " plus margin (" + std::to_string(required_halfwidth(max_index)) +
                                ")");
}

HermiteExpansion expand(const SampledSignal& psi, int N) {
    if (N < 0) throw std::invalid_argument("expand: negative max index");
    require_grid_adequate(psi.grid, N);
    std::vector<complexd> c(static_cast<std::size_t>(N) + 1, complexd(0.0));
    const Grid& g = psi.grid;
    for (std::size_t i = 0; i < g.n_points; ++i) {
        const double x = g.point(i);
        const complexd wpsi = trapezoid_weight(g, i) * psi.values[i];
        double hm = kH0Norm * std::exp(-0.5 * x * x);
        c[0] += hm * wpsi;
        if (N == 0) continue;
        double h = std::numbers::sqrt2 * x * hm;
        c[1] += h * wpsi;
        for (int k = 1; k < N; ++k) {
            const double next =
                std::sqrt(2.0 / (k + 1.0)) * x * h - std::sqrt(k / (k + 1.0)) * hm;
            hm = h;
            h = next;
            c[static_cast<std::size_t>(k) + 1] += h * wpsi;
        }
    }
    return HermiteExpansion(std::move(c));
}

SampledSignal synthesize(const HermiteExpansion& e, const Grid& g) {
    std::vector<complexd> vals(g.n_points, complexd(0.0));
    const int N = e.max_index();
    if (N < 0) return SampledSignal(g, std::move(vals));
    for (std::size_t i = 0; i < g.n_points; ++i) {
        const double x = g.point(i);
        double hm = kH0Norm * std::exp(-0.5 * x * x);
        complexd acc = e.coefficients[0] * hm;
        if (N > 0) {
            double h = std::numbers::sqrt2 * x * hm;
            acc += e.coefficients[1] * h;
            for (int k = 1; k < N; ++k) {
                const double next =
                    std::sqrt(2.0 / (k + 1.0)) * x * h - std::sqrt(k / (k + 1.0)) * hm;
                hm = h;
                h = next;
                acc += e.coefficients[static_cast<std::size_t>(k) + 1] * h;
            }
        }
        vals[i] = acc;
    }
    return SampledSignal(g, std::move(vals));
}

}  // namespace phaseret
