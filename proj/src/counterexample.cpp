#include "phaseret/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

namespace phaseret {

namespace {

const double kPi = std::numbers::pi;
constexpr double kDedupTol = 1e-12;
constexpr std::int64_t kMaxK = 2'000'000;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_double_array(const std::vector<double>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += fmt17(xs[i]);
    }
    return s + "]";
}

}  // namespace

std::vector<double> normalize_angles(const std::vector<double>& angles) {
    if (angles.empty()) throw std::invalid_argument("normalize_angles: empty list");
    std::vector<double> out;
    out.reserve(angles.size());
    for (double a : angles) {
        double r = std::fmod(a, kPi);
        if (r < 0.0) r += kPi;
        if (r == kPi) r = 0.0;
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    std::vector<double> dedup;
    for (double a : out)
        if (dedup.empty() || a - dedup.back() > kDedupTol) dedup.push_back(a);
    return dedup;
}

std::vector<RationalAngle> normalize_angles(const std::vector<RationalAngle>& angles) {
    if (angles.empty()) throw std::invalid_argument("normalize_angles: empty list");
    std::vector<RationalAngle> out;
    out.reserve(angles.size());
    for (const auto& a : angles) out.push_back(a.mod_pi());
    std::sort(out.begin(), out.end(), [](const RationalAngle& a, const RationalAngle& b) {
        return a.radians() < b.radians();
    });
    std::vector<RationalAngle> dedup;
    for (const auto& a : out)
        if (dedup.empty() || a.radians() - dedup.back().radians() > kDedupTol)
            dedup.push_back(a);
    return dedup;
}

std::int64_t rational_angle_k(const std::vector<RationalAngle>& angles) {
    if (angles.empty()) throw std::invalid_argument("rational_angle_k: empty list");
    for (const auto& a : angles)
        if (!a.is_rational())
            throw NonRationalDifferenceError(
                "rational_angle_k: angle " + a.str() + " is not an exact rational multiple of pi");
    std::int64_t k = 2;
    for (std::size_t j = 1; j < angles.size(); ++j) {
        const RationalAngle shifted = angles[j] - angles[0];
        const std::int64_t p = shifted.denominator();
        if (p > kMaxK / k)
            throw std::domain_error("rational_angle_k: k exceeds the supported range (" +
                                    std::to_string(kMaxK) + ")");
        k *= p;
    }
    return k;
}

std::int64_t minimal_valid_k(const std::vector<RationalAngle>& angles) {
    std::int64_t m = 1;
    for (std::size_t j = 1; j < angles.size(); ++j) {
        const RationalAngle shifted = angles[j] - angles[0];
        const std::int64_t q = shifted.numerator(), p = shifted.denominator();
        const std::int64_t need = (q == 0) ? 1 : (q % 2 == 0 ? p : 2 * p);
        m = std::lcm(m, need);
    }
    return m;
}

std::pair<HermiteExpansion, HermiteExpansion> build_pair(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("build_pair: k must be >= 1");
    const double r = 1.0 / std::numbers::sqrt2;
    std::vector<complexd> plus(static_cast<std::size_t>(k) + 1, complexd(0.0));
    plus[0] = r;
    std::vector<complexd> minus = plus;
    plus.back() = complexd(0.0, r);
    minus.back() = complexd(0.0, -r);
    return {HermiteExpansion(std::move(plus)), HermiteExpansion(std::move(minus))};
}

double VerdictReport::max_sup() const {
    double m = 0.0;
    for (const auto& d : per_angle) m = std::max(m, d.sup_difference);
    return m;
}

VerdictReport indistinguishability_verdict(const HermiteExpansion& e1,
                                           const HermiteExpansion& e2,
                                           const std::vector<RationalAngle>& angles,
                                           const Grid& g, double tol) {
    std::vector<int> indices;
    for (const HermiteExpansion* e : {&e1, &e2})
        for (int n = 0; n <= e->max_index(); ++n)
            if (e->coefficient(n) != complexd(0.0)) indices.push_back(n);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

    const std::vector<double> xs = g.points();
    const auto rows = hermite_rows(indices, xs);

    VerdictReport rep;
    rep.tolerance = tol;
    rep.indistinguishable = true;
    for (const auto& theta : angles) {
        std::vector<double> d1(xs.size(), 0.0), d2(xs.size(), 0.0);
        std::vector<complexd> f1(xs.size(), complexd(0.0)), f2(xs.size(), complexd(0.0));
        for (std::size_t s = 0; s < indices.size(); ++s) {
            const complexd ph = frft_phase(indices[s], theta);
            const complexd a1 = e1.coefficient(indices[s]) * ph;
            const complexd a2 = e2.coefficient(indices[s]) * ph;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                f1[i] += a1 * rows[s][i];
                f2[i] += a2 * rows[s][i];
            }
        }
        AngleDeviation dev;
        dev.angle = theta.radians();
        double tv = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            d1[i] = std::norm(f1[i]);
            d2[i] = std::norm(f2[i]);
            const double diff = std::abs(d1[i] - d2[i]);
            dev.sup_difference = std::max(dev.sup_difference, diff);
            tv += trapezoid_weight(g, i) * diff;
        }
        dev.tv_distance = 0.5 * tv;
        rep.indistinguishable = rep.indistinguishable && dev.sup_difference <= tol;
        rep.per_angle.push_back(dev);
    }
    return rep;
}

VerdictReport indistinguishability_verdict(const HermiteExpansion& e1,
                                           const HermiteExpansion& e2,
                                           const std::vector<double>& angles, const Grid& g,
                                           double tol) {
    std::vector<RationalAngle> ra;
    ra.reserve(angles.size());
    for (double a : angles) ra.push_back(RationalAngle::real(a));
    return indistinguishability_verdict(e1, e2, ra, g, tol);
}

VerdictReport indistinguishability_verdict(const SampledSignal& s1, const SampledSignal& s2,
                                           const std::vector<double>& angles, double tol) {
    if (!(s1.grid == s2.grid)) throw GridMismatchError("verdict: signals on different grids");
    VerdictReport rep;
    rep.tolerance = tol;
    rep.indistinguishable = true;
    for (double theta : angles) {
        const IntensityProfile p1 = intensity_of(frft_grid(s1, theta));
        const IntensityProfile p2 = intensity_of(frft_grid(s2, theta));
        AngleDeviation dev;
        dev.angle = theta;
        dev.sup_difference = max_abs_difference(p1, p2);
        dev.tv_distance = total_variation_distance(p1, p2);
        rep.indistinguishable = rep.indistinguishable && dev.sup_difference <= tol;
        rep.per_angle.push_back(dev);
    }
    return rep;
}

TripleReduction reduce_triple(double theta1, double theta2, double theta3) {
    const std::vector<double> norm = normalize_angles({theta1, theta2, theta3});
    if (norm.size() != 3)
        throw DegenerateAnglesError("reduce_triple: need three distinct angles mod pi");
    TripleReduction red;
    red.matrix = canonical_triple_matrix(norm[0], norm[1], norm[2]);
    for (int i = 0; i < 3; ++i)
        red.images[static_cast<std::size_t>(i)] =
            map_line(red.matrix, QuadratureLine(norm[static_cast<std::size_t>(i)]));
    return red;
}

std::string CounterexampleReport::to_json() const {
    std::vector<double> sups, tvs;
    for (const auto& d : per_angle) {
        sups.push_back(d.sup_difference);
        tvs.push_back(d.tv_distance);
    }
    std::string s = "{\"angles\": " + json_double_array(angles);
    s += ", \"k\": " + std::to_string(k);
    s += ", \"sup_deviations\": " + json_double_array(sups);
    s += ", \"tv_distances\": " + json_double_array(tvs);
    s += ", \"overlap_modulus\": " + fmt17(overlap_modulus);
    s += ", \"tolerance\": " + fmt17(tolerance);
    s += std::string(", \"verdict\": ") + (verdict ? "true" : "false");
    if (!note.empty()) s += ", \"note\": \"" + note + "\"";
    s += "}";
    return s;
}

RationalPair rational_counterexample(const std::vector<RationalAngle>& angles, const Grid& g,
                               double tol) {
    const std::vector<RationalAngle> norm = normalize_angles(angles);
    const std::int64_t k = rational_angle_k(norm);
    auto [plus, minus] = build_pair(k);

    // counterexample for the original angles: rotate back by R(theta_1) = F_{-theta_1}
    const RationalAngle theta1 = norm[0];
    if (!theta1.is_zero()) {
        plus = frft_spectral(plus, -theta1);
        minus = frft_spectral(minus, -theta1);
    }

    RationalPair out;
    out.plus = std::move(plus);
    out.minus = std::move(minus);

    const VerdictReport verdict =
        indistinguishability_verdict(out.plus, out.minus, norm, g, tol);

    complexd overlap = 0.0;
    for (int n = 0; n <= out.plus.max_index(); ++n)
        overlap += std::conj(out.plus.coefficient(n)) * out.minus.coefficient(n);

    CounterexampleReport& rep = out.report;
    for (const auto& a : norm) rep.angles.push_back(a.radians());
    rep.k = k;
    rep.per_angle = verdict.per_angle;
    rep.overlap_modulus = std::abs(overlap);
    rep.tolerance = tol;
    rep.verdict = verdict.indistinguishable;
    const std::int64_t mk = minimal_valid_k(norm);
    if (mk < k)
        rep.note = "a smaller k = " + std::to_string(mk) +
                   " would also satisfy k*theta_j = 0 (mod 2pi)";
    return out;
}

namespace {

// Phase-space radius every intermediate of U(S^{-1}) psi_± can reach: the
// shear and dilation factors stretch the initial disc of radius sqrt(2k+1),
// and the Gaussian decay margin stretches along with it.
double counterexample_support_radius(const SymplecticMatrix2& sinv, std::int64_t k) {
    const IwasawaFactors f = iwasawa_decompose(sinv);
    const double r = std::sqrt(2.0 * static_cast<double>(k) + 1.0) + 4.0;
    const double shear_norm = 0.5 * (std::abs(f.shear) +
                                     std::sqrt(f.shear * f.shear + 4.0));
    const double dil_norm = std::max(f.dilation, 1.0 / f.dilation);
    return r * std::max(shear_norm * dil_norm, sinv.spectral_norm());
}

}  // namespace

Grid suggested_counterexample_grid(double theta1, double theta2, double theta3,
                                   std::int64_t k) {
    const TripleReduction red = reduce_triple(theta1, theta2, theta3);
    const double hw =
        std::max(12.0, counterexample_support_radius(red.matrix.inverse(), k) + 0.5);
    // FrFT time-bandwidth rule: the chirp kernel needs n ~ 1.6 hw^2 samples
    std::size_t n = 1024;
    const double needed = 1.6 * hw * hw;
    while (static_cast<double>(n) < needed) n <<= 1;
    return Grid::symmetric(hw, n);
}

CounterexamplePair three_angle_counterexample(double theta1, double theta2, double theta3,
                                              const Grid& g, double tol) {
    const std::vector<double> norm = normalize_angles({theta1, theta2, theta3});
    if (norm.size() != 3)
        throw DegenerateAnglesError("three_angle_counterexample: need three distinct angles");
    const TripleReduction red = reduce_triple(norm[0], norm[1], norm[2]);
    const SymplecticMatrix2 sinv = red.matrix.inverse();

    constexpr std::int64_t k = 16;
    const double support = counterexample_support_radius(sinv, k);
    if (g.halfwidth() < support - 1e-9)
        throw GridTooSmallError("counterexample grid half-width " +
                                std::to_string(g.halfwidth()) + " below required " +
                                std::to_string(support));
    // chirp-kernel aliasing bound: u-sweep across the grid plus signal bandwidth
    const double band = 2.414 * g.halfwidth() + support;
    if (g.dx > 2.0 * kPi / band + 1e-12)
        throw GridTooSmallError("counterexample grid spacing " + std::to_string(g.dx) +
                                " too coarse for bandwidth " + std::to_string(band));

    auto [ep, em] = build_pair(k);
    const SampledSignal plus = metaplectic_apply(synthesize(ep, g), sinv);
    const SampledSignal minus = metaplectic_apply(synthesize(em, g), sinv);

    const VerdictReport verdict = indistinguishability_verdict(plus, minus, norm, tol);

    CounterexamplePair out;
    out.plus = plus;
    out.minus = minus;
    CounterexampleReport& rep = out.report;
    rep.angles = norm;
    rep.k = k;
    rep.per_angle = verdict.per_angle;
    rep.overlap_modulus = std::abs(inner_product(plus, minus));
    rep.tolerance = tol;
    rep.verdict = verdict.indistinguishable;
    return out;
}

}  // namespace phaseret
