#include "phaseret/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

namespace phaseret {

namespace {

const double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

SymplecticMatrix2 SymplecticMatrix2::operator*(const SymplecticMatrix2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

double SymplecticMatrix2::spectral_norm() const {
    const double t = a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22;
    const double d = det();
    const double disc = std::max(t * t - 4.0 * d * d, 0.0);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

SymplecticMatrix2 SymplecticMatrix2::rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c, -s, s, c};
}

SymplecticMatrix2 SymplecticMatrix2::dilation(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("dilation factor must be positive");
    return {a, 0.0, 0.0, 1.0 / a};
}

SymplecticMatrix2 SymplecticMatrix2::shear(double b) { return {1.0, 0.0, b, 1.0}; }

void require_symplectic(const SymplecticMatrix2& s, double tol) {
    if (std::abs(s.det() - 1.0) > tol)
        throw NonSymplecticError("matrix determinant " + std::to_string(s.det()) +
                                 " is not 1 within tolerance");
}

QuadratureLine::QuadratureLine(double theta) {
    double r = std::fmod(theta, kPi);
    if (r < 0.0) r += kPi;
    if (r == kPi) r = 0.0;
    angle = r;
}

QuadratureLine QuadratureLine::from_direction(double vx, double vy) {
    if (vx == 0.0 && vy == 0.0)
        throw std::invalid_argument("QuadratureLine: zero direction vector");
    return QuadratureLine(std::atan2(vx, -vy));
}

std::array<double, 2> QuadratureLine::direction() const {
    return {std::sin(angle), -std::cos(angle)};
}

QuadratureLine map_line(const SymplecticMatrix2& s, const QuadratureLine& line) {
    const auto d = line.direction();
    const double vx = s.a11 * d[0] + s.a12 * d[1];
    const double vy = s.a21 * d[0] + s.a22 * d[1];
    return QuadratureLine::from_direction(vx, vy);
}

namespace {

void require_ordered_triple(double t1, double t2, double t3) {
    if (!(0.0 <= t1 && t1 < t2 && t2 < t3 && t3 < kPi))
        throw DegenerateAnglesError("triple must satisfy 0 <= theta1 < theta2 < theta3 < pi");
    constexpr double kMinGap = 1e-12;
    if (t2 - t1 < kMinGap || t3 - t2 < kMinGap || t3 - t1 < kMinGap)
        throw DegenerateAnglesError("coincident angles in triple");
}

}  // namespace

SymplecticMatrix2 canonical_triple_matrix(double t1, double t2, double t3) {
    require_ordered_triple(t1, t2, t3);
    const double s21 = std::sin(t2 - t1);
    const double s32 = std::sin(t3 - t2);
    const double s31 = std::sin(t3 - t1);
    const double outer = 1.0 / std::sqrt(s31);
    const double top = std::sqrt(s32 / s21);
    const double bottom = std::sqrt(s21 / s32);
    return {outer * top * std::cos(t1), outer * top * std::sin(t1),
            outer * bottom * std::cos(t3), outer * bottom * std::sin(t3)};
}

std::array<double, 3> canonical_triple_scales(double t1, double t2, double t3) {
    require_ordered_triple(t1, t2, t3);
    const double s21 = std::sin(t2 - t1);
    const double s32 = std::sin(t3 - t2);
    const double s31 = std::sin(t3 - t1);
    return {std::sqrt(s31 * s21 / s32), std::sqrt(2.0 * s32 * s21 / s31),
            std::sqrt(s32 * s31 / s21)};
}

TriangularParams triangular_from_targets(double theta2p, double theta3p) {
    const double c2 = cot_of(RationalAngle::real(theta2p));
    const double c3 = cot_of(RationalAngle::real(theta3p));
    const double denom = c2 - c3;
    if (!(denom > 1e-12))
        throw InfeasibleTargetsError("cot(theta2') - cot(theta3') must be positive");
    const double a = std::sqrt(1.0 / denom);
    return {a, -a * c3};
}

SymplecticMatrix2 triangular_matrix(const TriangularParams& t) {
    return {t.a, 0.0, t.b, 1.0 / t.a};
}

double fourth_line_residual(double theta4, double theta2p, double theta3p, double theta4p) {
    const TriangularParams t = triangular_from_targets(theta2p, theta3p);
    const double c4 = cot_of(RationalAngle::real(theta4));
    const double c4p = cot_of(RationalAngle::real(theta4p));
    return std::abs(c4 - (t.a * t.a * c4p + t.a * t.b));
}

std::string ObstructionReport::to_json() const {
    std::string s = "{\"theta4\": " + fmt17(theta4);
    s += ", \"max_denominator\": " + std::to_string(max_denominator);
    s += ", \"min_residual\": " + fmt17(min_residual);
    s += ", \"argmin\": [";
    for (std::size_t i = 0; i < argmin.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(argmin[i]);
    }
    s += "], \"examined\": " + std::to_string(examined) + "}";
    return s;
}

const char* ObstructionReport::caveat() {
    return "caveat: a positive minimum over denominators bounded by D is consistent with "
           "the transcendence obstruction but does not prove it; only the searched "
           "rational targets are excluded.";
}

ObstructionReport obstruction_search(const RationalAngle& theta4, int max_denominator) {
    if (max_denominator < 2)
        throw std::invalid_argument("obstruction_search: max denominator must be >= 2");

    struct Fraction {
        std::int64_t q, p;
        double cot;
    };
    std::vector<Fraction> fr;
    for (std::int64_t p = 2; p <= max_denominator; ++p)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(q, p) == 1) fr.push_back({q, p, cot_of(RationalAngle::rational(q, p))});
    std::sort(fr.begin(), fr.end(), [](const Fraction& a, const Fraction& b) {
        return a.q * b.p < b.q * a.p;  // ascending angle
    });

    const double c4 = cot_of(theta4);
    ObstructionReport rep;
    rep.theta4 = theta4.mod_pi().radians();
    rep.max_denominator = max_denominator;
    rep.min_residual = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < fr.size(); ++i) {
        for (std::size_t j = i + 1; j < fr.size(); ++j) {
            const double denom = fr[i].cot - fr[j].cot;  // positive: cot decreases on (0,pi)
            if (denom < 1e-12) continue;                  // coincident lines, a^2 blow-up
            for (std::size_t l = 0; l < fr.size(); ++l) {
                if (l == i || l == j) continue;
                const double residual = std::abs(c4 - (fr[l].cot - fr[j].cot) / denom);
                ++rep.examined;
                if (residual < rep.min_residual) {
                    rep.min_residual = residual;
                    rep.argmin = {fr[i].q, fr[i].p, fr[j].q, fr[j].p, fr[l].q, fr[l].p};
                }
            }
        }
    }
    return rep;
}

IwasawaFactors iwasawa_decompose(const SymplecticMatrix2& s) {
    require_symplectic(s);
    const double a = 1.0 / std::hypot(s.a12, s.a22);
    const double theta = std::atan2(-s.a12, s.a22);
    const double c = std::cos(theta), sn = std::sin(theta);
    const double b = a * (s.a21 * c - s.a11 * sn);
    return {theta, a, b};
}

}  // namespace phaseret
