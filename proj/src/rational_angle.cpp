#include "phaseret/rational_angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

namespace phaseret {

namespace {

double two_pi() { return 2.0 * std::numbers::pi; }

double wrap_2pi(double v) {
    double r = std::fmod(v, two_pi());
    if (r < 0.0) r += two_pi();
    return r;
}

}  // namespace

RationalAngle RationalAngle::rational(std::int64_t q, std::int64_t p) {
    if (p <= 0) throw std::invalid_argument("RationalAngle: denominator must be positive");
    RationalAngle a;
    a.rational_ = true;
    // canonical representative with q/p in [0, 2)
    std::int64_t qq = q % (2 * p);
    if (qq < 0) qq += 2 * p;
    const std::int64_t g = std::gcd(qq, p);
    a.q_ = qq / g;
    a.p_ = p / g;
    a.value_ = std::numbers::pi * static_cast<double>(a.q_) / static_cast<double>(a.p_);
    return a;
}

RationalAngle RationalAngle::real(double radians) {
    if (!std::isfinite(radians)) throw std::invalid_argument("RationalAngle: non-finite value");
    RationalAngle a;
    a.rational_ = false;
    a.q_ = 0;
    a.p_ = 1;
    a.value_ = wrap_2pi(radians);
    return a;
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
    if (rational_ && o.rational_)
        return rational(q_ * o.p_ + o.q_ * p_, p_ * o.p_);
    return real(value_ + o.value_);
}

RationalAngle RationalAngle::operator-(const RationalAngle& o) const {
    if (rational_ && o.rational_)
        return rational(q_ * o.p_ - o.q_ * p_, p_ * o.p_);
    return real(value_ - o.value_);
}

RationalAngle RationalAngle::operator-() const {
    if (rational_) return rational(-q_, p_);
    return real(-value_);
}

RationalAngle RationalAngle::mod_pi() const {
    if (rational_) {
        std::int64_t qq = q_ % p_;  // q/p in [0,2) -> mod 1
        return rational(qq, p_);   // angle q'*pi/p in [0, pi)
    }
    double r = std::fmod(value_, std::numbers::pi);
    if (r < 0.0) r += std::numbers::pi;
    return real(r);
}

bool RationalAngle::is_zero() const {
    return rational_ ? q_ == 0 : value_ == 0.0;
}

bool operator==(const RationalAngle& a, const RationalAngle& b) {
    if (a.rational_ && b.rational_) return a.q_ == b.q_ && a.p_ == b.p_;
    return a.value_ == b.value_ && a.rational_ == b.rational_;
}

std::string RationalAngle::str() const {
    if (rational_) {
        if (q_ == 0) return "0";
        std::string s = (q_ == 1) ? "pi" : std::to_string(q_) + "pi";
        if (p_ != 1) s += "/" + std::to_string(p_);
        return s;
    }
    return std::to_string(value_);
}

double cot_of(const RationalAngle& theta) {
    if (theta.is_rational()) {
        const std::int64_t p = theta.denominator();
        std::int64_t r = theta.numerator() % p;  // mod pi
        if (r == 0) throw DegenerateAnglesError("cot undefined at multiples of pi");
        if (2 * r == p) return 0.0;
        if (4 * r == p) return 1.0;
        if (4 * r == 3 * p) return -1.0;
        const double v = std::numbers::pi * static_cast<double>(r) / static_cast<double>(p);
        return std::cos(v) / std::sin(v);
    }
    double v = std::fmod(theta.radians(), std::numbers::pi);
    if (v < 0.0) v += std::numbers::pi;
    if (v == 0.0) throw DegenerateAnglesError("cot undefined at multiples of pi");
    return std::cos(v) / std::sin(v);
}

namespace {

bool parse_int(std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t pos = 0;
        out = std::stod(std::string(s), &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

}  // namespace

namespace {

// A plain number, or a q*pi/p form read as a number (for acot arguments,
// where the value is a slope and must not be wrapped as an angle).
double parse_number_or_pi(const std::string& s) {
    const auto pipos = s.find("pi");
    if (pipos == std::string::npos) {
        double v = 0.0;
        if (!parse_double(s, v)) throw std::invalid_argument("bad numeric syntax: " + s);
        return v;
    }
    std::string before = s.substr(0, pipos);
    const std::string after = s.substr(pipos + 2);
    double sign = 1.0;
    if (!before.empty() && (before[0] == '+' || before[0] == '-')) {
        if (before[0] == '-') sign = -1.0;
        before = before.substr(1);
    }
    double q = 1.0, p = 1.0;
    if (!before.empty() && !parse_double(before, q))
        throw std::invalid_argument("bad numeric syntax: " + s);
    if (!after.empty()) {
        if (after[0] != '/' || !parse_double(after.substr(1), p))
            throw std::invalid_argument("bad numeric syntax: " + s);
    }
    return sign * q * std::numbers::pi / p;
}

}  // namespace

RationalAngle parse_angle(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty angle");

    if (s.rfind("acot(", 0) == 0 && s.back() == ')') {
        const double slope = parse_number_or_pi(s.substr(5, s.size() - 6));
        return RationalAngle::real(std::atan2(1.0, slope));
    }

    const auto pipos = s.find("pi");
    if (pipos != std::string::npos) {
        const std::string before = s.substr(0, pipos);
        const std::string after = s.substr(pipos + 2);
        std::int64_t q = 1, p = 1;
        bool neg = false;
        std::string num = before;
        if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
            neg = num[0] == '-';
            num = num.substr(1);
        }
        // numerator and optional "/den" may sit before or after "pi"
        if (const auto slash = num.find('/'); slash != std::string::npos) {
            if (!parse_int(num.substr(0, slash), q) || !parse_int(num.substr(slash + 1), p) ||
                !after.empty())
                throw std::invalid_argument("bad angle syntax: " + std::string(text));
        } else {
            if (!num.empty() && !parse_int(num, q))
                throw std::invalid_argument("bad angle syntax: " + std::string(text));
            if (!after.empty()) {
                if (after[0] != '/' || !parse_int(after.substr(1), p))
                    throw std::invalid_argument("bad angle syntax: " + std::string(text));
            }
        }
        if (p <= 0 || p > 1'000'000 || std::abs(q) > 1'000'000'000)
            throw std::invalid_argument("bad angle denominator: " + std::string(text));
        return RationalAngle::rational(neg ? -q : q, p);
    }

    std::int64_t i = 0;
    if (parse_int(s, i) && i == 0) return RationalAngle::rational(0, 1);
    double v = 0.0;
    if (parse_double(s, v)) return RationalAngle::real(v);
    throw std::invalid_argument("bad angle syntax: " + std::string(text));
}

}  // namespace phaseret
