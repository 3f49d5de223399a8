#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "phaseret/errors.hpp"

namespace phaseret {

/// An angle that is either an exact rational multiple q*pi/p (reduced,
/// canonical representative in [0, 2pi)) or a plain real value in [0, 2pi).
class RationalAngle {
  public:
    RationalAngle() : rational_(true), q_(0), p_(1), value_(0.0) {}

    static RationalAngle rational(std::int64_t q, std::int64_t p);
    static RationalAngle real(double radians);

    bool is_rational() const { return rational_; }
    std::int64_t numerator() const { return q_; }
    std::int64_t denominator() const { return p_; }
    double radians() const { return value_; }

    RationalAngle operator+(const RationalAngle& o) const;
    RationalAngle operator-(const RationalAngle& o) const;
    RationalAngle operator-() const;

    // Line identification: the representative in [0, pi).
    RationalAngle mod_pi() const;

    bool is_zero() const;

    friend bool operator==(const RationalAngle& a, const RationalAngle& b);

    std::string str() const;

  private:
    bool rational_;
    std::int64_t q_, p_;  // valid when rational_
    double value_;        // always the radian value
};

// cot(theta) with exact values at the quarter multiples q/p in {1/4, 1/2, 3/4}
// (after mod-pi reduction). Throws DegenerateAnglesError at multiples of pi.
double cot_of(const RationalAngle& theta);

// Parses "0.37", "pi", "pi/4", "3pi/8", "2pi/3", "-pi/6", "3/8pi", "acot(pi)",
// "acot(2.5)". Rational-multiple forms stay exact. Throws std::invalid_argument.
RationalAngle parse_angle(std::string_view text);

}  // namespace phaseret
