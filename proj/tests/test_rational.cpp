#include <cmath>
#include <numbers>

#include "doctest.h"
#include "phaseret/rational_angle.hpp"

using namespace phaseret;

TEST_CASE("RationalAngle: reduction and canonical range") {
    const RationalAngle a = RationalAngle::rational(2, 8);  // pi/4
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 4);

    const RationalAngle b = RationalAngle::rational(-1, 4);  // 7pi/4
    CHECK(b.numerator() == 7);
    CHECK(b.denominator() == 4);

    const RationalAngle c = RationalAngle::rational(9, 4);  // wraps past 2pi
    CHECK(c.numerator() == 1);
    CHECK(c.denominator() == 4);
}

TEST_CASE("RationalAngle: exact arithmetic and mod pi") {
    const RationalAngle x = RationalAngle::rational(1, 4);
    const RationalAngle y = RationalAngle::rational(1, 2);
    CHECK((x + y) == RationalAngle::rational(3, 4));
    CHECK((y - x) == RationalAngle::rational(1, 4));
    CHECK((-x) == RationalAngle::rational(7, 4));
    CHECK(RationalAngle::rational(3, 2).mod_pi() == RationalAngle::rational(1, 2));
}

TEST_CASE("parse_angle: accepted forms") {
    CHECK(parse_angle("pi/4") == RationalAngle::rational(1, 4));
    CHECK(parse_angle("3pi/8") == RationalAngle::rational(3, 8));
    CHECK(parse_angle("2pi/3") == RationalAngle::rational(2, 3));
    CHECK(parse_angle("3/8pi") == RationalAngle::rational(3, 8));
    CHECK(parse_angle("pi") == RationalAngle::rational(1, 1));
    CHECK(parse_angle("-pi/6") == RationalAngle::rational(11, 6));
    CHECK(parse_angle("0") == RationalAngle::rational(0, 1));
    CHECK(parse_angle("0").is_rational());

    const RationalAngle d = parse_angle("0.7");
    CHECK_FALSE(d.is_rational());
    CHECK(d.radians() == doctest::Approx(0.7).epsilon(1e-15));

    const RationalAngle ac = parse_angle("acot(pi)");
    CHECK_FALSE(ac.is_rational());
    CHECK(ac.radians() == doctest::Approx(std::atan2(1.0, std::numbers::pi)).epsilon(1e-15));
    CHECK(parse_angle("acot(-2)").radians() ==
          doctest::Approx(std::atan2(1.0, -2.0)).epsilon(1e-15));
}

TEST_CASE("parse_angle: rejected forms") {
    CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("pie"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("pi/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("3pi/8/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_angle("abc"), std::invalid_argument);
}

TEST_CASE("cot_of: exact quarter-turn values and fallbacks") {
    CHECK(cot_of(RationalAngle::rational(1, 2)) == 0.0);
    CHECK(cot_of(RationalAngle::rational(1, 4)) == 1.0);
    CHECK(cot_of(RationalAngle::rational(3, 4)) == -1.0);
    CHECK(cot_of(RationalAngle::rational(3, 2)) == 0.0);  // mod pi
    CHECK(cot_of(RationalAngle::rational(1, 3)) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(cot_of(RationalAngle::real(0.7)) ==
          doctest::Approx(std::cos(0.7) / std::sin(0.7)).epsilon(1e-15));
    CHECK_THROWS_AS(cot_of(RationalAngle::rational(0, 1)), DegenerateAnglesError);
}
