#pragma once

#include <stdexcept>

namespace phaseret {

// Signals compared or combined on different grids.
struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Grid does not cover the classical support of the requested Hermite content.
struct GridTooSmallError : std::domain_error {
    using std::domain_error::domain_error;
};

// Grid transform requires a grid symmetric about the origin.
struct AsymmetricGridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonSymplecticError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Target angles with cot(theta2') <= cot(theta3'): a^2 would be nonpositive.
struct InfeasibleTargetsError : std::domain_error {
    using std::domain_error::domain_error;
};

// Angle list whose pairwise differences are not all rational multiples of pi.
struct NonRationalDifferenceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coincident (mod pi) or badly ordered angles.
struct DegenerateAnglesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CsvFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace phaseret
