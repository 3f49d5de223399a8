#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "phaseret/rational_angle.hpp"

namespace phaseret {

/// Real 2x2 matrix with unit determinant.
struct SymplecticMatrix2 {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;

    double det() const { return a11 * a22 - a12 * a21; }
    SymplecticMatrix2 inverse() const { return {a22, -a12, -a21, a11}; }
    SymplecticMatrix2 operator*(const SymplecticMatrix2& o) const;
    // Largest singular value.
    double spectral_norm() const;

    static SymplecticMatrix2 identity() { return {}; }
    static SymplecticMatrix2 rotation(double theta);
    static SymplecticMatrix2 dilation(double a);       // diag(a, 1/a), a > 0
    static SymplecticMatrix2 shear(double b);          // [[1,0],[b,1]]
};

void require_symplectic(const SymplecticMatrix2& s, double tol = 1e-12);

/// Line L_theta through the origin with direction (sin theta, -cos theta),
/// identified mod pi; the stored angle lives in [0, pi).
struct QuadratureLine {
    double angle = 0.0;

    QuadratureLine() = default;
    explicit QuadratureLine(double theta);
    static QuadratureLine from_direction(double vx, double vy);
    // Direction vector (sin theta, -cos theta).
    std::array<double, 2> direction() const;
};

// Angle in [0, pi) of the line spanned by S * direction(L).
QuadratureLine map_line(const SymplecticMatrix2& s, const QuadratureLine& line);

// The explicit matrix sending (L_theta1, L_theta2, L_theta3) to
// (L_0, L_{pi/4}, L_{pi/2}); requires 0 <= theta1 < theta2 < theta3 < pi.
SymplecticMatrix2 canonical_triple_matrix(double theta1, double theta2, double theta3);

// Positive scale factors of the three image directions under the canonical
// matrix (for verifying the displayed mapping identities).
std::array<double, 3> canonical_triple_scales(double theta1, double theta2, double theta3);

struct TriangularParams {
    double a = 1.0;
    double b = 0.0;
};

// Lower-triangular [[a,0],[b,1/a]] fixing L_0 and sending L_{pi/4}, L_{pi/2}
// to the targets: a = sqrt(1/(cot t2' - cot t3')), b = -a cot t3'.
// Throws InfeasibleTargetsError when a^2 would be nonpositive.
TriangularParams triangular_from_targets(double theta2p, double theta3p);
SymplecticMatrix2 triangular_matrix(const TriangularParams& t);

// |cot theta4 - (a^2 cot theta4' + a b)| with (a, b) from the targets.
double fourth_line_residual(double theta4, double theta2p, double theta3p, double theta4p);

struct ObstructionReport {
    double theta4 = 0.0;
    int max_denominator = 0;
    double min_residual = 0.0;
    std::array<std::int64_t, 6> argmin{};  // q2,p2, q3,p3, q4,p4
    std::int64_t examined = 0;

    std::string to_json() const;
    static const char* caveat();
};

// Exhaustive scan of target triples (theta2', theta3', theta4') of distinct
// rationals q*pi/p in (0, pi) with p <= max_denominator and feasible a^2.
ObstructionReport obstruction_search(const RationalAngle& theta4, int max_denominator);

/// Factors of S = R(theta) * D(a) * N(b) with N lower triangular.
struct IwasawaFactors {
    double rotation = 0.0;  // theta
    double dilation = 1.0;  // a > 0
    double shear = 0.0;     // b
};

IwasawaFactors iwasawa_decompose(const SymplecticMatrix2& s);

}  // namespace phaseret
