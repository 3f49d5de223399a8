#pragma once

#include "phaseret/grid.hpp"
#include "phaseret/hermite.hpp"
#include "phaseret/rational_angle.hpp"

namespace phaseret {

// Unit phase e^{-i n theta}; exact {+-1, +-i} for quarter-turn rationals.
complexd frft_phase(int n, const RationalAngle& theta);

// F_theta on Hermite coefficients: c_n -> e^{-i n theta} c_n.
HermiteExpansion frft_spectral(const HermiteExpansion& e, const RationalAngle& theta);
HermiteExpansion frft_spectral(const HermiteExpansion& e, double theta);

// F_theta on a symmetric sampled grid by chirp multiply / chirp convolve /
// chirp multiply. Near multiples of pi/2 the transform is the exact quarter
// turn (identity, DFT, reflection, inverse DFT) composed with a small-angle
// residual chirp splitting.
SampledSignal frft_grid(const SampledSignal& psi, double theta);

// density(x) = |[F_theta psi](x)|^2 via the spectral route.
IntensityProfile quadrature_intensity(const HermiteExpansion& e, const RationalAngle& theta,
                                      const Grid& g);
IntensityProfile quadrature_intensity(const HermiteExpansion& e, double theta, const Grid& g);

// First moment of the quadrature intensity, integrated on an internally
// sized grid.
double quadrature_mean(const HermiteExpansion& e, double theta);

}  // namespace phaseret
