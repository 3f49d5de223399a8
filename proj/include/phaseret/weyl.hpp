#pragma once

#include "phaseret/frft.hpp"
#include "phaseret/grid.hpp"
#include "phaseret/symplectic.hpp"

namespace phaseret {

/// Phase-space displacement (q, p).
struct PhasePoint {
    double q = 0.0;
    double p = 0.0;
};

// {(q,p), (u,v)} = q*v - p*u.
double symplectic_form(const PhasePoint& x, const PhasePoint& y);

// (W(q,p) psi)(t) = e^{-i q p / 2} e^{i p t} psi(t - q); the position shift is
// band-limited so arbitrary real q is supported.
SampledSignal weyl_apply(const SampledSignal& psi, const PhasePoint& x);

// integral e^{-i u x} density_theta(x) dx from the spectral-route intensity;
// equals <psi | W(u sin theta, -u cos theta) psi>.
complexd characteristic_function(const HermiteExpansion& e, double theta, double u,
                                 const Grid& g);

// U(S) psi via S = R(theta) D(a) N(b): shear chirp, band-limited dilation,
// then rotation through the grid FrFT. Defined up to a global phase.
SampledSignal metaplectic_apply(const SampledSignal& psi, const SymplecticMatrix2& s);

}  // namespace phaseret
