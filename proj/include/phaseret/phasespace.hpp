#pragma once

#include <vector>

#include "phaseret/grid.hpp"

namespace phaseret {

/// Real function on a rectangular phase-space grid, row-major in q.
struct WignerGrid {
    Grid qgrid;
    Grid pgrid;
    std::vector<double> values;
    double max_imag_residue = 0.0;

    double at(std::size_t iq, std::size_t ip) const {
        return values[iq * pgrid.n_points + ip];
    }
};

// W(q,p) = (1/pi) * integral conj(psi(q+y)) psi(q-y) e^{2ipy} dy, evaluated by
// a discrete transform over y per q row on psi's grid.
WignerGrid wigner(const SampledSignal& psi, const Grid& pgrid);

double wigner_integral(const WignerGrid& w);

// Line integrals of W along lines perpendicular to direction theta:
// slice(s) = integral W(s cos theta - t sin theta, s sin theta + t cos theta) dt,
// sampled at fixed step min(dq,dp)/2 with cubic interpolation of the grid.
IntensityProfile radon_slice(const WignerGrid& w, double theta, const Grid& out);

}  // namespace phaseret
