#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "phaseret/frft.hpp"
#include "phaseret/symplectic.hpp"
#include "phaseret/weyl.hpp"

namespace phaseret {

// Reduce mod pi into [0, pi), sort ascending, merge duplicates (1e-12).
std::vector<double> normalize_angles(const std::vector<double>& angles);
std::vector<RationalAngle> normalize_angles(const std::vector<RationalAngle>& angles);

// k = 2 * p_2 ... p_n over the reduced denominators of the shifted angles
// theta_j - theta_1; guarantees k * (theta_j - theta_1) = 0 (mod 2 pi).
// Input must be normalized and sorted; all differences must be rational.
std::int64_t rational_angle_k(const std::vector<RationalAngle>& angles);

// Smallest positive integer m with m * (theta_j - theta_1) = 0 (mod 2 pi)
// for all j (for reporting when the recipe's k is not minimal).
std::int64_t minimal_valid_k(const std::vector<RationalAngle>& angles);

// psi_± = (h_0 ± i h_k) / sqrt(2).
std::pair<HermiteExpansion, HermiteExpansion> build_pair(std::int64_t k);

struct AngleDeviation {
    double angle = 0.0;
    double sup_difference = 0.0;
    double tv_distance = 0.0;
};

struct VerdictReport {
    std::vector<AngleDeviation> per_angle;
    double tolerance = 0.0;
    bool indistinguishable = false;

    double max_sup() const;
};

// True iff the two states' quadrature densities agree within tol in sup norm
// at every angle. Spectral route; basis rows are evaluated once per call.
VerdictReport indistinguishability_verdict(const HermiteExpansion& e1,
                                           const HermiteExpansion& e2,
                                           const std::vector<RationalAngle>& angles,
                                           const Grid& g, double tol);
VerdictReport indistinguishability_verdict(const HermiteExpansion& e1,
                                           const HermiteExpansion& e2,
                                           const std::vector<double>& angles, const Grid& g,
                                           double tol);
// Grid-route variant for sampled signals (densities |F_theta psi|^2 via frft_grid).
VerdictReport indistinguishability_verdict(const SampledSignal& s1, const SampledSignal& s2,
                                           const std::vector<double>& angles, double tol);

struct TripleReduction {
    SymplecticMatrix2 matrix;
    std::array<QuadratureLine, 3> images;
};

// Canonical matrix for a distinct normalized triple, with its line images.
TripleReduction reduce_triple(double theta1, double theta2, double theta3);

struct CounterexampleReport {
    std::vector<double> angles;
    std::int64_t k = 0;
    std::vector<AngleDeviation> per_angle;
    double overlap_modulus = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
    std::string note;  // set when a smaller k would also close the phases

    std::string to_json() const;
};

struct CounterexamplePair {
    SampledSignal plus;
    SampledSignal minus;
    CounterexampleReport report;
};

struct RationalPair {
    HermiteExpansion plus;
    HermiteExpansion minus;
    CounterexampleReport report;
};

// Direct construction for all-rational angle lists: build_pair(k) rotated back
// by R(theta_1), then the spectral verdict on the original angles.
RationalPair rational_counterexample(const std::vector<RationalAngle>& angles, const Grid& g,
                               double tol = 1e-10);

// Arbitrary-triple construction: psi_± for k = 16 pushed through U(S^{-1})
// where S is the canonical triple matrix; verdict on the original angles.
CounterexamplePair three_angle_counterexample(double theta1, double theta2, double theta3,
                                              const Grid& g, double tol = 1e-5);

// A grid adequate for three_angle_counterexample on this triple (support and
// bandwidth both scale with the matrix norm).
Grid suggested_counterexample_grid(double theta1, double theta2, double theta3,
                                   std::int64_t k = 16);

}  // namespace phaseret
