#pragma once

#include <iosfwd>
#include <string>

#include "phaseret/grid.hpp"
#include "phaseret/phasespace.hpp"

namespace phaseret {

// Signal CSV: header "x,re,im", one row per grid point, 17 significant digits.
void write_signal_csv(std::ostream& os, const SampledSignal& psi);
SampledSignal read_signal_csv(std::istream& is);

// Intensity CSV: header "x,density".
void write_intensity_csv(std::ostream& os, const IntensityProfile& p);
IntensityProfile read_intensity_csv(std::istream& is);

// Wigner CSV: header "q,p,w", row-major in q.
void write_wigner_csv(std::ostream& os, const WignerGrid& w);

void write_signal_csv_file(const std::string& path, const SampledSignal& psi);
SampledSignal read_signal_csv_file(const std::string& path);
void write_intensity_csv_file(const std::string& path, const IntensityProfile& p);
void write_wigner_csv_file(const std::string& path, const WignerGrid& w);

}  // namespace phaseret
