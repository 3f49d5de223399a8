#include "phaseret/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace phaseret {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_row(const std::string& line, std::size_t expected,
                              std::size_t lineno) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(cell, &pos));
        } catch (...) {
            throw CsvFormatError("csv: bad number on line " + std::to_string(lineno));
        }
    }
    if (out.size() != expected)
        throw CsvFormatError("csv: expected " + std::to_string(expected) +
                             " columns on line " + std::to_string(lineno));
    return out;
}

Grid grid_from_abscissae(const std::vector<double>& xs) {
    if (xs.size() < 2) throw CsvFormatError("csv: need at least two rows");
    const double x0 = xs.front();
    const double dx = (xs.back() - x0) / static_cast<double>(xs.size() - 1);
    if (!(dx > 0.0)) throw CsvFormatError("csv: abscissae must be increasing");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double expect = x0 + dx * static_cast<double>(i);
        if (std::abs(xs[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
            throw CsvFormatError("csv: non-uniform abscissae near row " + std::to_string(i + 2));
    }
    return Grid{x0, dx, xs.size()};
}

std::string read_header(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw CsvFormatError("csv: empty input");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    return header;
}

}  // namespace

void write_signal_csv(std::ostream& os, const SampledSignal& psi) {
    os << "x,re,im\n";
    for (std::size_t i = 0; i < psi.grid.n_points; ++i)
        os << fmt17(psi.grid.point(i)) << ',' << fmt17(psi.values[i].real()) << ','
           << fmt17(psi.values[i].imag()) << '\n';
}

SampledSignal read_signal_csv(std::istream& is) {
    if (read_header(is) != "x,re,im") throw CsvFormatError("csv: expected header x,re,im");
    std::vector<double> xs;
    std::vector<complexd> vals;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto row = parse_row(line, 3, lineno);
        xs.push_back(row[0]);
        vals.emplace_back(row[1], row[2]);
    }
    return SampledSignal(grid_from_abscissae(xs), std::move(vals));
}

void write_intensity_csv(std::ostream& os, const IntensityProfile& p) {
    os << "x,density\n";
    for (std::size_t i = 0; i < p.grid.n_points; ++i)
        os << fmt17(p.grid.point(i)) << ',' << fmt17(p.density[i]) << '\n';
}

IntensityProfile read_intensity_csv(std::istream& is) {
    if (read_header(is) != "x,density")
        throw CsvFormatError("csv: expected header x,density");
    std::vector<double> xs, ds;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto row = parse_row(line, 2, lineno);
        xs.push_back(row[0]);
        ds.push_back(row[1]);
    }
    return IntensityProfile(grid_from_abscissae(xs), std::move(ds));
}

void write_wigner_csv(std::ostream& os, const WignerGrid& w) {
    os << "q,p,w\n";
    for (std::size_t iq = 0; iq < w.qgrid.n_points; ++iq)
        for (std::size_t ip = 0; ip < w.pgrid.n_points; ++ip)
            os << fmt17(w.qgrid.point(iq)) << ',' << fmt17(w.pgrid.point(ip)) << ','
               << fmt17(w.at(iq, ip)) << '\n';
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

}  // namespace

void write_signal_csv_file(const std::string& path, const SampledSignal& psi) {
    auto os = open_out(path);
    write_signal_csv(os, psi);
}

SampledSignal read_signal_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return read_signal_csv(is);
}

void write_intensity_csv_file(const std::string& path, const IntensityProfile& p) {
    auto os = open_out(path);
    write_intensity_csv(os, p);
}

void write_wigner_csv_file(const std::string& path, const WignerGrid& w) {
    auto os = open_out(path);
    write_wigner_csv(os, w);
}

}  // namespace phaseret
