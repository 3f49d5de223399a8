#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phaseret/counterexample.hpp"
#include "phaseret/csv.hpp"
#include "phaseret/phasespace.hpp"
#include "phaseret/weyl.hpp"
#include "verify_suites.hpp"

namespace {

using namespace phaseret;

constexpr int kExitVerdictFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

struct GridFlags {
    double halfwidth = 12.0;
    std::size_t points = 1024;
    bool touched = false;
};

void add_grid_flags(CLI::App* cmd, GridFlags& gf) {
    cmd->add_option("--grid-halfwidth", gf.halfwidth, "Grid half-width")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { gf.touched = true; });
    cmd->add_option("--grid-points", gf.points, "Number of grid points")
        ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1 << 22)))
        ->each([&](const std::string&) { gf.touched = true; });
}

std::vector<RationalAngle> parse_angles(const std::vector<std::string>& texts) {
    std::vector<RationalAngle> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_angle(t));
    return out;
}

void emit_json(const std::string& json, const std::string& path) {
    std::cout << json << "\n";
    if (!path.empty()) {
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open " + path);
        os << json << "\n";
    }
}

SampledSignal load_signal(const std::string& path) {
    if (path == "-") return read_signal_csv(std::cin);
    return read_signal_csv_file(path);
}

void store_signal(const SampledSignal& psi, const std::string& path) {
    if (path.empty()) {
        write_signal_csv(std::cout, psi);
    } else {
        write_signal_csv_file(path, psi);
    }
}

void store_intensity(const IntensityProfile& p, const std::string& path) {
    if (path.empty()) {
        write_intensity_csv(std::cout, p);
    } else {
        write_intensity_csv_file(path, p);
    }
}

int cmd_counterexample(const std::vector<std::string>& angle_args, const GridFlags& gf,
                       double tol, bool tol_given, const std::string& emit_dir,
                       const std::string& json_path) {
    std::vector<RationalAngle> parsed;
    try {
        parsed = parse_angles(angle_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    const std::vector<RationalAngle> norm = normalize_angles(parsed);
    if (norm.size() < 3) {
        std::cerr << "error: need at least 3 distinct angles mod pi\n";
        return kExitDegenerate;
    }

    bool all_rational = true;
    for (const auto& a : norm) all_rational = all_rational && a.is_rational();

    CounterexampleReport report;

    if (all_rational) {
        const Grid g = Grid::symmetric(gf.halfwidth, gf.points);
        const RationalPair pair = rational_counterexample(norm, g, tol_given ? tol : 1e-10);
        report = pair.report;
        emit_json(report.to_json(), json_path);
        if (!emit_dir.empty()) {
            std::filesystem::create_directories(emit_dir);
            for (std::size_t i = 0; i < report.angles.size(); ++i) {
                const RationalAngle theta = norm[i];
                write_intensity_csv_file(
                    emit_dir + "/density_plus_" + std::to_string(i) + ".csv",
                    quadrature_intensity(pair.plus, theta, g));
                write_intensity_csv_file(
                    emit_dir + "/density_minus_" + std::to_string(i) + ".csv",
                    quadrature_intensity(pair.minus, theta, g));
            }
        }
    } else {
        if (norm.size() != 3) {
            std::cerr << "error: lists of more than 3 angles need all pairwise differences "
                         "to be rational multiples of pi\n";
            return kExitParse;
        }
        const double t1 = norm[0].radians(), t2 = norm[1].radians(), t3 = norm[2].radians();
        const Grid g = gf.touched ? Grid::symmetric(gf.halfwidth, gf.points)
                                  : suggested_counterexample_grid(t1, t2, t3);
        const CounterexamplePair pair =
            three_angle_counterexample(t1, t2, t3, g, tol_given ? tol : 1e-5);
        report = pair.report;
        emit_json(report.to_json(), json_path);
        if (!emit_dir.empty()) {
            std::filesystem::create_directories(emit_dir);
            for (std::size_t i = 0; i < report.angles.size(); ++i) {
                const double theta = report.angles[i];
                write_intensity_csv_file(
                    emit_dir + "/density_plus_" + std::to_string(i) + ".csv",
                    intensity_of(frft_grid(pair.plus, theta)));
                write_intensity_csv_file(
                    emit_dir + "/density_minus_" + std::to_string(i) + ".csv",
                    intensity_of(frft_grid(pair.minus, theta)));
            }
        }
    }

    return report.verdict ? 0 : kExitVerdictFalse;
}

// Largest expansion order the grid can hold under the adequacy rule, capped.
int auto_max_index(const Grid& g) {
    const double hw = g.halfwidth();
    const int n = static_cast<int>(std::floor(((hw - 4.0) * (hw - 4.0) - 1.0) / 2.0));
    return std::clamp(n, 0, 128);
}

int cmd_frft(const std::string& input, const std::string& angle_text,
             const std::string& method, int max_index, const std::string& output) {
    RationalAngle theta;
    SampledSignal psi;
    try {
        theta = parse_angle(angle_text);
        psi = load_signal(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    if (method == "grid") {
        store_signal(frft_grid(psi, theta.radians()), output);
    } else {
        const int order = max_index >= 0 ? max_index : auto_max_index(psi.grid);
        const HermiteExpansion e = expand(psi, order);
        store_signal(synthesize(frft_spectral(e, theta), psi.grid), output);
    }
    return 0;
}

int cmd_intensity(const std::string& input, const std::string& angle_text, int max_index,
                  const std::string& output) {
    RationalAngle theta;
    SampledSignal psi;
    try {
        theta = parse_angle(angle_text);
        psi = load_signal(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    const int order = max_index >= 0 ? max_index : auto_max_index(psi.grid);
    const HermiteExpansion e = expand(psi, order);
    store_intensity(quadrature_intensity(e, theta, psi.grid), output);
    return 0;
}

int cmd_wigner(const std::string& input, double ps_halfwidth, std::size_t ps_points,
               const std::string& output) {
    SampledSignal psi;
    try {
        psi = load_signal(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    const Grid ps = Grid::symmetric(ps_halfwidth, ps_points);
    const WignerGrid w = wigner(resample_bandlimited(psi, ps), ps);
    if (output.empty()) {
        write_wigner_csv(std::cout, w);
    } else {
        write_wigner_csv_file(output, w);
    }
    return 0;
}

int cmd_radon(const std::string& input, const std::string& angle_text, double ps_halfwidth,
              std::size_t ps_points, const std::string& output) {
    RationalAngle theta;
    SampledSignal psi;
    try {
        theta = parse_angle(angle_text);
        psi = load_signal(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    const Grid ps = Grid::symmetric(ps_halfwidth, ps_points);
    const WignerGrid w = wigner(resample_bandlimited(psi, ps), ps);
    store_intensity(radon_slice(w, theta.radians(), ps), output);
    return 0;
}

int cmd_obstruction(const std::string& angle_text, int max_denominator,
                    const std::string& json_path) {
    RationalAngle theta4;
    try {
        theta4 = parse_angle(angle_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    const ObstructionReport rep = obstruction_search(theta4, max_denominator);
    emit_json(rep.to_json(), json_path);
    std::cout << ObstructionReport::caveat() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& json_path) {
    const auto results = phaseret::verify::run_suite(suite);
    std::size_t failed = 0;
    std::printf("%-58s %12s %10s  %s\n", "check", "deviation", "bound", "status");
    for (const auto& r : results) {
        std::printf("%-58s %12.3e %10.1e  %s\n", r.name.c_str(), r.deviation, r.bound,
                    r.pass ? "PASS" : "FAIL");
        if (!r.pass) ++failed;
    }
    std::printf("%zu/%zu checks passed\n", results.size() - failed, results.size());

    if (!json_path.empty()) {
        nlohmann::json j;
        j["suite"] = suite;
        j["checks"] = nlohmann::json::array();
        for (const auto& r : results)
            j["checks"].push_back({{"name", r.name},
                                   {"deviation", r.deviation},
                                   {"bound", r.bound},
                                   {"pass", r.pass}});
        j["passed"] = results.size() - failed;
        j["failed"] = failed;
        std::ofstream os(json_path);
        if (!os) throw std::runtime_error("cannot open " + json_path);
        os << j.dump(2) << "\n";
    }
    return failed == 0 ? 0 : kExitVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Fourier quadrature toolkit: counterexample pairs, transforms, "
                 "phase-space tomography, and the four-angle obstruction search"};
    app.require_subcommand(1);

    // counterexample
    auto* ce = app.add_subcommand(
        "counterexample",
        "Build two orthogonal states with identical intensities at the given angles");
    std::vector<std::string> ce_angles;
    ce->add_option("angles", ce_angles,
                   "Angles (>= 3): decimals, pi/4, 3pi/8, acot(pi); rational forms stay exact")
        ->required()
        ->expected(-3);
    GridFlags ce_grid;
    add_grid_flags(ce, ce_grid);
    double ce_tol = 0.0;
    auto* ce_tol_opt = ce->add_option(
        "--tol", ce_tol, "Verdict tolerance (default 1e-10 rational path, 1e-5 otherwise)");
    std::string ce_emit, ce_json;
    ce->add_option("--emit-densities", ce_emit, "Directory for per-state per-angle CSVs");
    ce->add_option("--json", ce_json, "Also write the JSON report to this path");

    // frft
    auto* fr = app.add_subcommand("frft", "Fractional Fourier transform of a signal CSV");
    std::string fr_input, fr_angle, fr_method = "spectral", fr_output;
    int fr_maxindex = -1;
    fr->add_option("input", fr_input, "Signal CSV path (or - for stdin)")->required();
    fr->add_option("theta", fr_angle, "Transform angle")->required();
    fr->add_option("--method", fr_method, "spectral or grid")
        ->check(CLI::IsMember({"spectral", "grid"}));
    fr->add_option("--max-index", fr_maxindex,
                   "Expansion order for the spectral method (default: sized from the grid)")
        ->check(CLI::Range(0, 200));
    fr->add_option("--output,-o", fr_output, "Output CSV path (default stdout)");

    // intensity
    auto* in = app.add_subcommand("intensity", "Quadrature intensity |F_theta psi|^2");
    std::string in_input, in_angle, in_output;
    int in_maxindex = -1;
    in->add_option("input", in_input, "Signal CSV path (or - for stdin)")->required();
    in->add_option("theta", in_angle, "Quadrature angle")->required();
    in->add_option("--max-index", in_maxindex, "Expansion order (default: sized from the grid)")
        ->check(CLI::Range(0, 200));
    in->add_option("--output,-o", in_output, "Output CSV path (default stdout)");

    // wigner
    auto* wg = app.add_subcommand("wigner", "Wigner function of a signal CSV");
    std::string wg_input, wg_output;
    double wg_hw = 8.5;
    std::size_t wg_pts = 256;
    wg->add_option("input", wg_input, "Signal CSV path (or - for stdin)")->required();
    wg->add_option("--ps-halfwidth", wg_hw, "Phase-space half-width")->check(CLI::PositiveNumber);
    wg->add_option("--ps-points", wg_pts, "Phase-space points per axis");
    wg->add_option("--output,-o", wg_output, "Output CSV path (default stdout)");

    // radon
    auto* rd = app.add_subcommand("radon", "Radon slice of the Wigner function");
    std::string rd_input, rd_angle, rd_output;
    double rd_hw = 8.5;
    std::size_t rd_pts = 256;
    rd->add_option("input", rd_input, "Signal CSV path (or - for stdin)")->required();
    rd->add_option("theta", rd_angle, "Slice direction")->required();
    rd->add_option("--ps-halfwidth", rd_hw, "Phase-space half-width")->check(CLI::PositiveNumber);
    rd->add_option("--ps-points", rd_pts, "Phase-space points per axis");
    rd->add_option("--output,-o", rd_output, "Output CSV path (default stdout)");

    // obstruction
    auto* ob = app.add_subcommand(
        "obstruction", "Bounded search for rational target triples matching cot(theta4)");
    std::string ob_angle, ob_json;
    int ob_den = 6;
    ob->add_option("theta4", ob_angle, "Fourth angle, e.g. acot(pi) or pi/3")->required();
    ob->add_option("--max-denominator", ob_den, "Denominator bound (>= 2)")
        ->check(CLI::Range(2, 1000));
    ob->add_option("--json", ob_json, "Also write the JSON report to this path");

    // verify
    auto* vf = app.add_subcommand("verify", "Run the built-in verification suites");
    std::string vf_suite = "all", vf_json;
    vf->add_option("--suite", vf_suite,
                   "hermite|signal|frft|weyl|symplectic|counterexample|phasespace|all")
        ->check(CLI::IsMember({"hermite", "signal", "frft", "weyl", "symplectic",
                               "counterexample", "phasespace", "all"}));
    vf->add_option("--json", vf_json, "Write a machine-readable summary to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitParse;
    }

    try {
        if (ce->parsed())
            return cmd_counterexample(ce_angles, ce_grid, ce_tol, ce_tol_opt->count() > 0,
                                      ce_emit, ce_json);
        if (fr->parsed()) return cmd_frft(fr_input, fr_angle, fr_method, fr_maxindex, fr_output);
        if (in->parsed()) return cmd_intensity(in_input, in_angle, in_maxindex, in_output);
        if (wg->parsed()) return cmd_wigner(wg_input, wg_hw, wg_pts, wg_output);
        if (rd->parsed()) return cmd_radon(rd_input, rd_angle, rd_hw, rd_pts, rd_output);
        if (ob->parsed()) return cmd_obstruction(ob_angle, ob_den, ob_json);
        if (vf->parsed()) return cmd_verify(vf_suite, vf_json);
    } catch (const DegenerateAnglesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const CsvFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerdictFalse;
    }
    return kExitParse;
}
