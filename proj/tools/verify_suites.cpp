#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "phaseret/counterexample.hpp"
#include "phaseret/csv.hpp"
#include "phaseret/phasespace.hpp"
#include "phaseret/weyl.hpp"

namespace phaseret::verify {

namespace {

const double kPi = std::numbers::pi;

Grid default_grid() { return Grid::symmetric(12.0, 1024); }

HermiteExpansion random_expansion(std::mt19937& gen, int max_index) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<complexd> c(static_cast<std::size_t>(max_index) + 1);
    double norm2 = 0.0;
    for (auto& v : c) {
        v = complexd(dist(gen), dist(gen));
        norm2 += std::norm(v);
    }
    for (auto& v : c) v /= std::sqrt(norm2);
    return HermiteExpansion(std::move(c));
}

SymplecticMatrix2 random_symplectic(std::mt19937& gen) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> loga(-0.4, 0.4);
    std::uniform_real_distribution<double> shear(-0.8, 0.8);
    return SymplecticMatrix2::rotation(angle(gen)) *
           SymplecticMatrix2::dilation(std::exp(loga(gen))) *
           SymplecticMatrix2::shear(shear(gen));
}

CheckResult check(const std::string& name, double deviation, double bound) {
    return {name, deviation, bound, deviation <= bound};
}

// exact-coefficient Hermite polynomial evaluation, independent of the
// recurrence path it verifies
double hermite_exact(int n, double x) {
    std::vector<double> prev{1.0}, cur{0.0, 2.0};
    if (n == 0) cur = prev;
    for (int k = 2; k <= n; ++k) {
        std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * (k - 1.0) * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    double poly = 0.0;
    for (std::size_t i = cur.size(); i-- > 0;) poly = poly * x + cur[i];
    double lognorm = 0.0;
    for (int k = 1; k <= n; ++k) lognorm += std::log(2.0 * k);
    lognorm = 0.5 * (lognorm + 0.5 * std::log(kPi));
    return poly * std::exp(-0.5 * x * x - lognorm);
}

double angle_distance_mod_pi(double a, double b) {
    double d = std::fmod(std::abs(a - b), kPi);
    return std::min(d, kPi - d);
}

std::vector<CheckResult> hermite_suite() {
    std::vector<CheckResult> out;
    const Grid g = default_grid();
    const auto xs = g.points();

    std::vector<int> idx(21);
    std::iota(idx.begin(), idx.end(), 0);
    const auto rows = hermite_rows(idx, xs);
    double gram_dev = 0.0;
    for (int a = 0; a <= 20; ++a)
        for (int b = a; b <= 20; ++b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i)
                acc += trapezoid_weight(g, i) * rows[a][i] * rows[b][i];
            gram_dev = std::max(gram_dev, std::abs(acc - (a == b ? 1.0 : 0.0)));
        }
    out.push_back(check("hermite.gram_identity_h0_h20", gram_dev, 1e-8));

    std::mt19937 gen(7101);
    std::uniform_real_distribution<double> xdist(-6.0, 6.0);
    double rec_dev = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double x = xdist(gen);
        for (int n = 0; n <= 12; ++n) {
            const double want = hermite_exact(n, x);
            const double scale = std::max(std::abs(want), 1e-30);
            rec_dev = std::max(rec_dev, std::abs(hermite_eval(n, x) - want) / scale);
        }
    }
    out.push_back(check("hermite.recurrence_vs_exact_polynomial", rec_dev, 1e-10));

    double rt_dev = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const HermiteExpansion e = random_expansion(gen, 20);
        const HermiteExpansion back = expand(synthesize(e, g), 20);
        for (int n = 0; n <= 20; ++n)
            rt_dev = std::max(rt_dev, std::abs(back.coefficient(n) - e.coefficient(n)));
    }
    out.push_back(check("hermite.expand_synthesize_roundtrip", rt_dev, 1e-8));
    return out;
}

std::vector<CheckResult> signal_suite() {
    std::vector<CheckResult> out;
    const Grid g = default_grid();
    std::mt19937 gen(7201);
    double cs_dev = 0.0, tv_sym = 0.0, tv_tri = 0.0, tv_neg = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const SampledSignal a = synthesize(random_expansion(gen, 12), g);
        const SampledSignal b = synthesize(random_expansion(gen, 12), g);
        const SampledSignal c = synthesize(random_expansion(gen, 12), g);
        cs_dev = std::max(cs_dev, std::abs(inner_product(a, b)) - norm(a) * norm(b));
        const IntensityProfile pa = intensity_of(a), pb = intensity_of(b),
                               pc = intensity_of(c);
        const double dab = total_variation_distance(pa, pb);
        tv_neg = std::min(tv_neg, dab);
        tv_sym = std::max(tv_sym, std::abs(dab - total_variation_distance(pb, pa)));
        tv_tri = std::max(tv_tri, dab - total_variation_distance(pa, pc) -
                                      total_variation_distance(pc, pb));
    }
    out.push_back(check("signal.cauchy_schwarz", std::max(cs_dev, 0.0), 1e-12));
    out.push_back(check("signal.tv_nonnegative", -tv_neg, 1e-12));
    out.push_back(check("signal.tv_symmetric", tv_sym, 1e-12));
    out.push_back(check("signal.tv_triangle", std::max(tv_tri, 0.0), 1e-12));
    return out;
}

std::vector<CheckResult> frft_suite() {
    std::vector<CheckResult> out;
    const Grid g = default_grid();
    std::mt19937 gen(7301);

    const HermiteExpansion e = random_expansion(gen, 16);
    double group_dev = 0.0;
    {
        const RationalAngle t1 = RationalAngle::rational(2, 7);
        const RationalAngle t2 = RationalAngle::rational(3, 5);
        const HermiteExpansion two = frft_spectral(frft_spectral(e, t1), t2);
        const HermiteExpansion one = frft_spectral(e, t1 + t2);
        for (int n = 0; n <= 16; ++n)
            group_dev = std::max(group_dev, std::abs(two.coefficient(n) - one.coefficient(n)));
        const HermiteExpansion two_r = frft_spectral(frft_spectral(e, 0.813), 1.492);
        const HermiteExpansion one_r = frft_spectral(e, 0.813 + 1.492);
        for (int n = 0; n <= 16; ++n)
            group_dev =
                std::max(group_dev, std::abs(two_r.coefficient(n) - one_r.coefficient(n)));
    }
    out.push_back(check("frft.group_law_coefficients", group_dev, 1e-13));

    double inv_dev = 0.0;
    {
        const HermiteExpansion id = frft_spectral(
            frft_spectral(e, RationalAngle::rational(1, 2)), RationalAngle::rational(3, 2));
        for (int n = 0; n <= 16; ++n)
            inv_dev = std::max(inv_dev, std::abs(id.coefficient(n) - e.coefficient(n)));
    }
    out.push_back(check("frft.quarter_turn_inverse_exact", inv_dev, 0.0));

    out.push_back(check(
        "frft.unitarity_spectral",
        std::abs(frft_spectral(e, 1.2345).squared_coefficient_norm() - 1.0), 1e-14));

    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    double dual_dev = 0.0, norm_dev = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const HermiteExpansion f = random_expansion(gen, 16);
        const SampledSignal psi = synthesize(f, g);
        const double theta = angle(gen);
        const SampledSignal grid_route = frft_grid(psi, theta);
        const SampledSignal spectral_route = synthesize(frft_spectral(f, theta), g);
        dual_dev = std::max(dual_dev, max_abs_difference(grid_route, spectral_route));
        norm_dev = std::max(norm_dev, std::abs(squared_norm(grid_route) - 1.0));
    }
    out.push_back(check("frft.spectral_vs_grid", dual_dev, 1e-6));
    out.push_back(check("frft.unitarity_grid", norm_dev, 1e-6));
    return out;
}

std::vector<CheckResult> weyl_suite() {
    std::vector<CheckResult> out;
    const Grid g = default_grid();
    std::mt19937 gen(7401);
    std::uniform_real_distribution<double> d(-2.0, 2.0);

    double comp_dev = 0.0, comm_dev = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const SampledSignal psi = synthesize(random_expansion(gen, 8), g);
        const PhasePoint x{d(gen), d(gen)}, y{d(gen), d(gen)};
        const SampledSignal lhs = weyl_apply(weyl_apply(psi, y), x);
        SampledSignal rhs = weyl_apply(psi, {x.q + y.q, x.p + y.p});
        const complexd phase = std::polar(1.0, -0.5 * symplectic_form(x, y));
        for (auto& v : rhs.values) v *= phase;
        comp_dev = std::max(comp_dev, max_abs_difference(lhs, rhs));

        SampledSignal wyx = weyl_apply(weyl_apply(psi, x), y);
        const complexd comm = std::polar(1.0, -symplectic_form(x, y));
        for (auto& v : wyx.values) v *= comm;
        comm_dev = std::max(comm_dev, max_abs_difference(lhs, wyx));
    }
    out.push_back(check("weyl.composition_rule", comp_dev, 1e-8));
    out.push_back(check("weyl.commutation_relation", comm_dev, 1e-8));

    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> us(-3.0, 3.0);
    double cf_dev = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const HermiteExpansion e = random_expansion(gen, 8);
        const double theta = angle(gen), u = us(gen);
        const complexd fourier_route = characteristic_function(e, theta, u, g);
        const SampledSignal psi = synthesize(e, g);
        const complexd weyl_route =
            inner_product(psi, weyl_apply(psi, {u * std::sin(theta), -u * std::cos(theta)}));
        cf_dev = std::max(cf_dev, std::abs(fourier_route - weyl_route));
    }
    out.push_back(check("weyl.characteristic_function_two_routes", cf_dev, 1e-6));

    double norm_dev = 0.0, cov_dev = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const SampledSignal psi = synthesize(random_expansion(gen, 6), g);
        const SymplecticMatrix2 s = random_symplectic(gen);
        const PhasePoint x{d(gen) * 0.75, d(gen) * 0.75};
        const SampledSignal us_psi = metaplectic_apply(psi, s);
        norm_dev = std::max(norm_dev, std::abs(squared_norm(us_psi) - 1.0));
        const SampledSignal lhs = metaplectic_apply(weyl_apply(psi, x), s);
        const PhasePoint sx{s.a11 * x.q + s.a12 * x.p, s.a21 * x.q + s.a22 * x.p};
        const SampledSignal rhs = weyl_apply(us_psi, sx);
        cov_dev = std::max(cov_dev, max_abs_difference(align_global_phase(rhs, lhs), rhs));
    }
    out.push_back(check("weyl.metaplectic_norm", norm_dev, 1e-6));
    out.push_back(check("weyl.metaplectic_covariance", cov_dev, 1e-6));
    return out;
}

std::vector<CheckResult> symplectic_suite() {
    std::vector<CheckResult> out;
    std::mt19937 gen(7501);
    std::uniform_real_distribution<double> angle(0.0, kPi);

    double det_dev = 0.0, modpi_dev = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const SymplecticMatrix2 s = random_symplectic(gen);
        det_dev = std::max(det_dev, std::abs(s.det() - 1.0));
        const double theta = angle(gen);
        const double a = map_line(s, QuadratureLine(theta)).angle;
        const double b = map_line(s, QuadratureLine(theta + kPi)).angle;
        modpi_dev = std::max(modpi_dev, angle_distance_mod_pi(a, b));
    }
    out.push_back(check("symplectic.random_det", det_dev, 1e-12));
    out.push_back(check("symplectic.map_line_mod_pi", modpi_dev, 1e-12));

    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double targets[3] = {0.0, 0.25 * kPi, 0.5 * kPi};
    double img_dev = 0.0, scale_dev = 0.0;
    int done = 0;
    while (done < 100) {
        const double t1 = u(gen) * (kPi - 0.2);
        const double t2 = t1 + 0.05 + u(gen) * (kPi - 0.2 - t1);
        const double t3 = t2 + 0.05 + u(gen) * (kPi - 0.1 - t2);
        if (!(t3 < kPi)) continue;
        ++done;
        const SymplecticMatrix2 s = canonical_triple_matrix(t1, t2, t3);
        const double src[3] = {t1, t2, t3};
        const auto scales = canonical_triple_scales(t1, t2, t3);
        for (int i = 0; i < 3; ++i) {
            img_dev = std::max(img_dev, angle_distance_mod_pi(
                                            map_line(s, QuadratureLine(src[i])).angle,
                                            targets[i]));
            const double vx = s.a11 * std::sin(src[i]) - s.a12 * std::cos(src[i]);
            const double vy = s.a21 * std::sin(src[i]) - s.a22 * std::cos(src[i]);
            scale_dev = std::max(
                scale_dev,
                std::hypot(vx - scales[static_cast<std::size_t>(i)] * std::sin(targets[i]),
                           vy + scales[static_cast<std::size_t>(i)] * std::cos(targets[i])));
        }
    }
    out.push_back(check("symplectic.canonical_triple_images", img_dev, 1e-10));
    out.push_back(check("symplectic.canonical_triple_scales", scale_dev, 1e-10));

    std::uniform_real_distribution<double> la(-0.5, 0.5), bb(-1.0, 1.0), th(0.05, kPi - 0.05);
    double slope_dev = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double a = std::exp(la(gen)), b = bb(gen), theta = th(gen);
        const SymplecticMatrix2 m = triangular_matrix({a, b});
        const double mapped = map_line(m, QuadratureLine(theta)).angle;
        const double want = (1.0 / (a * a)) / std::tan(theta) - b / a;
        slope_dev = std::max(slope_dev, std::abs(1.0 / std::tan(mapped) - want) /
                                            std::max(1.0, std::abs(want)));
    }
    out.push_back(check("symplectic.triangular_slope_law", slope_dev, 1e-12));
    return out;
}

std::vector<CheckResult> counterexample_suite() {
    std::vector<CheckResult> out;
    const Grid g = default_grid();

    // rational-angle closure over every 2-4 element list with denominators <= 6
    std::vector<RationalAngle> values{RationalAngle::rational(0, 1)};
    for (int p = 2; p <= 6; ++p)
        for (int q = 1; q < p; ++q)
            if (std::gcd(q, p) == 1) values.push_back(RationalAngle::rational(q, p));
    double closure_dev = 0.0;
    std::int64_t lists = 0;
    const std::size_t nv = values.size();
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            const RationalPair p2 = rational_counterexample({values[i], values[j]}, g, 1e-10);
            for (const auto& d : p2.report.per_angle)
                closure_dev = std::max(closure_dev, d.sup_difference);
            ++lists;
            for (std::size_t k = j + 1; k < nv; ++k) {
                const RationalPair p3 =
                    rational_counterexample({values[i], values[j], values[k]}, g, 1e-10);
                for (const auto& d : p3.report.per_angle)
                    closure_dev = std::max(closure_dev, d.sup_difference);
                ++lists;
                for (std::size_t l = k + 1; l < nv; ++l) {
                    const RationalPair p4 = rational_counterexample(
                        {values[i], values[j], values[k], values[l]}, g, 1e-10);
                    for (const auto& d : p4.report.per_angle)
                        closure_dev = std::max(closure_dev, d.sup_difference);
                    ++lists;
                }
            }
        }
    out.push_back(check("counterexample.rational_closure_denominators_le_6 (" +
                            std::to_string(lists) + " lists)",
                        closure_dev, 1e-10));

    std::mt19937 gen(7601);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double sup_dev = 0.0, overlap_dev = 0.0, discr_min = 1.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double t1 = u(gen) * (kPi - 0.4);
        const double t2 = t1 + 0.15 + u(gen) * (kPi - 0.45 - t1);
        const double t3 = t2 + 0.15 + u(gen) * (kPi - 0.15 - t2);
        if (!(t3 < kPi)) {
            --trial;
            continue;
        }
        const Grid cg = suggested_counterexample_grid(t1, t2, t3);
        const CounterexamplePair pair = three_angle_counterexample(t1, t2, t3, cg);
        for (const auto& d : pair.report.per_angle)
            sup_dev = std::max(sup_dev, d.sup_difference);
        overlap_dev = std::max(overlap_dev, pair.report.overlap_modulus);

        double best = 0.0;
        for (int a = 0; a < 50; ++a) {
            const double theta = kPi * (a + 0.5) / 50.0;
            const auto rep = indistinguishability_verdict(
                pair.plus, pair.minus, std::vector<double>{theta}, 1e-3);
            best = std::max(best, rep.per_angle[0].sup_difference);
        }
        discr_min = std::min(discr_min, best);
    }
    out.push_back(check("counterexample.generic_triple_sup", sup_dev, 1e-5));
    out.push_back(check("counterexample.generic_triple_overlap", overlap_dev, 1e-6));
    // scan must FIND a discriminating angle: deviation is the shortfall
    out.push_back(check("counterexample.discriminability_scan",
                        std::max(0.0, 1e-3 - discr_min), 0.0));
    return out;
}

std::vector<CheckResult> phasespace_suite() {
    std::vector<CheckResult> out;
    const Grid g = Grid::symmetric(8.2, 256);

    const SampledSignal h0 = synthesize(HermiteExpansion({1.0}), g);
    const WignerGrid w0 = wigner(h0, g);
    double h0_dev = 0.0;
    for (std::size_t iq = 0; iq < g.n_points; iq += 7)
        for (std::size_t ip = 0; ip < g.n_points; ip += 7) {
            const double q = g.point(iq), p = g.point(ip);
            h0_dev = std::max(
                h0_dev, std::abs(w0.at(iq, ip) - std::exp(-(q * q + p * p)) / kPi));
        }
    out.push_back(check("phasespace.wigner_h0_closed_form", h0_dev, 1e-6));

    std::mt19937 gen(7701);
    const HermiteExpansion em = random_expansion(gen, 8);
    const SampledSignal psim = synthesize(em, g);
    const WignerGrid wm = wigner(psim, g);
    double marg_dev = 0.0;
    for (std::size_t iq = 0; iq < g.n_points; iq += 3) {
        double acc = 0.0;
        for (std::size_t ip = 0; ip < g.n_points; ++ip)
            acc += trapezoid_weight(g, ip) * wm.at(iq, ip);
        marg_dev = std::max(marg_dev, std::abs(acc - std::norm(psim.values[iq])));
    }
    out.push_back(check("phasespace.wigner_p_marginal", marg_dev, 1e-6));
    out.push_back(check("phasespace.wigner_imag_residue", wm.max_imag_residue, 1e-10));
    out.push_back(
        check("phasespace.wigner_normalization", std::abs(wigner_integral(wm) - 1.0), 1e-5));

    std::uniform_real_distribution<double> angle(0.0, kPi);
    double tomo_dev = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const HermiteExpansion e = random_expansion(gen, 8);
        const WignerGrid w = wigner(synthesize(e, g), g);
        for (int a = 0; a < 10; ++a) {
            const double theta = angle(gen);
            tomo_dev = std::max(tomo_dev,
                                total_variation_distance(radon_slice(w, theta, g),
                                                         quadrature_intensity(e, theta, g)));
        }
    }
    out.push_back(check("phasespace.tomographic_consistency_10x10", tomo_dev, 1e-3));

    // rotation covariance at a lattice-exact quarter turn: W_{F_{pi/2} psi}(q,p) = W(-p,q)
    const HermiteExpansion er = random_expansion(gen, 6);
    const WignerGrid wbase = wigner(synthesize(er, g), g);
    const WignerGrid wrot =
        wigner(synthesize(frft_spectral(er, RationalAngle::rational(1, 2)), g), g);
    double cov_dev = 0.0;
    const std::size_t n = g.n_points;
    for (std::size_t iq = 0; iq < n; iq += 3)
        for (std::size_t ip = 0; ip < n; ip += 3) {
            // S_{pi/2} (q,p) = (-p, q): index flip on the symmetric grid
            const double rotated = wbase.at(n - 1 - ip, iq);
            cov_dev = std::max(cov_dev, std::abs(wrot.at(iq, ip) - rotated));
        }
    out.push_back(check("phasespace.rotation_covariance_quarter_turn", cov_dev, 1e-4));
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"hermite", "signal", "frft", "weyl", "symplectic", "counterexample", "phasespace"};
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    const auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "hermite") return hermite_suite();
    if (name == "signal") return signal_suite();
    if (name == "frft") return frft_suite();
    if (name == "weyl") return weyl_suite();
    if (name == "symplectic") return symplectic_suite();
    if (name == "counterexample") return counterexample_suite();
    if (name == "phasespace") return phasespace_suite();
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace phaseret::verify
