#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phaseret/counterexample.hpp"
#include "phaseret/csv.hpp"
#include "phaseret/phasespace.hpp"
#include "phaseret/weyl.hpp"

namespace py = pybind11;
using namespace phaseret;

namespace {

py::array_t<complexd> to_array(const std::vector<complexd>& v) {
    py::array_t<complexd> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<complexd> from_array(const py::array_t<complexd>& a) {
    const auto buf = a.request();
    if (buf.ndim != 1) throw std::invalid_argument("expected a 1-d array");
    const auto* ptr = static_cast<const complexd*>(buf.ptr);
    return {ptr, ptr + buf.shape[0]};
}

py::dict report_dict(const CounterexampleReport& r) {
    py::dict d;
    d["angles"] = r.angles;
    d["k"] = r.k;
    py::list sups, tvs;
    for (const auto& a : r.per_angle) {
        sups.append(a.sup_difference);
        tvs.append(a.tv_distance);
    }
    d["sup_deviations"] = sups;
    d["tv_distances"] = tvs;
    d["overlap_modulus"] = r.overlap_modulus;
    d["tolerance"] = r.tolerance;
    d["verdict"] = r.verdict;
    d["note"] = r.note;
    return d;
}

py::dict verdict_dict(const VerdictReport& r) {
    py::dict d;
    py::list angles, sups, tvs;
    for (const auto& a : r.per_angle) {
        angles.append(a.angle);
        sups.append(a.sup_difference);
        tvs.append(a.tv_distance);
    }
    d["angles"] = angles;
    d["sup_deviations"] = sups;
    d["tv_distances"] = tvs;
    d["tolerance"] = r.tolerance;
    d["indistinguishable"] = r.indistinguishable;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fractional Fourier quadrature toolkit";

    py::register_exception<GridMismatchError>(m, "GridMismatchError");
    py::register_exception<GridTooSmallError>(m, "GridTooSmallError");
    py::register_exception<AsymmetricGridError>(m, "AsymmetricGridError");
    py::register_exception<NonSymplecticError>(m, "NonSymplecticError");
    py::register_exception<InfeasibleTargetsError>(m, "InfeasibleTargetsError");
    py::register_exception<NonRationalDifferenceError>(m, "NonRationalDifferenceError");
    py::register_exception<DegenerateAnglesError>(m, "DegenerateAnglesError");

    py::class_<Grid>(m, "Grid")
        .def(py::init<double, double, std::size_t>(), py::arg("x0"), py::arg("dx"),
             py::arg("n_points"))
        .def_static("symmetric", &Grid::symmetric, py::arg("halfwidth"), py::arg("n"))
        .def_readonly("x0", &Grid::x0)
        .def_readonly("dx", &Grid::dx)
        .def_readonly("n_points", &Grid::n_points)
        .def("points", [](const Grid& g) { return to_array(g.points()); })
        .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; });

    py::class_<SampledSignal>(m, "SampledSignal")
        .def(py::init([](const Grid& g, const py::array_t<complexd>& values) {
                 return SampledSignal(g, from_array(values));
             }),
             py::arg("grid"), py::arg("values"))
        .def_readonly("grid", &SampledSignal::grid)
        .def_property_readonly(
            "values", [](const SampledSignal& s) { return to_array(s.values); });

    py::class_<IntensityProfile>(m, "IntensityProfile")
        .def_readonly("grid", &IntensityProfile::grid)
        .def_property_readonly(
            "density", [](const IntensityProfile& p) { return to_array(p.density); });

    py::class_<HermiteExpansion>(m, "HermiteExpansion")
        .def(py::init([](const py::array_t<complexd>& coeffs) {
                 return HermiteExpansion(from_array(coeffs));
             }),
             py::arg("coefficients"))
        .def_property_readonly(
            "coefficients", [](const HermiteExpansion& e) { return to_array(e.coefficients); })
        .def_property_readonly("max_index", &HermiteExpansion::max_index);

    py::class_<RationalAngle>(m, "RationalAngle")
        .def_static("rational", &RationalAngle::rational, py::arg("q"), py::arg("p"))
        .def_static("real", &RationalAngle::real, py::arg("radians"))
        .def_property_readonly("is_rational", &RationalAngle::is_rational)
        .def_property_readonly("numerator", &RationalAngle::numerator)
        .def_property_readonly("denominator", &RationalAngle::denominator)
        .def_property_readonly("radians", &RationalAngle::radians)
        .def("__repr__", [](const RationalAngle& a) { return "<angle " + a.str() + ">"; });
    m.def("parse_angle", [](const std::string& s) { return parse_angle(s); });

    py::class_<SymplecticMatrix2>(m, "SymplecticMatrix2")
        .def(py::init<double, double, double, double>(), py::arg("a11"), py::arg("a12"),
             py::arg("a21"), py::arg("a22"))
        .def_static("identity", &SymplecticMatrix2::identity)
        .def_static("rotation", &SymplecticMatrix2::rotation)
        .def_static("dilation", &SymplecticMatrix2::dilation)
        .def_static("shear", &SymplecticMatrix2::shear)
        .def_readonly("a11", &SymplecticMatrix2::a11)
        .def_readonly("a12", &SymplecticMatrix2::a12)
        .def_readonly("a21", &SymplecticMatrix2::a21)
        .def_readonly("a22", &SymplecticMatrix2::a22)
        .def("det", &SymplecticMatrix2::det)
        .def("inverse", &SymplecticMatrix2::inverse)
        .def("spectral_norm", &SymplecticMatrix2::spectral_norm)
        .def("__matmul__", &SymplecticMatrix2::operator*);

    py::class_<QuadratureLine>(m, "QuadratureLine")
        .def(py::init<double>(), py::arg("theta"))
        .def_readonly("angle", &QuadratureLine::angle)
        .def("direction", &QuadratureLine::direction);

    // hermite / signal
    m.def("hermite_eval", &hermite_eval, py::arg("n"), py::arg("x"));
    m.def("expand", &expand, py::arg("psi"), py::arg("max_index"));
    m.def("synthesize", &synthesize, py::arg("expansion"), py::arg("grid"));
    m.def("inner_product", &inner_product);
    m.def("squared_norm", &squared_norm);
    m.def("total_variation_distance", &total_variation_distance);

    // frft
    m.def("frft_spectral",
          py::overload_cast<const HermiteExpansion&, const RationalAngle&>(&frft_spectral),
          py::arg("expansion"), py::arg("theta"));
    m.def("frft_spectral", py::overload_cast<const HermiteExpansion&, double>(&frft_spectral),
          py::arg("expansion"), py::arg("theta"));
    m.def("frft_grid", &frft_grid, py::arg("psi"), py::arg("theta"));
    m.def("quadrature_intensity",
          py::overload_cast<const HermiteExpansion&, double, const Grid&>(&quadrature_intensity),
          py::arg("expansion"), py::arg("theta"), py::arg("grid"));
    m.def("quadrature_mean", &quadrature_mean, py::arg("expansion"), py::arg("theta"));

    // weyl
    py::class_<PhasePoint>(m, "PhasePoint")
        .def(py::init<double, double>(), py::arg("q"), py::arg("p"))
        .def_readonly("q", &PhasePoint::q)
        .def_readonly("p", &PhasePoint::p);
    m.def("symplectic_form", &symplectic_form);
    m.def("weyl_apply", &weyl_apply, py::arg("psi"), py::arg("x"));
    m.def("characteristic_function", &characteristic_function, py::arg("expansion"),
          py::arg("theta"), py::arg("u"), py::arg("grid"));
    m.def("metaplectic_apply", &metaplectic_apply, py::arg("psi"), py::arg("s"));

    // symplectic
    m.def("map_line", &map_line, py::arg("s"), py::arg("line"));
    m.def("canonical_triple_matrix", &canonical_triple_matrix);
    m.def("canonical_triple_scales", &canonical_triple_scales);
    m.def("triangular_from_targets", [](double t2p, double t3p) {
        const TriangularParams t = triangular_from_targets(t2p, t3p);
        return py::make_tuple(t.a, t.b);
    });
    m.def("fourth_line_residual", &fourth_line_residual);
    m.def("obstruction_search", [](const RationalAngle& theta4, int max_denominator) {
        const ObstructionReport r = obstruction_search(theta4, max_denominator);
        py::dict d;
        d["theta4"] = r.theta4;
        d["max_denominator"] = r.max_denominator;
        d["min_residual"] = r.min_residual;
        d["argmin"] = r.argmin;
        d["examined"] = r.examined;
        d["caveat"] = ObstructionReport::caveat();
        return d;
    });

    // counterexample
    m.def("normalize_angles",
          py::overload_cast<const std::vector<double>&>(&normalize_angles));
    m.def("rational_angle_k", &rational_angle_k);
    m.def("build_pair", &build_pair, py::arg("k"));
    m.def("indistinguishability_verdict",
          [](const HermiteExpansion& e1, const HermiteExpansion& e2,
             const std::vector<double>& angles, const Grid& g, double tol) {
              return verdict_dict(indistinguishability_verdict(e1, e2, angles, g, tol));
          });
    m.def("reduce_triple", [](double t1, double t2, double t3) {
        const TripleReduction r = reduce_triple(t1, t2, t3);
        return py::make_tuple(r.matrix, r.images);
    });
    m.def("rational_counterexample",
          [](const std::vector<RationalAngle>& angles, const Grid& g, double tol) {
              const RationalPair p = rational_counterexample(angles, g, tol);
              return py::make_tuple(p.plus, p.minus, report_dict(p.report));
          },
          py::arg("angles"), py::arg("grid"), py::arg("tol") = 1e-10);
    m.def("three_angle_counterexample",
          [](double t1, double t2, double t3, const Grid& g, double tol) {
              const CounterexamplePair p = three_angle_counterexample(t1, t2, t3, g, tol);
              return py::make_tuple(p.plus, p.minus, report_dict(p.report));
          },
          py::arg("theta1"), py::arg("theta2"), py::arg("theta3"), py::arg("grid"),
          py::arg("tol") = 1e-5);
    m.def("suggested_counterexample_grid", &suggested_counterexample_grid, py::arg("theta1"),
          py::arg("theta2"), py::arg("theta3"), py::arg("k") = 16);

    // phasespace
    py::class_<WignerGrid>(m, "WignerGrid")
        .def_readonly("qgrid", &WignerGrid::qgrid)
        .def_readonly("pgrid", &WignerGrid::pgrid)
        .def_readonly("max_imag_residue", &WignerGrid::max_imag_residue)
        .def_property_readonly("values", [](const WignerGrid& w) {
            py::array_t<double> out({w.qgrid.n_points, w.pgrid.n_points});
            std::copy(w.values.begin(), w.values.end(), out.mutable_data());
            return out;
        });
    m.def("wigner", &wigner, py::arg("psi"), py::arg("pgrid"));
    m.def("wigner_integral", &wigner_integral);
    m.def("radon_slice", &radon_slice, py::arg("w"), py::arg("theta"), py::arg("out"));
}
