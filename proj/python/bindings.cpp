#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "ptstab/cli/runners.hpp"
#include "ptstab/core.hpp"
#include "ptstab/error.hpp"
#include "ptstab/gyro.hpp"
#include "ptstab/nls.hpp"
#include "ptstab/potential.hpp"
#include "ptstab/routh_hurwitz.hpp"

namespace py = pybind11;
using namespace ptstab;

namespace {

using Rows = std::array<std::array<double, 2>, 2>;

Mat2 to_mat(const Rows& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }

SystemSpec make_system(const Rows& damping, const Rows& stiffness, double omega) {
    return SystemSpec(to_mat(damping), to_mat(stiffness), omega);
}

std::string side_name(potential::StableSide s) {
    switch (s) {
        case potential::StableSide::Above: return "above";
        case potential::StableSide::Below: return "below";
        default: return "none";
    }
}

nls::NLSParams nls_params(double alpha, double gamma, double k, double sigma, double a, double c, double u0) {
    nls::NLSParams p;
    p.alpha = alpha;
    p.gamma = gamma;
    p.k = k;
    p.sigma = sigma;
    p.a = a;
    p.c = c;
    return p.with_amplitude(u0);
}

}  // namespace

PYBIND11_MODULE(_ptstab, m) {
    m.doc() = "Stability of two-degree-of-freedom systems with indefinite damping";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DegenerateError>(m, "DegenerateError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

    py::enum_<Stability>(m, "Stability")
        .value("AsymptoticallyStable", Stability::AsymptoticallyStable)
        .value("MarginallyStable", Stability::MarginallyStable)
        .value("Flutter", Stability::Flutter)
        .value("Divergence", Stability::Divergence)
        .value("Degenerate", Stability::Degenerate);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("roots", &Spectrum::roots)
        .def_readonly("classification", &Spectrum::classification)
        .def_readonly("multiple", &Spectrum::multiple)
        .def("any_multiple", &Spectrum::any_multiple)
        .def("__repr__", [](const Spectrum& s) {
            return "<Spectrum " + std::string(to_string(s.classification)) + ">";
        });

    py::class_<HurwitzReport>(m, "HurwitzReport")
        .def_readonly("h1", &HurwitzReport::h1)
        .def_readonly("h2", &HurwitzReport::h2)
        .def_readonly("h3", &HurwitzReport::h3)
        .def_readonly("h4", &HurwitzReport::h4)
        .def_readonly("stable", &HurwitzReport::stable);

    m.def(
        "char_poly",
        [](const Rows& d, const Rows& k, double omega) { return char_poly(make_system(d, k, omega)).coefficients(); },
        py::arg("damping"), py::arg("stiffness"), py::arg("omega") = 0.0,
        "Ascending coefficients c0..c3, 1 of the characteristic quartic.");
    m.def(
        "roots", [](double c0, double c1, double c2, double c3, double eps) { return roots(Quartic(c0, c1, c2, c3), eps); },
        py::arg("c0"), py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("eps") = kDefaultEps);
    m.def(
        "spectrum",
        [](const Rows& d, const Rows& k, double omega, double eps) { return spectrum(make_system(d, k, omega), eps); },
        py::arg("damping"), py::arg("stiffness"), py::arg("omega") = 0.0, py::arg("eps") = kDefaultEps);
    m.def(
        "hurwitz", [](double c0, double c1, double c2, double c3) { return hurwitz(Quartic(c0, c1, c2, c3)); },
        py::arg("c0"), py::arg("c1"), py::arg("c2"), py::arg("c3"));
    m.def(
        "delta_cr_squared", [](const Rows& dt, const Rows& k) { return delta_cr_squared(to_mat(dt), to_mat(k)); },
        py::arg("dtilde"), py::arg("stiffness"));
    m.def(
        "delta_pt", [](const Rows& dt, const Rows& k) { return delta_pt(to_mat(dt), to_mat(k)); }, py::arg("dtilde"),
        py::arg("stiffness"));

    auto pot = m.def_submodule("potential", "Indefinitely damped system with potential forces");
    pot.def(
        "spectrum",
        [](double k1, double k2, double kappa, double X, double Y) {
            return spectrum(potential::to_system({k1, k2, kappa, X, Y}));
        },
        py::arg("k1"), py::arg("k2"), py::arg("kappa"), py::arg("X"), py::arg("Y"));
    pot.def(
        "ep_interval",
        [](double k2, double kappa) {
            const auto ep = potential::ep_interval(k2, kappa);
            return std::pair{ep.y_minus, ep.y_plus};
        },
        py::arg("k2"), py::arg("kappa"));
    pot.def(
        "boundary_k1",
        [](double X, double Y, double k2, double kappa) {
            std::vector<std::pair<double, std::string>> out;
            for (const auto& r : potential::boundary_k1(X, Y, k2, kappa)) out.emplace_back(r.k1, side_name(r.stable_side));
            return out;
        },
        py::arg("X"), py::arg("Y"), py::arg("k2"), py::arg("kappa"));
    pot.def(
        "conoid_linear",
        [](double X, double Y, double k2, double kappa, int branch) {
            return potential::conoid_linear(X, Y, k2, kappa, branch >= 0 ? potential::Branch::Plus : potential::Branch::Minus);
        },
        py::arg("X"), py::arg("Y"), py::arg("k2"), py::arg("kappa"), py::arg("branch") = 1);
    pot.def(
        "ray_limit",
        [](double slope, int side, double k2, double kappa) {
            return potential::ray_limit(slope, side >= 0 ? potential::Side::Upper : potential::Side::Lower, k2, kappa)
                .y_limit;
        },
        py::arg("slope"), py::arg("side"), py::arg("k2"), py::arg("kappa"));

    auto gy = m.def_submodule("gyro", "Indefinitely damped gyroscopic system");
    gy.def(
        "spectrum",
        [](double k1, double kappa, double delta1, double delta2, double omega) {
            return spectrum(gyro::to_system({k1, kappa, delta1, delta2, omega}));
        },
        py::arg("k1"), py::arg("kappa"), py::arg("delta1"), py::arg("delta2"), py::arg("omega"));
    gy.def(
        "critical_y",
        [](double k1, double omega, double kappa, double X, double y_min, double y_max, std::size_t scan_points) {
            gyro::SurfaceGrid g;
            g.kappa = {kappa};
            g.X = {X};
            g.y_min = y_min;
            g.y_max = y_max;
            g.scan_points = scan_points;
            std::vector<std::pair<double, bool>> out;
            for (const auto& s : gyro::boundary_surface(k1, omega, g).front().samples)
                out.emplace_back(s.critical, s.stable_above);
            return out;
        },
        py::arg("k1"), py::arg("omega"), py::arg("kappa"), py::arg("X"), py::arg("y_min") = -2.0,
        py::arg("y_max") = 2.0, py::arg("scan_points") = 64,
        "Crossings of the stability boundary in Y at fixed (kappa, X), as (Y, stable_above).");

    auto nl = m.def_submodule("nls", "Modulational instability of the dissipative NLS");
    nl.def(
        "ideal_threshold",
        [](double alpha, double gamma, double sigma) {
            nls::NLSParams p;
            p.alpha = alpha;
            p.gamma = gamma;
            p.sigma = sigma;
            return nls::ideal_threshold(p);
        },
        py::arg("alpha") = 1.0, py::arg("gamma") = 1.0, py::arg("sigma") = 1.0);
    nl.def(
        "spectrum",
        [](double u0, double a, double c, double alpha, double gamma, double k, double sigma) {
            return roots(char_poly(nls::assemble_linearization(nls_params(alpha, gamma, k, sigma, a, c, u0))));
        },
        py::arg("u0"), py::arg("a") = 0.0, py::arg("c") = 0.0, py::arg("alpha") = 1.0, py::arg("gamma") = 1.0,
        py::arg("k") = 1.0, py::arg("sigma") = 1.0);
    nl.def(
        "dissipative_threshold",
        [](double a, double c, double alpha, double gamma, double k, double sigma) {
            std::vector<double> out;
            for (const auto& r : nls::dissipative_threshold(nls_params(alpha, gamma, k, sigma, 0, 0, 0), a, c))
                out.push_back(r.amplitude);
            return out;
        },
        py::arg("a"), py::arg("c"), py::arg("alpha") = 1.0, py::arg("gamma") = 1.0, py::arg("k") = 1.0,
        py::arg("sigma") = 1.0);
    nl.def(
        "whitney_amplitude",
        [](double a, double c, double alpha, double gamma, double k, double sigma) {
            return nls::whitney_amplitude(nls_params(alpha, gamma, k, sigma, 0, 0, 0), a, c);
        },
        py::arg("a"), py::arg("c"), py::arg("alpha") = 1.0, py::arg("gamma") = 1.0, py::arg("k") = 1.0,
        py::arg("sigma") = 1.0);
    nl.def(
        "boundary_linear_slope",
        [](double u0, double alpha, double gamma, double k, double sigma) {
            const auto s = nls::boundary_linear_slope(nls_params(alpha, gamma, k, sigma, 0, 0, u0));
            return std::pair{s.plus, s.minus};
        },
        py::arg("u0"), py::arg("alpha") = 1.0, py::arg("gamma") = 1.0, py::arg("k") = 1.0, py::arg("sigma") = 1.0);

    m.def(
        "cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "ptstab");
            std::vector<char*> argv;
            for (auto& a : args) argv.push_back(a.data());
            py::gil_scoped_release release;
            return cli::main_entry(static_cast<int>(argv.size()), argv.data());
        },
        py::arg("args"), "Run the command-line tool in-process; returns the exit code.");
}
