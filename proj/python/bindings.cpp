#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gasfold/config.hpp"
#include "gasfold/family.hpp"
#include "gasfold/geometry.hpp"
#include "gasfold/oracle.hpp"
#include "gasfold/report.hpp"
#include "gasfold/singularity.hpp"
#include "gasfold/thermo.hpp"

namespace py = pybind11;
using namespace gasfold;

PYBIND11_MODULE(_gasfold, m) {
    m.doc() = "Exact multivalued solutions of 1-D homentropic gas dynamics: "
              "quadrature families, caustics and shock fronts.";

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo") = 1e-10, py::arg("hi") = 1e10)
        .def_readwrite("lo", &Interval::lo)
        .def_readwrite("hi", &Interval::hi);

    // thermo
    py::class_<thermo::IdealGasParams>(m, "IdealGasParams")
        .def(py::init([](double n, double R, double s0) {
                 return thermo::IdealGasParams{n, R, s0};
             }),
             py::arg("n") = 3.0, py::arg("R") = 1.0, py::arg("s0") = 0.0)
        .def_readwrite("n", &thermo::IdealGasParams::n)
        .def_readwrite("R", &thermo::IdealGasParams::R)
        .def_readwrite("s0", &thermo::IdealGasParams::s0);

    py::class_<thermo::ThermodynamicModel>(m, "ThermodynamicModel")
        .def_readonly("R", &thermo::ThermodynamicModel::R)
        .def_readonly("descriptor", &thermo::ThermodynamicModel::descriptor);

    py::class_<thermo::HomentropicModel>(m, "HomentropicModel")
        .def_readonly("s0", &thermo::HomentropicModel::s0)
        .def_readonly("descriptor", &thermo::HomentropicModel::descriptor)
        .def("has_temperature", &thermo::HomentropicModel::has_temperature)
        .def("T", &thermo::HomentropicModel::T)
        .def("p", &thermo::HomentropicModel::p)
        .def("dp", &thermo::HomentropicModel::dp)
        .def("A", &thermo::HomentropicModel::A)
        .def("Q", &thermo::HomentropicModel::Q)
        .def("IQ", &thermo::HomentropicModel::IQ);

    m.def("ideal_gas_model", &thermo::ideal_gas_model, py::arg("params"));
    m.def(
        "lagrangian_state",
        [](const thermo::ThermodynamicModel& model, double T, double rho) {
            auto s = thermo::lagrangian_state(model, T, rho);
            return py::make_tuple(s.p, s.e);
        },
        py::arg("model"), py::arg("T"), py::arg("rho"));
    m.def("entropy", &thermo::entropy, py::arg("model"), py::arg("T"), py::arg("rho"));
    m.def(
        "applicability",
        [](const thermo::ThermodynamicModel& model, double T, double rho) {
            auto a = thermo::applicability(model, T, rho);
            return py::make_tuple(a.kappa_TT, a.kappa_rhorho, a.applicable);
        },
        py::arg("model"), py::arg("T"), py::arg("rho"));
    m.def("homentropic_reduce", &thermo::homentropic_reduce, py::arg("model"), py::arg("s0"),
          py::arg("rho_range") = Interval{});
    m.def("power_law_model", &thermo::power_law_model, py::arg("A0"), py::arg("m"),
          py::arg("rho_range") = Interval{});

    // geometry
    py::enum_<geometry::TypeTag>(m, "TypeTag")
        .value("Hyperbolic", geometry::TypeTag::Hyperbolic)
        .value("Elliptic", geometry::TypeTag::Elliptic)
        .value("Parabolic", geometry::TypeTag::Parabolic);

    py::class_<geometry::SystemType>(m, "SystemType")
        .def_readonly("tag", &geometry::SystemType::tag)
        .def_readonly("det_P", &geometry::SystemType::det_P);

    m.def("classify", &geometry::classify, py::arg("hm"), py::arg("rho"));
    m.def("aw_matrix", &geometry::aw_matrix, py::arg("hm"), py::arg("u"), py::arg("rho"));
    m.def("is_integrable_characteristics", &geometry::is_integrable_characteristics);
    m.def("is_constant_coeff_reducible", &geometry::is_constant_coeff_reducible);

    // family
    py::enum_<family::Branch>(m, "Branch")
        .value("plus", family::Branch::plus)
        .value("minus", family::Branch::minus);

    py::class_<family::SolutionFamily>(m, "SolutionFamily")
        .def(py::init([](double lam, double a0, double a2, double t0, double x0,
                         thermo::HomentropicModel hm) {
                 return family::SolutionFamily{lam, a0, a2, t0, x0, std::move(hm)};
             }),
             py::arg("lam"), py::arg("alpha0"), py::arg("alpha2"), py::arg("t0"),
             py::arg("x0"), py::arg("hm"))
        .def_readwrite("lam", &family::SolutionFamily::lambda)
        .def_readwrite("alpha0", &family::SolutionFamily::alpha0)
        .def_readwrite("alpha2", &family::SolutionFamily::alpha2)
        .def_readwrite("t0", &family::SolutionFamily::t0)
        .def_readwrite("x0", &family::SolutionFamily::x0)
        .def_readonly("hm", &family::SolutionFamily::hm);

    py::class_<family::ProfileSample>(m, "ProfileSample")
        .def_readonly("x", &family::ProfileSample::x)
        .def_readonly("rho", &family::ProfileSample::rho)
        .def_readonly("u", &family::ProfileSample::u)
        .def_readonly("branch", &family::ProfileSample::branch)
        .def_readonly("t", &family::ProfileSample::t)
        .def("__repr__", [](const family::ProfileSample& s) {
            return "ProfileSample(x=" + std::to_string(s.x) + ", rho=" + std::to_string(s.rho) +
                   ")";
        });

    m.def("t_of", &family::t_of, py::arg("fam"), py::arg("u"), py::arg("rho"));
    m.def("x_of", &family::x_of, py::arg("fam"), py::arg("u"), py::arg("rho"));
    m.def("radicand", &family::radicand, py::arg("fam"), py::arg("rho"), py::arg("t"));
    m.def("branch_u", &family::branch_u, py::arg("fam"), py::arg("rho"), py::arg("t"),
          py::arg("sign"));
    m.def("profile", &family::profile, py::arg("fam"), py::arg("t"), py::arg("rho_grid"));
    m.def("path_profile", &family::path_profile, py::arg("fam"), py::arg("t"),
          py::arg("rho_grid"));
    m.def("fold_count", &family::fold_count, py::arg("path"));
    m.def("fold_indicator", &family::fold_indicator, py::arg("fam"), py::arg("u"),
          py::arg("rho"));

    // singularity
    py::class_<singularity::CausticSample>(m, "CausticSample")
        .def_readonly("rho", &singularity::CausticSample::rho)
        .def_readonly("t", &singularity::CausticSample::t)
        .def_readonly("x", &singularity::CausticSample::x)
        .def_readonly("branch", &singularity::CausticSample::branch);

    py::class_<singularity::CuspInfo>(m, "CuspInfo")
        .def_readonly("rho_c", &singularity::CuspInfo::rho_c)
        .def_readonly("t_c", &singularity::CuspInfo::t_c)
        .def_readonly("x_c", &singularity::CuspInfo::x_c)
        .def_readonly("branch", &singularity::CuspInfo::branch);

    py::class_<singularity::CausticCurve>(m, "CausticCurve")
        .def_readonly("samples", &singularity::CausticCurve::samples)
        .def_readonly("cusp", &singularity::CausticCurve::cusp)
        .def_readonly("skipped", &singularity::CausticCurve::skipped);

    py::class_<singularity::ShockSample>(m, "ShockSample")
        .def_readonly("t", &singularity::ShockSample::t)
        .def_readonly("x_s", &singularity::ShockSample::x_s)
        .def_readonly("rho1", &singularity::ShockSample::rho1)
        .def_readonly("rho2", &singularity::ShockSample::rho2)
        .def_readonly("res_H", &singularity::ShockSample::res_H)
        .def_readonly("res_x", &singularity::ShockSample::res_x);

    py::class_<singularity::ShockFront>(m, "ShockFront")
        .def_readonly("branch", &singularity::ShockFront::branch)
        .def_readonly("t_start", &singularity::ShockFront::t_start)
        .def_readonly("samples", &singularity::ShockFront::samples)
        .def_readonly("stalled", &singularity::ShockFront::stalled);

    m.def("z_pm", &singularity::z_pm, py::arg("fam"), py::arg("rho"), py::arg("sign"));
    m.def("caustic", &singularity::caustic, py::arg("fam"), py::arg("rho_grid"),
          py::arg("branch"));
    m.def("potential_H", &singularity::potential_H, py::arg("fam"), py::arg("rho"), py::arg("t"),
          py::arg("sign"));
    m.def("shock_front", &singularity::shock_front, py::arg("fam"), py::arg("cusp"),
          py::arg("t_range"), py::arg("dt"));
    m.def("shock_fronts", &singularity::shock_fronts, py::arg("fam"), py::arg("rho_grid"),
          py::arg("t_len"), py::arg("dt"));
    m.def("cut_profile",
          py::overload_cast<const family::SolutionFamily&, double, const std::vector<double>&,
                            const std::vector<singularity::ShockFront>&>(
              &singularity::cut_profile),
          py::arg("fam"), py::arg("t"), py::arg("rho_grid"), py::arg("fronts"));

    // oracle + validation
    m.def(
        "mass_integral",
        [](const std::vector<family::ProfileSample>& profile, std::pair<double, double> window) {
            return oracle::mass_integral(profile, window);
        },
        py::arg("profile"), py::arg("x_window"));
    m.def(
        "validate",
        [](const family::SolutionFamily& fam, unsigned seed) {
            cli::ValidationOptions opts;
            opts.seed = seed;
            auto rep = cli::run_validation(fam, opts);
            py::dict out;
            for (const auto& c : rep.checks) {
                py::dict d;
                d["pass"] = c.pass;
                d["worst"] = c.worst;
                d["tol"] = c.tol;
                out[c.name.c_str()] = d;
            }
            return out;
        },
        py::arg("fam"), py::arg("seed") = 20240817u);
}
