#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsqg/errors.hpp"
#include "gsqg/field2d.hpp"
#include "gsqg/fixedpoint.hpp"
#include "gsqg/specfun.hpp"

namespace py = pybind11;
using namespace gsqg;

namespace {

py::array_t<double> arr(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

std::vector<double> vec(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    return std::vector<double>(a.data(), a.data() + a.size());
}

py::dict membership(const MembershipReport& r) {
    py::dict checks;
    for (const auto& c : r.checks)
        checks[py::str(c.name)] = py::dict(py::arg("pass") = c.pass, py::arg("margin") = c.margin,
                                           py::arg("location") = c.location);
    return py::dict(py::arg("kind") = set_kind_name(r.kind), py::arg("passed") = r.passed(), py::arg("tol") = r.tol,
                    py::arg("checks") = checks);
}

SolveOptions options(double tol, int max_iter, double damping, const std::string& tail) {
    SolveOptions o;
    o.tol = tol;
    o.max_iter = max_iter;
    o.damping = damping;
    if (tail == "none")
        o.tail = TailModel::None;
    else if (tail != "powerlaw")
        throw ConfigError("tail must be powerlaw or none");
    return o;
}

py::dict solve_r2_py(double alpha, const std::string& mesh, double tol, int max_iter, double damping) {
    const auto params = make_alpha_params(alpha, false);
    SolveReportR2 r;
    {
        py::gil_scoped_release nogil;
        r = solve_r2(params, parse_mesh(mesh), options(tol, max_iter, damping, "powerlaw"));
    }
    const auto& fn = r.functionals;
    return py::dict(py::arg("converged") = r.converged, py::arg("iterations") = r.iterations,
                    py::arg("failure") = r.failure, py::arg("x") = arr(r.profile.mesh.nodes()),
                    py::arg("f") = arr(r.profile.f), py::arg("rescaled") = arr(r.rescaled), py::arg("b") = fn.b,
                    py::arg("c") = fn.c, py::arg("c_ell") = fn.c_ell, py::arg("lambda_") = fn.lambda,
                    py::arg("c_ell_norm") = r.c_ell_tilde, py::arg("support_radius") = r.support_radius,
                    py::arg("ode_residual") = r.ode.max_abs, py::arg("sinc_gap") = sinc_limit_gap(r),
                    py::arg("membership") = membership(r.membership));
}

py::dict solve_hp_py(double alpha, const std::string& mesh, double tol, int max_iter, double damping,
                     const std::string& tail) {
    const auto params = make_alpha_params(alpha, true);
    SolveReportHP r;
    {
        py::gil_scoped_release nogil;
        r = solve_hp(params, parse_mesh(mesh), options(tol, max_iter, damping, tail));
    }
    const auto& fn = r.functionals;
    return py::dict(py::arg("converged") = r.converged, py::arg("iterations") = r.iterations,
                    py::arg("failure") = r.failure, py::arg("x") = arr(r.profile.mesh.nodes()),
                    py::arg("f") = arr(r.profile.f), py::arg("rescaled") = arr(r.rescaled),
                    py::arg("velocity") = arr(r.velocity), py::arg("frak_T") = arr(r.frak_T),
                    py::arg("b_frak") = fn.b_frak, py::arg("c_frak") = fn.c_frak, py::arg("c_ell") = fn.c_ell,
                    py::arg("c_theta") = fn.c_theta, py::arg("lambda_") = fn.lambda,
                    py::arg("c_ell_norm") = fn.c_ell_norm, py::arg("c_theta_norm") = fn.c_theta_norm,
                    py::arg("dual_route_gap") = r.dual_route_gap, py::arg("ode_residual") = r.ode.max_abs,
                    py::arg("tail_fallbacks") = r.tail_fallbacks, py::arg("membership") = membership(r.membership));
}

py::dict check_py(const std::string& problem, double alpha, const py::array_t<double>& x, const py::array_t<double>& f) {
    const Mesh mesh = custom_mesh(vec(x));
    if (problem == "r2") return membership(check_V1(ProfileR2(mesh, vec(f)), make_alpha_params(alpha, false)));
    if (problem == "hp") return membership(check_V1_hp(ProfileHP(mesh, vec(f)), make_alpha_params(alpha, true)));
    throw ConfigError("problem must be r2 or hp");
}

// theta: n x n samples on [-L, L)^2, rows are y. Only rows y >= 0 are read.
py::tuple velocity_py(const py::array_t<double, py::array::c_style | py::array::forcecast>& theta, double L,
                      double alpha) {
    if (theta.ndim() != 2 || theta.shape(0) != theta.shape(1)) throw GridError("theta must be a square array");
    Field2D field(static_cast<std::size_t>(theta.shape(0)), L);
    field.theta = vec(theta);
    field.enforce_odd_in_y();
    {
        py::gil_scoped_release nogil;
        velocity_from_theta(field, make_alpha_params(alpha, true));
    }
    const auto n = static_cast<py::ssize_t>(field.n);
    py::array_t<double> u1({n, n}), u2({n, n});
    std::copy(field.u1.begin(), field.u1.end(), u1.mutable_data());
    std::copy(field.u2.begin(), field.u2.end(), u2.mutable_data());
    return py::make_tuple(u1, u2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fixed-point solver for self-similar generalized SQG profiles";

    static py::exception<Error> base(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(base.ptr(), (std::string(e.kind()) + ": " + e.what()).c_str());
        }
    });

    py::class_<AlphaParams>(m, "AlphaParams")
        .def_readonly("alpha", &AlphaParams::alpha)
        .def_readonly("half_plane", &AlphaParams::half_plane)
        .def_readonly("c0", &AlphaParams::c0)
        .def_readonly("c1", &AlphaParams::c1)
        .def_readonly("eta", &AlphaParams::eta)
        .def_readonly("t0", &AlphaParams::t0)
        .def_readonly("delta_l", &AlphaParams::delta_l)
        .def_readonly("delta_u", &AlphaParams::delta_u)
        .def_readonly("b_lo", &AlphaParams::b_lo)
        .def_readonly("b_hi", &AlphaParams::b_hi)
        .def_readonly("c_lo", &AlphaParams::c_lo)
        .def_readonly("c_hi", &AlphaParams::c_hi);
    m.def("alpha_params", &make_alpha_params, py::arg("alpha"), py::arg("half_plane") = false);

    m.def("mesh_nodes", [](const std::string& spec) { return arr(parse_mesh(spec).nodes()); }, py::arg("spec"));

    m.def("f1", [](double g, double t) { return specfun::f1(g, t); });
    m.def("f1_prime", [](double g, double t) { return specfun::f1_prime(g, t); });
    m.def("f2", [](double g, double t) { return specfun::f2(g, t); });
    m.def("f2_prime", [](double g, double t) { return specfun::f2_prime(g, t); });
    m.def("burgers_profile", &burgers_profile, py::arg("x"));

    m.def("solve_r2", &solve_r2_py, py::arg("alpha"), py::arg("mesh") = "power:5:2000:2", py::arg("tol") = 1e-7,
          py::arg("max_iter") = 500, py::arg("damping") = 1.0);
    m.def("solve_hp", &solve_hp_py, py::arg("alpha"), py::arg("mesh") = "sinh:15:4000", py::arg("tol") = 1e-7,
          py::arg("max_iter") = 500, py::arg("damping") = 1.0, py::arg("tail") = "powerlaw");
    m.def("check_membership", &check_py, py::arg("problem"), py::arg("alpha"), py::arg("x"), py::arg("f"));
    m.def("velocity_2d", &velocity_py, py::arg("theta"), py::arg("L"), py::arg("alpha"));
}
