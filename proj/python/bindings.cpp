#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "ringkepler/cli.hpp"
#include "ringkepler/error.hpp"
#include "ringkepler/parabolic.hpp"
#include "ringkepler/spherical.hpp"
#include "ringkepler/verify.hpp"

namespace py = pybind11;
using namespace ringkepler;

// Half-integers travel as fractions.Fraction; int, float (multiples of 1/2)
// and strings such as "3/2" are accepted on input.
namespace pybind11::detail {
template <>
struct type_caster<HalfInt> {
    PYBIND11_TYPE_CASTER(HalfInt, const_name("HalfInt"));

    bool load(handle src, bool) {
        if (!src) return false;
        if (py::isinstance<py::str>(src)) {
            try {
                value = HalfInt::parse(src.cast<std::string>());
                return true;
            } catch (const std::invalid_argument&) {
                return false;
            }
        }
        if (py::isinstance<py::bool_>(src)) return false;
        if (!py::hasattr(src, "__float__")) return false;
        const double twice = 2.0 * src.cast<double>();
        if (!std::isfinite(twice) || twice != std::round(twice) || std::abs(twice) > 1e9) return false;
        value = HalfInt::from_twice(static_cast<int>(twice));
        return true;
    }

    static handle cast(HalfInt h, return_value_policy, handle) {
        return py::module_::import("fractions").attr("Fraction")(h.twice(), 2).release();
    }
};
}  // namespace pybind11::detail

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bound states of the generalized MIC-Kepler system";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<ParityError>(m, "ParityError", PyExc_ValueError);

    py::class_<ModelParams>(m, "Params")
        .def(py::init([](HalfInt s, double c1, double c2) { return validate_params(s, c1, c2); }), py::arg("s") = 0,
             py::arg("c1") = 0.0, py::arg("c2") = 0.0)
        .def_readonly("s", &ModelParams::s)
        .def_readonly("c1", &ModelParams::c1)
        .def_readonly("c2", &ModelParams::c2)
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream os;
            os << "Params(s=" << p.s.str() << ", c1=" << p.c1 << ", c2=" << p.c2 << ")";
            return os.str();
        });

    m.def(
        "exponents",
        [](const ModelParams& p, HalfInt mq) {
            const Exponents e = derived_exponents(p, mq);
            py::dict d;
            d["m1"] = e.m1;
            d["m2"] = e.m2;
            d["delta1"] = e.delta1;
            d["delta2"] = e.delta2;
            d["m_plus"] = e.m_plus;
            d["m_minus"] = e.m_minus;
            return d;
        },
        py::arg("params"), py::arg("m"));
    m.def("energy", [](const ModelParams& p, HalfInt n, HalfInt mq) { return energy(p, mq, n).value; }, py::arg("params"),
          py::arg("n"), py::arg("m"));
    m.def("separation_constant", &separation_constant, py::arg("params"), py::arg("j"), py::arg("m"));
    m.def(
        "beta",
        [](const ModelParams& p, int n1, int n2, HalfInt mq) { return beta_eigenvalue(p, ParabolicState{n1, n2, mq}); },
        py::arg("params"), py::arg("n1"), py::arg("n2"), py::arg("m"));
    m.def(
        "ring_harmonic",
        [](const ModelParams& p, HalfInt j, HalfInt mq, double theta, double phi) {
            return ring_harmonic(p, j, mq, theta, phi).value;
        },
        py::arg("params"), py::arg("j"), py::arg("m"), py::arg("theta"), py::arg("phi") = 0.0);
    m.def("radial_wavefunction", &radial_wavefunction, py::arg("params"), py::arg("n"), py::arg("j"), py::arg("m"),
          py::arg("r"));
    m.def(
        "spherical_state",
        [](const ModelParams& p, HalfInt n, HalfInt j, HalfInt mq, double r, double theta, double phi) {
            return spherical_state_eval(p, SphericalState{n, j, mq}, SphericalPoint{r, theta, phi});
        },
        py::arg("params"), py::arg("n"), py::arg("j"), py::arg("m"), py::arg("r"), py::arg("theta"), py::arg("phi") = 0.0);
    m.def(
        "parabolic_state",
        [](const ModelParams& p, int n1, int n2, HalfInt mq, double xi, double eta, double phi) {
            return parabolic_state_eval(p, ParabolicState{n1, n2, mq}, ParabolicPoint{xi, eta, phi});
        },
        py::arg("params"), py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("xi"), py::arg("eta"), py::arg("phi") = 0.0);
    m.def(
        "enumerate_spherical",
        [](const ModelParams& p, HalfInt n) {
            std::vector<std::tuple<HalfInt, HalfInt, HalfInt>> out;
            for (const auto& s : enumerate_spherical(p, n)) out.emplace_back(s.n, s.j, s.m);
            return out;
        },
        py::arg("params"), py::arg("n"), "(n, j, m) triples ordered by (m, j)");
    m.def(
        "enumerate_parabolic",
        [](const ModelParams& p, HalfInt n) {
            std::vector<std::tuple<int, int, HalfInt>> out;
            for (const auto& s : enumerate_parabolic(p, n)) out.emplace_back(s.n1, s.n2, s.m);
            return out;
        },
        py::arg("params"), py::arg("n"), "(n1, n2, m) triples ordered by (m, n1)");
    m.def(
        "fd_radial_spectrum",
        [](const ModelParams& p, HalfInt j, HalfInt mq, int k, std::size_t nodes) {
            return fd_radial_spectrum(p, j, mq, k, nodes).eigenvalues;
        },
        py::arg("params"), py::arg("j"), py::arg("m"), py::arg("k"), py::arg("nodes") = 20000);
    m.def(
        "fd_angular_spectrum",
        [](const ModelParams& p, HalfInt mq, int k, std::size_t cells) {
            return fd_angular_spectrum(p, mq, k, cells).eigenvalues;
        },
        py::arg("params"), py::arg("m"), py::arg("k"), py::arg("cells") = 40000);
    m.def(
        "interbasis_matrix",
        [](const ModelParams& p, HalfInt n, HalfInt mq) {
            InterbasisResult r = interbasis_matrix(p, n, mq);
            return py::make_tuple(r.matrix, r.unitarity_defect);
        },
        py::arg("params"), py::arg("n"), py::arg("m"), "(matrix, unitarity defect); rows parabolic, columns spherical");
    m.def(
        "x_rayleigh_beta",
        [](const ModelParams& p, int n1, int n2, HalfInt mq, std::size_t nodes) {
            return x_rayleigh_beta(p, ParabolicState{n1, n2, mq}, nodes);
        },
        py::arg("params"), py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("nodes") = 400);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"ringkepler"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end in process; returns (exit code, stdout, stderr).");
}
