// Thin bindings: reports cross the boundary as JSON text and are parsed on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthoperm/harness.hpp"

namespace py = pybind11;
using namespace orthoperm;

namespace {

Config make_config(const std::string& family, int m, std::uint32_t ell, const std::vector<int>& kappas,
                   std::uint64_t seed, bool order_check, bool lattice_enum, bool rational) {
    Config c;
    c.family = parse_family(family);
    c.m = m;
    c.ell = ell;
    c.kappas = kappas;
    c.seed = seed;
    c.order_check = order_check;
    c.lattice_enum = lattice_enum;
    c.rational = rational;
    return c;
}

}  // namespace

PYBIND11_MODULE(_orthoperm, mod) {
    py::register_exception<UnsupportedConfig>(mod, "UnsupportedConfig", PyExc_ValueError);
    py::register_exception<FatalInconsistency>(mod, "FatalInconsistency", PyExc_RuntimeError);

    mod.def(
        "verify_json",
        [](const std::string& family, int m, std::uint32_t ell, const std::vector<int>& kappas, std::uint64_t seed,
           bool order_check, bool lattice_enum, bool rational) {
            const Config c = make_config(family, m, ell, kappas, seed, order_check, lattice_enum, rational);
            py::gil_scoped_release release;
            return to_json(run_verification(c), -1);
        },
        py::arg("family"), py::arg("m"), py::arg("ell"), py::arg("kappas") = std::vector<int>{1, -1},
        py::arg("seed") = 1, py::arg("order_check") = false, py::arg("lattice_enum") = false,
        py::arg("rational") = true);

    mod.def(
        "params_json",
        [](const std::string& family, int m, std::uint64_t seed, bool order_check) {
            return params_json(parse_family(family), m, seed, order_check);
        },
        py::arg("family"), py::arg("m"), py::arg("seed") = 1, py::arg("order_check") = false);

    mod.def(
        "dims_json",
        [](const std::string& family, int m, std::uint32_t ell, std::uint64_t seed) {
            return dims_json(parse_family(family), m, ell, seed);
        },
        py::arg("family"), py::arg("m"), py::arg("ell"), py::arg("seed") = 1);

    mod.def(
        "expected_factor_dims",
        [](const std::string& family, int m, std::uint32_t ell) {
            std::map<std::string, std::size_t> out;
            for (const auto& f : expected_descriptor(parse_family(family), m, ell).factors) out[f.name] = f.dim;
            return out;
        },
        py::arg("family"), py::arg("m"), py::arg("ell"));

    mod.def(
        "ell_class",
        [](const std::string& family, int m, std::uint32_t ell) {
            return to_string(classify_ell(parse_family(family), m / 2, ell));
        },
        py::arg("family"), py::arg("m"), py::arg("ell"));

    mod.def("point_count", [](const std::string& family, int m, int kappa) {
        return formula_point_count(parse_family(family), m / 2, kappa);
    });
}
