#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "signrep/circuits.hpp"
#include "signrep/constructions.hpp"
#include "signrep/descartes.hpp"
#include "signrep/errors.hpp"
#include "signrep/poly_io.hpp"
#include "signrep/presets.hpp"
#include "signrep/vandermonde.hpp"

namespace py = pybind11;
using namespace signrep;

namespace {

// Structured results cross the boundary as JSON text; the Python package decodes them.
std::string dumped(const nlohmann::json& j) { return j.dump(); }

SearchConfig make_config(unsigned degree_cap, bool symmetry, unsigned workers) {
    SearchConfig c;
    c.degree_cap = degree_cap;
    c.symmetry = symmetry;
    c.workers = workers;
    return c;
}

SparsePoly construct(const std::string& family, std::size_t n, std::size_t m, const std::string& grid) {
    if (family == "hypercube") return construct_hypercube_parity(n);
    if (family == "mary") return construct_mary_parity(n, m);
    if (family == "geometric") return construct_geometric_parity(n);
    if (family == "weak-sparse") return construct_weak_low_sparsity(n, m);
    if (family == "weak-product")
        return construct_weak_product(Grid::parse(n, grid.empty() ? "0.." + std::to_string(m - 1) : grid));
    throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_signrep, m) {
    m.doc() = "Exact sign representations of parity and inner product over integer grids";

    py::register_exception<CapExceeded>(m, "CapExceeded");

    m.def(
        "canonical", [](const std::string& text, std::size_t n) { return to_text(parse_poly(text, n)); },
        py::arg("text"), py::arg("n") = 0);
    m.def(
        "poly_json", [](const std::string& text, std::size_t n) { return dumped(to_json(parse_poly(text, n))); },
        py::arg("text"), py::arg("n") = 0);
    m.def(
        "evaluate",
        [](const std::string& text, const std::vector<std::int64_t>& point) {
            return evaluate(parse_poly(text, point.size()), point).str();
        },
        py::arg("text"), py::arg("point"));
    m.def(
        "grid_reduce",
        [](const std::string& text, const std::string& grid, std::size_t n) {
            const auto p = parse_poly(text, n);
            return to_text(grid_reduce(p, Grid::parse(p.dimension(), grid)));
        },
        py::arg("text"), py::arg("grid"), py::arg("n") = 0);
    m.def(
        "verify",
        [](const std::string& text, const std::string& target, const std::string& grid, std::size_t n,
           const std::string& kind) {
            const auto p = parse_poly(text, n);
            const auto f = parse_target(target, grid, n == 0 ? p.dimension() : n);
            return dumped(to_json(verify(p, f, parse_rep_kind(kind))));
        },
        py::arg("text"), py::arg("target") = "parity", py::arg("grid") = "0..1", py::arg("n") = 0,
        py::arg("kind") = "sign");
    m.def("construct", [](const std::string& family, std::size_t n, std::size_t m, const std::string& grid) {
        return to_text(construct(family, n, m, grid));
    }, py::arg("family"), py::arg("n"), py::arg("m") = 2, py::arg("grid") = "");
    m.def(
        "min_sparsity",
        [](const std::string& target, const std::string& grid, std::size_t n, unsigned degcap, const std::string& kind,
           bool symmetry, unsigned workers) {
            return dumped(to_json(
                min_sparsity(parse_target(target, grid, n), parse_rep_kind(kind), make_config(degcap, symmetry, workers))));
        },
        py::arg("target"), py::arg("grid"), py::arg("n"), py::arg("degcap") = 1, py::arg("kind") = "sign",
        py::arg("symmetry") = false, py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "min_degree",
        [](const std::string& target, const std::string& grid, std::size_t n, unsigned degcap, const std::string& kind) {
            return dumped(
                to_json(min_degree(parse_target(target, grid, n), parse_rep_kind(kind), make_config(degcap, false, 1))));
        },
        py::arg("target"), py::arg("grid"), py::arg("n"), py::arg("degcap") = 1, py::arg("kind") = "sign",
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "census", [](std::size_t n) { return dumped(to_json(coefficient_sign_census(n))); }, py::arg("n"),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "min_spr_b",
        [](const std::string& target, std::size_t n, bool symmetry) {
            const auto f = target == "ip" ? TargetFunction::inner_product(n) : TargetFunction::parity(Grid(n, {0, 1}));
            return dumped(to_json(min_spr_B(f, make_config(1, symmetry, 1))));
        },
        py::arg("target"), py::arg("n"), py::arg("symmetry") = false, py::call_guard<py::gil_scoped_release>());
    m.def(
        "circuit",
        [](const std::string& family, std::size_t n) {
            const auto c = family == "ip" ? construct_ip_circuit(n) : construct_parity_5_circuit(n);
            const auto f = family == "ip" ? TargetFunction::inner_product(n) : TargetFunction::parity(Grid(n, {0, 1}));
            auto j = to_json(c);
            j["verification"] = to_json(circuit_verify(c, f));
            return dumped(j);
        },
        py::arg("family"), py::arg("n"));
    m.def(
        "vandermonde_signs",
        [](const std::vector<std::string>& points, const std::vector<unsigned>& exponents) {
            std::vector<Rational> pts;
            for (const auto& p : points) pts.push_back(Rational::parse(p));
            const auto v = gvd_build(pts, exponents);
            const auto signs = inverse_sign_pattern(v);
            std::vector<std::vector<int>> rows(signs.rows());
            for (std::size_t r = 0; r < signs.rows(); ++r)
                for (std::size_t c = 0; c < signs.cols(); ++c) rows[r].push_back(signs(r, c));
            return py::make_tuple(det_exact(v).str(), rows);
        },
        py::arg("points"), py::arg("exponents"));
    m.def(
        "descartes_bound", [](const std::string& text) { return descartes_bound(parse_poly(text, 1)); },
        py::arg("text"));
    m.def("preset_names", &preset_names);
    m.def(
        "run_preset",
        [](const std::string& name, std::uint64_t seed, std::size_t instances) {
            PresetOptions o;
            o.seed = seed;
            o.instances = instances;
            return dumped(to_json(run_preset(name, o)));
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("instances") = 1000, py::call_guard<py::gil_scoped_release>());
}
