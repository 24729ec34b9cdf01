// Python bindings. Report-producing operations return plain dicts built by
// round-tripping the library's JSON reports, so Python results and CLI
// output stay structurally identical.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>

#include "zsl/classifier.hpp"
#include "zsl/davenport.hpp"
#include "zsl/errors.hpp"
#include "zsl/factorization.hpp"
#include "zsl/group.hpp"
#include "zsl/lemma1.hpp"
#include "zsl/parse.hpp"
#include "zsl/products.hpp"
#include "zsl/reports.hpp"
#include "zsl/sequence.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

zsl::Sequence parse_or_throw(const std::string& text, const zsl::Group& g) {
    return zsl::parse_sequence(text, g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "zero-sum sequence toolkit for groups <x,y | x^2, y^n, yx=xy^s>";

    py::register_exception<zsl::ParseError>(m, "SequenceParseError", PyExc_ValueError);
    py::register_exception<zsl::StateBudgetExceeded>(m, "StateBudgetExceeded",
                                                     PyExc_RuntimeError);

    py::class_<zsl::Group>(m, "Group")
        .def_static("metacyclic", &zsl::Group::metacyclic, py::arg("n"), py::arg("s"))
        .def_static("cyclic", &zsl::Group::cyclic, py::arg("m"))
        .def("order", &zsl::Group::order)
        .def("is_cyclic", &zsl::Group::is_cyclic)
        .def("mul", &zsl::Group::mul, py::arg("a"), py::arg("b"))
        .def("inverse", &zsl::Group::inverse, py::arg("e"))
        .def("element_name", &zsl::Group::element_name, py::arg("e"))
        .def("element_order", &zsl::Group::element_order, py::arg("e"))
        .def("spec_string", &zsl::Group::spec_string)
        .def("__repr__", [](const zsl::Group& g) {
            return "Group(" + g.spec_string() + ")";
        });

    m.def("parse_group", &zsl::parse_group_spec, py::arg("spec"),
          "Group from a spec string like 'metacyclic:n=8,s=3' or 'cyclic:m=5'");

    m.def(
        "check",
        [](const zsl::Group& g, const std::string& sequence) {
            zsl::Sequence s = parse_or_throw(sequence, g);
            return to_py(zsl::check_report(g, s, zsl::compute_products(s, g)));
        },
        py::arg("group"), py::arg("sequence"),
        "Product-one-freeness report for one sequence");

    m.def(
        "subproducts",
        [](const zsl::Group& g, const std::string& sequence) {
            zsl::Sequence s = parse_or_throw(sequence, g);
            zsl::ProductReport rep = zsl::compute_products(s, g);
            py::dict out;
            py::list pi, sub;
            for (int e : rep.pi) pi.append(g.element_name(e));
            for (int e : rep.subproducts) sub.append(g.element_name(e));
            out["pi"] = pi;
            out["subproducts"] = sub;
            out["product_one_free"] = rep.product_one_free;
            return out;
        },
        py::arg("group"), py::arg("sequence"),
        "Full-product and subproduct sets by element name");

    m.def(
        "davenport",
        [](const zsl::Group& g, int max_len, int workers) {
            zsl::DavenportConfig cfg;
            cfg.workers = workers;
            cfg.max_len = max_len > 0 ? max_len
                          : g.is_cyclic() ? g.n()
                                          : g.n() + 1;
            return to_py(
                zsl::davenport_report(g, cfg.max_len, zsl::small_davenport(g, cfg)));
        },
        py::arg("group"), py::arg("max_len") = 0, py::arg("workers") = 1,
        "Small Davenport constant by pruned search");

    m.def(
        "classify",
        [](int n, long long s) { return to_py(zsl::classify_report(n, s)); },
        py::arg("n"), py::arg("s"));

    m.def(
        "verify_theorem",
        [](const zsl::Group& g, int workers, std::uint64_t time_budget_ms) {
            zsl::TheoremConfig cfg;
            cfg.workers = workers;
            cfg.time_budget_ms = time_budget_ms;
            return to_py(zsl::theorem_report(g, zsl::verify_theorem(g, cfg)));
        },
        py::arg("group"), py::arg("workers") = 1, py::arg("time_budget_ms") = 0,
        "Census of maximal product-one free sequences vs the closed form");

    m.def(
        "families",
        [](const zsl::Group& g) {
            return to_py(zsl::families_report(g, zsl::verify_families_pof(g)));
        },
        py::arg("group"), "Check every closed-form family instance");

    m.def(
        "factor",
        [](int n, long long s) { return to_py(zsl::factor_report(zsl::factor(n, s))); },
        py::arg("n"), py::arg("s"),
        "Coprime split of n with s acting as -1 and +1");

    m.def(
        "lemma1_audit",
        [](int m_min, int m_max, const std::string& mode, std::uint64_t samples,
           std::uint64_t seed) {
            zsl::AuditMode am;
            if (mode == "exhaustive") {
                am = zsl::AuditMode::Exhaustive;
            } else if (mode == "sample") {
                am = zsl::AuditMode::Sample;
            } else {
                throw zsl::PreconditionError("mode must be exhaustive or sample");
            }
            return to_py(zsl::lemma1_report(
                m_min, m_max, am, samples, seed,
                zsl::audit_lemma1(m_min, m_max, am, samples, seed)));
        },
        py::arg("m_min"), py::arg("m_max"), py::arg("mode") = "exhaustive",
        py::arg("samples") = 10'000, py::arg("seed") = 0,
        "Run the cyclic-group certificate checkers over a modulus range");

    m.def("admissible_twists", &zsl::admissible_twists, py::arg("n"),
          "All s in [0, n) giving the studied twist class");
}
