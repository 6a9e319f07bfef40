#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vna/free_monoid.hpp"
#include "vna/json_io.hpp"
#include "vna/states.hpp"
#include "vna/type_expr.hpp"

namespace py = pybind11;
using namespace vna;

namespace {

py::list report_to_pylist(const Report& report) {
    py::list out;
    for (const CheckResult& c : report.checks) {
        py::dict entry;
        entry["check"] = c.check;
        entry["pass"] = c.pass;
        if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
        out.append(entry);
    }
    return out;
}

py::dict verdict_to_pydict(const Algebra& a, const DuplicabilityVerdict& verdict) {
    py::dict out;
    out["blocks"] = a.blocks();
    out["dim"] = a.dim();
    out["duplicable"] = verdict.duplicable;
    if (verdict.x_size) out["x_size"] = *verdict.x_size;
    if (verdict.witness_block) out["witness_block"] = *verdict.witness_block;
    out["report"] = report_to_pylist(verdict.report);
    return out;
}

}  // namespace

PYBIND11_MODULE(vnat, m) {
    m.doc() = "finite-dimensional von Neumann algebra toolkit";

    py::class_<Algebra>(m, "Algebra")
        .def(py::init<std::vector<int>>(), py::arg("blocks"))
        .def_property_readonly("blocks", &Algebra::blocks)
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("is_abelian", [](const Algebra& a) { return is_abelian(a); })
        .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
        .def("__repr__", [](const Algebra& a) { return "Algebra(" + a.to_string() + ")"; })
        .def("__str__", &Algebra::to_string);

    m.def("parse_algebra", &Algebra::parse, py::arg("text"),
          "Parse an algebra literal such as \"1,1,2\" (\"0\" is the zero algebra).");

    m.def("tensor", &tensor_algebra, py::arg("a"), py::arg("b"));
    m.def(
        "direct_sum", [](const Algebra& a, const Algebra& b) { return direct_sum(a, b).sum; },
        py::arg("a"), py::arg("b"));

    m.def(
        "classify",
        [](const std::string& text) {
            const Algebra a = Algebra::parse(text);
            return verdict_to_pydict(a, decide_duplicable(a));
        },
        py::arg("algebra"), "Decide duplicability; returns the verdict with its report.");
    m.def(
        "classify",
        [](const Algebra& a) { return verdict_to_pydict(a, decide_duplicable(a)); },
        py::arg("algebra"));

    m.def(
        "canonical_duplicator_action",
        [](const Algebra& a) -> Mat { return canonical_duplicator(a).delta.action(); },
        py::arg("algebra"), "Action matrix of delta(a (x) b) = a.b on an abelian algebra.");

    m.def(
        "verify_canonical",
        [](const Algebra& a) {
            return report_to_pylist(verify_duplicator(a, canonical_duplicator(a)));
        },
        py::arg("algebra"));

    m.def(
        "nsp_size", [](const Algebra& a) { return nsp(a).size(); }, py::arg("algebra"));
    m.def(
        "bang", [](const Algebra& a) { return linf(static_cast<int>(nsp(a).size())); },
        py::arg("algebra"), "linf(nsp(A)), the free commutative monoid carrier.");
    m.def(
        "eta_action", [](const Algebra& a) -> Mat { return eta(a).action(); }, py::arg("algebra"));

    m.def(
        "denote",
        [](const std::string& text) { return denote_type(parse_type(text)); },
        py::arg("type"), "Denote a type expression, e.g. \"!(bit*bit)\".");

    m.def(
        "probe",
        [](const std::string& text, int iters, uint64_t seed) {
            const ProbeResult result =
                broadcast_feasibility_probe(Algebra::parse(text), iters, seed);
            py::dict out;
            out["residual"] = result.final_residual;
            out["iterations"] = result.iterations;
            out["feasible"] = result.feasible;
            return out;
        },
        py::arg("algebra"), py::arg("iters") = 20000, py::arg("seed") = 42,
        "Alternating-projection broadcast feasibility probe.");

    m.def(
        "enumerate_monoid_morphism_count",
        [](int x_size, int y_size) { return enumerate_monoid_morphisms(x_size, y_size).count; },
        py::arg("x_size"), py::arg("y_size"));

    m.attr("__version__") = "0.1.0";
}
