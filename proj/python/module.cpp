#include <pybind11/pybind11.h>

#include <variant>

#include "pencils/flag_chern.hpp"
#include "pencils/harness.hpp"
#include "pencils/json_io.hpp"

namespace py = pybind11;

namespace {

using namespace pencils;

std::string classify_json(const std::string& pencil_json, bool pretty) {
    const AnyPencil pencil = parse_pencil_json(pencil_json);
    return std::visit(
        [pretty](const auto& p) { return classification_to_json(classify(p), pretty); }, pencil);
}

std::string expand_class(const std::string& expr, int n) {
    return to_text(parse_class(expr, n).value, false);
}

std::string verify_json(const std::string& check, int trials, std::uint64_t seed) {
    TrialReport report;
    if (check == "tangent")
        report = verify_tangent_sextic(trials > 0 ? trials : kDefaultTangentTrials, seed);
    else if (check == "flex")
        report = verify_flex_count(trials > 0 ? trials : kDefaultFlexTrials, seed);
    else if (check == "generic")
        report = verify_generic_line(trials > 0 ? trials : kDefaultGenericTrials, seed);
    else if (check == "secantJ")
        report = verify_secant_J(trials > 0 ? trials : kDefaultSecantTrials, seed);
    else
        throw std::invalid_argument("unknown check \"" + check +
                                    "\" (expected tangent|flex|generic|secantJ)");
    return trial_report_to_json(report, false);
}

}  // namespace

PYBIND11_MODULE(_pencils, m) {
    m.doc() = "Pencils of plane conics: orbit classification and Schubert calculus on G(1,5)";

    m.def("classify_json", &classify_json, py::arg("pencil_json"), py::arg("pretty") = false,
          "Classify a pencil given as JSON text; returns classification JSON.");
    m.def("expand_class", &expand_class, py::arg("expr"), py::arg("n") = 5,
          "Evaluate a Schubert-class expression, e.g. \"s[1]*s[1]\" -> \"s[2] + s[1,1]\".");
    m.def(
        "schubert_degree", [](int a, int b, int n) { return schubert_degree(a, b, n); },
        py::arg("a"), py::arg("b"), py::arg("n") = 5,
        "Pluecker degree of the Schubert cycle Sigma_{a,b} in G(1,N).");
    m.def(
        "chern_principal_parts",
        [](int r) { return to_text(chern_top_principal_parts(r), false); }, py::arg("r"),
        "Top Chern class c_r(E^r) of the r-th relative principal parts bundle.");
    m.def(
        "chern_sym3", [] { return to_text(chern_top_sym3_dual(), false); },
        "c_4(Sym^3 S*) via the splitting principle.");
    m.def(
        "table_json", [] { return table_report_to_json(verify_table(), false); },
        "Reproduce the orbit-closure class table; returns the report as JSON.");
    m.def("verify_json", &verify_json, py::arg("check"), py::arg("trials") = 0,
          py::arg("seed") = 0,
          "Run one randomized exact check (tangent|flex|generic|secantJ); returns JSON.");
}
