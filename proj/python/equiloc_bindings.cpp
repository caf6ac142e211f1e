// Python bindings for the command layer: every CLI operation is exposed as a
// function returning the parsed JSON report, so Python callers see exactly
// what the command-line tool prints in --json mode.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "equiloc/cli.hpp"
#include "equiloc/io.hpp"

namespace py = pybind11;
using namespace equiloc;

namespace {

std::optional<std::vector<Int>> to_xi(const std::optional<std::vector<long long>>& xi) {
    if (!xi) return std::nullopt;
    std::vector<Int> out;
    out.reserve(xi->size());
    for (long long v : *xi) out.emplace_back(v);
    return out;
}

py::dict run_py(const std::string& command, const std::string& input_path,
                const std::optional<std::vector<long long>>& xi, int degree_cap) {
    const RunResult result = run_command(command, input_path, to_xi(xi), degree_cap);
    py::dict out;
    out["exit_code"] = result.exit_code;
    out["report"] = py::module_::import("json").attr("loads")(result.report.dump());
    out["text"] = result.text;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact localization checks for torus fixed-point data";

    m.def("run", &run_py,
          py::arg("command"), py::arg("input_path"),
          py::arg("xi") = std::nullopt, py::arg("degree_cap") = 6,
          "Run one command (classes, relations, check, verify, betti, "
          "integrate) on an input document. Returns a dict with exit_code, "
          "the JSON report, and the text rendering. Exit codes: 0 success, "
          "1 membership/verification failure, 2 validation error.");

    m.def("digest", [](const std::string& data) { return fnv1a_digest(data); },
          py::arg("data"),
          "FNV-1a digest of a byte string, as used for report input_digest.");

    m.attr("commands") = std::vector<std::string>{
        "classes", "relations", "check", "verify", "betti", "integrate"};
}
