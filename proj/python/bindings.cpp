#include "bentice/asm.hpp"
#include "bentice/character.hpp"
#include "bentice/cli.hpp"
#include "bentice/identities.hpp"
#include "bentice/state.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace bentice;

namespace {

WeightScheme scheme(const std::string& name, Family f, int n) {
    if (name == "generic") return make_generic(f, n);
    if (name == "deformation") return make_deformation(f, n);
    if (name == "okada") return make_okada(f, n);
    if (name == "character") return make_character(f, n);
    if (name == "tokuyama") {
        if (f != Family::A) throw InputError("tokuyama weights are for family A");
        return make_tokuyama(n);
    }
    throw InputError("unknown scheme '" + name + "'");
}

Poly partition(const std::string& family, const std::string& lambda, const std::string& name, int workers) {
    Family f = parse_family(family);
    auto l = StrictPartition::parse(lambda);
    return partition_function(build_model(f, l), scheme(name, f, l.n()), workers);
}

}  // namespace

PYBIND11_MODULE(_bentice, m) {
    m.doc() = "Exact partition functions of bent six-vertex models";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a command-line invocation; returns (exit code, stdout, stderr).");

    m.def("families", [] {
        std::vector<std::string> out;
        for (auto f : all_families()) out.push_back(family_name(f));
        return out;
    });

    m.def(
        "count_states",
        [](const std::string& family, const std::string& lambda) {
            return enumerate_states(build_model(parse_family(family), StrictPartition::parse(lambda))).size();
        },
        py::arg("family"), py::arg("lambda_"));

    m.def(
        "partition_function",
        [](const std::string& family, const std::string& lambda, const std::string& name, int workers) {
            return to_text(partition(family, lambda, name, workers));
        },
        py::arg("family"), py::arg("lambda_"), py::arg("scheme") = "generic", py::arg("workers") = 1);

    m.def(
        "partition_function_latex",
        [](const std::string& family, const std::string& lambda, const std::string& name) {
            return to_latex(partition(family, lambda, name, 1));
        },
        py::arg("family"), py::arg("lambda_"), py::arg("scheme") = "generic");

    m.def(
        "character_theorem",
        [](const std::string& family, const std::string& lambda) {
            return character_theorem_check(parse_family(family), StrictPartition::parse(lambda)).pass;
        },
        py::arg("family"), py::arg("lambda_"));

    m.def(
        "okada_product",
        [](const std::string& family, int n) { return okada_product_check(parse_family(family), n).pass; },
        py::arg("family"), py::arg("n"));

    m.def(
        "half_turn_asm_count", [](int size) { return enumerate_asms(size, true).size(); }, py::arg("size"));
}
