#include "alcove/spherical.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace alcove;
using namespace alcove::spherical;

namespace {

Catalog catalog_or_default(const std::optional<std::string>& path) {
    return load_catalog(path ? *path : default_catalog_path());
}

const Example& find_example(const std::string& name) {
    static std::vector<Example> all = builtin_examples();
    for (auto& e : all)
        if (e.name == name) return e;
    throw Error("UnknownExample", name);
}

}  // namespace

PYBIND11_MODULE(_alcove, m) {
    m.doc() = "Exact verification of integral pairs in alcoves";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, (e.kind + ": " + e.what()).c_str());
        }
    });

    m.def("default_catalog_path", &default_catalog_path);
    m.def(
        "check_json",
        [](const std::string& pair_text, std::optional<std::string> catalog) {
            return report_json(check_pair(parse_pair(pair_text), catalog_or_default(catalog)));
        },
        py::arg("pair_text"), py::arg("catalog") = py::none());
    m.def(
        "check_text",
        [](const std::string& pair_text, std::optional<std::string> catalog) {
            return report_text(check_pair(parse_pair(pair_text), catalog_or_default(catalog)));
        },
        py::arg("pair_text"), py::arg("catalog") = py::none());
    m.def("pair_json", [](const std::string& pair_text) { return pair_json(parse_pair(pair_text)); });
    m.def("catalog_json", [](std::optional<std::string> path) { return catalog_json(catalog_or_default(path)); },
          py::arg("path") = py::none());
    m.def("example_names", [] {
        std::vector<std::string> out;
        for (auto& e : builtin_examples()) out.push_back(e.name);
        return out;
    });
    m.def("example_pair", [](const std::string& name) { return pair_text(find_example(name).pair); });
    m.def(
        "run_example",
        [](const std::string& name, std::optional<std::string> catalog) {
            ExampleOutcome o = run_example(find_example(name), catalog_or_default(catalog));
            return py::make_tuple(o.pass, o.detail);
        },
        py::arg("name"), py::arg("catalog") = py::none());
    m.def("root_system", [](const std::string& spec) {
        roots::AffineRootSystem s = roots::build(roots::parse_factor(spec));
        std::vector<std::string> simple;
        for (auto& f : s.simple_roots()) simple.push_back(f.str());
        py::dict d;
        d["type"] = s.type_name();
        d["simple_roots"] = simple;
        d["labels"] = s.label_vector();
        return d;
    });
}
