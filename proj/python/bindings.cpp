#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kcrystal/document.hpp"
#include "kcrystal/render.hpp"

namespace py = pybind11;
using namespace kcrystal;

namespace {

std::string text(const OutputDocument& d) { return render_document(d); }

Mode mode_of(const std::string& s) { return parse_mode(s); }

}  // namespace

PYBIND11_MODULE(_kcrystal, m) {
  m.doc() = "Equivariant K-homology of the wallpaper groups (JSON interface)";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<NotFound>(m, "NotFound", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());

  m.def("group_names", &group_names);
  m.def("group_spec", [](const std::string& name) { return text(make_document(catalog(name))); });
  m.def("validate", [](const std::string& name) {
    return validate_cocycle(catalog(name)).problems;
  });
  m.def("conjugacy_classes",
        [](const std::string& name, const std::string& mode) {
          return text(make_document(enumerate_fc(catalog(name), mode_of(mode))));
        },
        py::arg("name"), py::arg("mode") = "plane");
  m.def("k_homology",
        [](const std::string& name, const std::string& mode, int N) {
          py::gil_scoped_release release;
          return text(make_document(k_homology(catalog(name), mode_of(mode), N)));
        },
        py::arg("name"), py::arg("mode") = "plane", py::arg("N") = 12);
  m.def("rational_ranks",
        [](const std::string& name, const std::string& mode) {
          return rationalize(k_homology(catalog(name), mode_of(mode)));
        },
        py::arg("name"), py::arg("mode") = "plane");
  m.def("verify",
        [](const std::string& name) {
          py::gil_scoped_release release;
          return text(make_document(verify_against_tables(name)));
        },
        py::arg("name") = "");
  m.def("render_svg", [](const std::string& name, int cells) { return render_svg(catalog(name), cells); },
        py::arg("name"), py::arg("cells") = 3);
  m.def("parse_document", [](const std::string& s) { return text(parse_document(s)); });
  m.attr("schema_version") = kSchemaVersion;
}
