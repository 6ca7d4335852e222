#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "matgor/inverse_system.hpp"
#include "matgor/io.hpp"
#include "matgor/polynomial.hpp"
#include "matgor/report.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Specs and results cross the boundary as JSON text; the Python side parses them.
json spec_of(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw matgor::InputError(std::string("invalid matroid JSON: ") + e.what());
  }
}

matgor::RunOptions options(unsigned seed, bool big) {
  matgor::RunOptions o;
  o.seed = seed;
  o.big = big;
  return o;
}

std::string run_check(const std::string& spec_text, const std::string& check, unsigned seed, bool big,
                      const std::string& method, const std::string& ideal) {
  const json spec = spec_of(spec_text);
  const matgor::Matroid m = matgor::matroid_from_json(spec);
  const auto e = matgor::expectations_for(m, spec);
  const auto o = options(seed, big);
  matgor::CheckResult r;
  if (check == "check-axioms") r = matgor::check_axioms(m);
  else if (check == "algebra") r = matgor::check_algebra(m, e);
  else if (check == "ugb") r = matgor::check_ugb(m, o, e);
  else if (check == "lefschetz") r = matgor::check_lefschetz(m, std::nullopt, method.empty() ? "both" : method, ideal.empty() ? "ann" : ideal, e);
  else if (check == "sperner") r = matgor::check_sperner(m, method.empty() ? "both" : method, o, e);
  else if (check == "lattice") r = matgor::check_lattice(m, e);
  else if (check == "fan") r = matgor::check_fan(m, ideal.empty() ? "jm" : ideal, o, e);
  else if (check == "tropical") r = matgor::check_tropical(m, o, e);
  else throw matgor::InputError("unknown check " + check);
  return r.flat().dump();
}

}  // namespace

PYBIND11_MODULE(_matgor, mod) {
  mod.doc() = "Matroid Gorenstein algebras, lattices of flats and Groebner fans";

  // Most derived last: pybind11 tries translators in reverse order.
  auto& base = py::register_exception<matgor::Error>(mod, "MatgorError");
  py::register_exception<matgor::GuardExceeded>(mod, "GuardExceeded", base.ptr());
  py::register_exception<matgor::InputError>(mod, "InputError", py::make_tuple(base, py::handle(PyExc_ValueError)));

  mod.attr("__version__") = matgor::kToolVersion;

  mod.def("builtin_spec", [](const std::string& name) { return matgor::builtin_spec(name).dump(); },
          py::arg("name"));
  mod.def("canonical", [](const std::string& spec) {
    return matgor::matroid_to_json(matgor::matroid_from_json(spec_of(spec))).dump();
  }, py::arg("spec"));

  mod.def("hilbert", [](const std::string& spec) {
    const auto m = matgor::matroid_from_json(spec_of(spec));
    return std::make_pair(matgor::ann_hilbert(matgor::phi(m), m.size()), matgor::jm_hilbert(m));
  }, py::arg("spec"), "(Ann Phi_M, J_M) Hilbert vectors");

  mod.def("phi", [](const std::string& spec) {
    return matgor::to_string(matgor::phi(matgor::matroid_from_json(spec_of(spec))));
  }, py::arg("spec"));

  mod.def("normalize_poly", [](const std::string& text) {
    return matgor::to_string(matgor::parse_square_free(text));
  }, py::arg("text"), "parse and print a multilinear polynomial");

  mod.def("run_check", &run_check, py::arg("spec"), py::arg("check"), py::arg("seed") = 1, py::arg("big") = false,
          py::arg("method") = "", py::arg("ideal") = "");

  mod.def("report_all", [](const std::string& spec_text, unsigned seed, bool big) {
    const json spec = spec_of(spec_text);
    const auto m = matgor::matroid_from_json(spec);
    bool pass = false;
    auto report = matgor::report_all(m, spec, options(seed, big), pass);
    return report.dump();
  }, py::arg("spec"), py::arg("seed") = 1, py::arg("big") = false);
}
