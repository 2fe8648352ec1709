#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/catalog.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/expr.hpp"
#include "curvlab/geometry_file.hpp"
#include "curvlab/report.hpp"
#include "curvlab/runner.hpp"

namespace py = pybind11;

namespace {

curvlab::RunConfig make_config(std::vector<std::string> checks, std::size_t samples, std::uint64_t seed,
                               std::map<std::string, double> tolerances,
                               std::map<std::string, std::pair<double, double>> region, int workers) {
  curvlab::RunConfig cfg;
  cfg.checks = std::move(checks);
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.tolerances = std::move(tolerances);
  cfg.region = std::move(region);
  cfg.workers = workers;
  return cfg;
}

std::string emit(const curvlab::Report& r, const std::string& format) {
  if (format == "json") return curvlab::report_to_json(r);
  if (format == "text") return curvlab::report_to_text(r);
  throw std::invalid_argument("format must be 'json' or 'text'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "curvlab engine: curvature, complex structures and Kahler checks for four-dimensional metrics";

  // Leaked on purpose: the type must outlive the module's translator.
  static py::handle parse_error = py::exception<curvlab::ParseError>(m, "ParseError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const curvlab::ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_error)(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    } catch (const curvlab::DomainError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    } catch (const curvlab::ContractViolation& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("geometry_names", &curvlab::geometry_names, "Names of the built-in geometries");
  m.def("check_groups", &curvlab::check_groups, "Check groups accepted by verify");
  m.def("default_tolerances", &curvlab::default_tolerances, "Documented default tolerance per key");

  m.def(
      "describe",
      [](const std::string& name, const std::map<std::string, double>& params) {
        const curvlab::GeometryEntry e = curvlab::make_geometry(name, params);
        py::dict d;
        d["name"] = e.name;
        d["title"] = e.title;
        d["parameters"] = e.parameters;
        d["coordinates"] = e.metric.chart.coordinate_names;
        d["expected"] = e.expected;
        d["default_checks"] = e.default_checks;
        std::vector<std::string> labels;
        for (const auto& j : e.acs) labels.push_back(j.label);
        d["complex_structures"] = labels;
        return d;
      },
      py::arg("name"), py::arg("params") = std::map<std::string, double>{});

  m.def(
      "verify",
      [](const std::string& name, std::vector<std::string> checks, std::size_t samples, std::uint64_t seed,
         const std::map<std::string, double>& params, std::map<std::string, double> tolerances,
         std::map<std::string, std::pair<double, double>> region, int workers, const std::string& format) {
        const curvlab::GeometryEntry e = curvlab::make_geometry(name, params);
        const auto cfg = make_config(std::move(checks), samples, seed, std::move(tolerances), std::move(region), workers);
        curvlab::Report r;
        {
          py::gil_scoped_release release;
          r = curvlab::run_checks(e, cfg);
        }
        return std::make_pair(emit(r, format), curvlab::exit_code(r));
      },
      py::arg("name"), py::arg("checks") = std::vector<std::string>{"all"}, py::arg("samples") = 1000,
      py::arg("seed") = 42, py::arg("params") = std::map<std::string, double>{},
      py::arg("tolerances") = std::map<std::string, double>{},
      py::arg("region") = std::map<std::string, std::pair<double, double>>{}, py::arg("workers") = 0,
      py::arg("format") = "json", "Run check groups; returns (report text, exit code)");

  m.def(
      "check_file",
      [](const std::string& path, std::vector<std::string> checks, std::size_t samples, std::uint64_t seed,
         const std::map<std::string, double>& params, std::map<std::string, double> tolerances, int workers,
         const std::string& format) {
        const curvlab::GeometryEntry e = curvlab::load_geometry_file(path, params);
        const auto cfg = make_config(std::move(checks), samples, seed, std::move(tolerances), {}, workers);
        curvlab::Report r;
        {
          py::gil_scoped_release release;
          r = curvlab::run_checks(e, cfg);
        }
        return std::make_pair(emit(r, format), curvlab::exit_code(r));
      },
      py::arg("path"), py::arg("checks") = std::vector<std::string>{"all"}, py::arg("samples") = 1000,
      py::arg("seed") = 42, py::arg("params") = std::map<std::string, double>{},
      py::arg("tolerances") = std::map<std::string, double>{}, py::arg("workers") = 0, py::arg("format") = "json");

  m.def(
      "evaluate",
      [](const std::string& text, const std::array<std::string, 4>& coordinates, const std::array<double, 4>& point,
         const std::map<std::string, double>& constants) {
        const curvlab::Vocabulary v{coordinates, constants};
        return curvlab::parse_expression(text, v)(point);
      },
      py::arg("text"), py::arg("coordinates"), py::arg("point"),
      py::arg("constants") = std::map<std::string, double>{}, "Evaluate an expression of the geometry-file language");
}
