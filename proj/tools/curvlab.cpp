#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvlab/catalog.hpp"
#include "curvlab/geometry_file.hpp"
#include "curvlab/report.hpp"
#include "curvlab/runner.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kFault = 3;

struct Options {
  std::string geometry;
  std::string path;
  std::vector<std::string> checks{"all"};
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::vector<std::string> tol;
  std::vector<std::string> region;
  std::vector<std::string> params;
  std::string format = "text";
  int workers = 0;
};

std::pair<std::string, std::string> split_once(const std::string& s, char sep, const std::string& flag) {
  const auto at = s.find(sep);
  if (at == std::string::npos || at == 0 || at + 1 == s.size())
    throw std::invalid_argument(flag + " expects " + (sep == '=' ? "key=value" : "lo:hi") + ", got '" + s + "'");
  return {s.substr(0, at), s.substr(at + 1)};
}

double to_number(const std::string& s, const std::string& what) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw std::invalid_argument(what + ": '" + s + "' is not a number");
  return v;
}

curvlab::ParamOverrides parse_params(const std::vector<std::string>& items) {
  curvlab::ParamOverrides out;
  for (const auto& it : items) {
    const auto [k, v] = split_once(it, '=', "--params");
    out[k] = to_number(v, "--params " + k);
  }
  return out;
}

curvlab::RunConfig make_config(const Options& o) {
  curvlab::RunConfig c;
  c.checks = o.checks;
  c.samples = o.samples;
  c.seed = o.seed;
  c.workers = o.workers;
  for (const auto& it : o.tol) {
    const auto [k, v] = split_once(it, '=', "--tol");
    c.tolerances[k] = to_number(v, "--tol " + k);
  }
  for (const auto& it : o.region) {
    const auto [k, range] = split_once(it, '=', "--region");
    const auto [lo, hi] = split_once(range, ':', "--region " + k);
    c.region[k] = {to_number(lo, "--region " + k), to_number(hi, "--region " + k)};
  }
  return c;
}

int run_and_print(const curvlab::GeometryEntry& entry, const Options& o) {
  const curvlab::RunConfig config = make_config(o);
  curvlab::resolve_checks(entry, config.checks);
  curvlab::resolve_tolerances(config.tolerances);
  curvlab::resolve_region(entry, config);
  const curvlab::Report report = curvlab::run_checks(entry, config);
  std::cout << (o.format == "json" ? curvlab::report_to_json(report) : curvlab::report_to_text(report));
  return curvlab::exit_code(report);
}

void describe(const curvlab::GeometryEntry& e) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? std::string("none") : s;
  };
  std::cout << e.name << ": " << e.title << "\n";
  std::cout << "  signature: " << curvlab::to_string(e.metric.signature) << "\n";
  std::cout << "  coordinates:";
  for (int i = 0; i < curvlab::kDim; ++i) {
    std::cout << " " << e.metric.chart.coordinate_names[i];
    if (e.metric.chart.periodic[i]) std::cout << " (periodic)";
  }
  std::cout << "\n  parameters:";
  if (e.parameters.empty()) std::cout << " none";
  for (const auto& [k, v] : e.parameters) std::cout << " " << k << "=" << v;
  std::cout << "\n  guards:\n";
  for (const auto& g : e.metric.chart.guards) std::cout << "    " << g.description << "\n";
  std::cout << "  default region:\n";
  for (int i = 0; i < curvlab::kDim; ++i)
    std::cout << "    " << e.metric.chart.coordinate_names[i] << " in [" << e.region[i].first << ", "
              << e.region[i].second << "]\n";
  std::vector<std::string> frames, forms, acs;
  for (const auto& f : e.frames) frames.push_back(f.name);
  for (const auto& f : e.forms) forms.push_back(f.name + " (" + std::to_string(f.degree) + "-form)");
  for (const auto& j : e.acs) acs.push_back(j.label);
  std::cout << "  frames: " << join(frames) << "\n";
  std::cout << "  forms: " << join(forms) << "\n";
  std::cout << "  complex structures: " << join(acs) << "\n";
  std::cout << "  expected claims: " << join(e.expected) << "\n";
  std::cout << "  default checks: " << join(e.default_checks) << "\n";
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--checks", o.checks, "Check groups (comma separated): curvature, hermitian, kahler, hyper_kahler, "
                                        "lck, weyl, isometry, structure_eqs, all")
      ->delimiter(',');
  cmd->add_option("--samples", o.samples, "Number of sample points")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--tol", o.tol, "Tolerance override KEY=VAL (repeatable)");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--region", o.region, "Sampling bounds key=lo:hi (repeatable)");
  cmd->add_option("--params", o.params, "Parameter override key=val (repeatable)");
  cmd->add_option("--workers", o.workers, "Worker threads (0 = all cores); results do not depend on it")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvlab: pointwise verification of Kahler-type structures on 4-manifolds"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run check groups on a built-in geometry");
  verify->add_option("geometry", o.geometry, "Geometry name (see `list`)")->required();
  add_run_flags(verify, o);

  auto* list = app.add_subcommand("list", "List built-in geometries");

  auto* desc = app.add_subcommand("describe", "Describe a built-in geometry");
  desc->add_option("geometry", o.geometry, "Geometry name")->required();
  desc->add_option("--params", o.params, "Parameter override key=val (repeatable)");

  auto* file = app.add_subcommand("check-file", "Run check groups on a geometry described in a JSON file");
  file->add_option("path", o.path, "Geometry file")->required();
  add_run_flags(file, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : curvlab::geometry_names()) {
        const auto e = curvlab::make_geometry(name);
        std::cout << name << "  " << e.title << "\n";
      }
      return 0;
    }
    if (desc->parsed()) {
      describe(curvlab::make_geometry(o.geometry, parse_params(o.params)));
      return 0;
    }
    if (verify->parsed()) return run_and_print(curvlab::make_geometry(o.geometry, parse_params(o.params)), o);
    if (file->parsed()) return run_and_print(curvlab::load_geometry_file(o.path, parse_params(o.params)), o);
  } catch (const curvlab::ParseError& e) {
    std::cerr << "error: " << (o.path.empty() ? "" : o.path + ":");
    if (e.line() > 0) std::cerr << e.line() << ":" << e.column() << ": ";
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const curvlab::ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFault;
  }
  return kUsageError;
}
