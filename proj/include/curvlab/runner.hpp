#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/catalog.hpp"
#include "curvlab/verdict.hpp"

namespace curvlab {

struct RunConfig {
  /// Check groups; "all" expands to the entry's default checks.
  std::vector<std::string> checks{"all"};
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  /// Sampling bounds by coordinate name, replacing the entry's region.
  std::map<std::string, std::pair<double, double>> region;
  /// Tolerance overrides by key (see default_tolerances()).
  std::map<std::string, double> tolerances;
  /// Worker threads; 0 uses the hardware concurrency. Never changes results.
  int workers = 0;
};

struct Record {
  std::string check;
  std::string claim_ref;  // an expected claim of the entry, or "extra"
  Status verdict = Status::pass;
  double max_residual = 0.0;
  std::optional<Point4> argmax_point;
  double tolerance = 0.0;
  std::string note;
};

struct Summary {
  int pass = 0, fail = 0, refused = 0, inapplicable = 0, fault = 0;
  int total() const noexcept { return pass + fail + refused + inapplicable + fault; }
};

struct Report {
  std::string schema = "curvlab-report/1";
  std::string geometry;
  ParameterList params;
  std::vector<std::pair<std::string, std::string>> conventions;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Record> records;

  Summary summary() const;
};

/// Equality with NaN residuals comparing equal to each other.
bool operator==(const Record& a, const Record& b);
bool operator==(const Report& a, const Report& b);

/// Check groups accepted by RunConfig::checks, excluding "all".
const std::vector<std::string>& check_groups();

/// Documented default tolerance per key.
const std::map<std::string, double>& default_tolerances();

/// Conventions in effect, printed in every report.
std::vector<std::pair<std::string, std::string>> conventions_block(const GeometryEntry& entry);

/// Expands "all", removes duplicates and validates names; throws
/// std::invalid_argument on an unknown group.
std::vector<std::string> resolve_checks(const GeometryEntry& entry, const std::vector<std::string>& requested);

/// Validates overrides (known key, finite and positive) and merges them with
/// the defaults; throws std::invalid_argument otherwise.
std::map<std::string, double> resolve_tolerances(const std::map<std::string, double>& overrides);

/// Region of the entry with the config's overrides applied; throws std::invalid_argument on a bad key or bounds.
Region resolve_region(const GeometryEntry& entry, const RunConfig& config);

/// Runs the requested check groups over the seeded sample.
Report run_checks(const GeometryEntry& entry, const RunConfig& config);

/// 3 when any record is a fault, else 1 when any record failed, else 0.
int exit_code(const Report& report);

}  // namespace curvlab
