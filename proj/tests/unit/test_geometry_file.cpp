#include <doctest.h>

#include <string>

#include "curvlab/geometry_file.hpp"
#include "curvlab/runner.hpp"
#include "support.hpp"

using namespace curvlab;

namespace {

const std::string kData = CURVLAB_DATA_DIR;

const char* kSphere = R"({
  "name": "s2xr2",
  "coordinates": ["theta", "phi", "z", "w"],
  "periodic": ["phi"],
  "parameters": {"a": 2},
  "guards": ["0 < theta < pi"],
  "metric": [
    ["a^2", 0, 0, 0],
    [0, "a^2*sin(theta)^2", 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1]
  ],
  "region": {"theta": [0.1, 3.0], "phi": [0, 6.28], "z": [-1, 1], "w": [-1, 1]}
})";

ParseError error_of(const std::string& text) {
  try {
    parse_geometry_json(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("inline geometry builds a working entry") {
  const GeometryEntry e = parse_geometry_json(kSphere);
  CHECK(e.name == "s2xr2");
  CHECK(e.parameter("a") == 2.0);
  CHECK(e.metric.chart.periodic[1]);
  CHECK_FALSE(e.metric.chart.point({0.0, 1.0, 0.0, 0.0}).valid);
  const ChartPoint p = e.metric.chart.point({1.0, 0.5, 0.0, 0.0});
  const Mat4 g = values(metric_at(e.metric, p));
  CHECK(g[1][1] == doctest::Approx(4.0 * std::pow(std::sin(1.0), 2)));
  CHECK(e.default_checks == std::vector<std::string>{"curvature"});
}

TEST_CASE("parameter overrides replace file defaults") {
  const GeometryEntry e = parse_geometry_json(kSphere, {{"a", 3.0}});
  const Mat4 g = values(metric_at(e.metric, e.metric.chart.point({1.0, 0.5, 0.0, 0.0})));
  CHECK(g[0][0] == doctest::Approx(9.0));
  CHECK_THROWS_AS(parse_geometry_json(kSphere, {{"b", 1.0}}), std::invalid_argument);
}

TEST_CASE("expression errors carry the file position") {
  const std::string bad = replace(kSphere, "\"a^2*sin(theta)^2\"", "\"a^2*si n(theta)^2\"");
  const ParseError e = error_of(bad);
  CHECK(e.line() == 9);
  CHECK(e.column() == 14);
  CHECK(std::string(e.what()).find("unknown identifier 'si'") != std::string::npos);
}

TEST_CASE("JSON syntax errors carry the file position") {
  const std::string bad = replace(kSphere, "\"periodic\": [\"phi\"],", "\"periodic\": [\"phi\"]");
  const ParseError e = error_of(bad);
  CHECK(e.line() == 5);
  CHECK(e.column() >= 1);
}

TEST_CASE("schema violations are rejected") {
  CHECK(error_of(replace(kSphere, "\"guards\": [\"0 < theta < pi\"],", "\"guards\": [\"theta + 1\"],")).line() == 6);
  CHECK_THROWS_AS(parse_geometry_json(replace(kSphere, "[0, 0, 1, 0],", "[0, \"z\", 1, 0],")), ParseError);
  CHECK_THROWS_AS(parse_geometry_json(replace(kSphere, "\"w\": [-1, 1]", "\"w\": [1, -1]")), ParseError);
  CHECK_THROWS_AS(parse_geometry_json(replace(kSphere, ", \"w\": [-1, 1]", "")), ParseError);
  CHECK_THROWS_AS(parse_geometry_json(replace(kSphere, "\"w\"]", "\"w\", \"v\"]")), ParseError);
  CHECK_THROWS_AS(load_geometry_file(kData + "/does_not_exist.json"), ParseError);
}

TEST_CASE("flat R^4 file passes the Kahler suite") {
  const GeometryEntry e = load_geometry_file(kData + "/flat_r4.json");
  RunConfig cfg;
  cfg.samples = 200;
  cfg.checks = {"kahler"};
  const Report r = run_checks(e, cfg);
  CHECK(r.records.size() == 4);
  CHECK(exit_code(r) == 0);
  CHECK(r.summary().pass == static_cast<int>(r.records.size()));
}

TEST_CASE("Kerr file reproduces the built-in verdicts") {
  const GeometryEntry file = load_geometry_file(kData + "/kerr_euclidean.json");
  const GeometryEntry builtin = kerr_euclidean();
  RunConfig cfg;
  cfg.samples = 300;
  const Report a = run_checks(file, cfg);
  const Report b = run_checks(builtin, cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    INFO(a.records[i].check);
    CHECK(a.records[i].check == b.records[i].check);
    CHECK(a.records[i].verdict == b.records[i].verdict);
    CHECK(a.records[i].claim_ref == b.records[i].claim_ref);
  }
  // Same chart: the fields agree pointwise.
  for (const auto& p : testing::sample(builtin, 100)) {
    const ChartPoint q = file.metric.chart.point(p.coords);
    REQUIRE(q.valid);
    const Mat4 g1 = values(metric_at(file.metric, q)), g2 = values(metric_at(builtin.metric, p));
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) CHECK(std::abs(g1[i][j] - g2[i][j]) < 1e-12 * std::max(1.0, std::abs(g2[i][j])));
  }
}
