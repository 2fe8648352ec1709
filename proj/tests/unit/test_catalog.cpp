#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "curvlab/catalog.hpp"
#include "curvlab/complexstruct.hpp"
#include "curvlab/frame.hpp"
#include "support.hpp"

using namespace curvlab;

namespace {

// Taub-NUT in the r = rho + m form written with plain doubles:
// (r+m)/(4(r-m)) dr^2 + (r^2-m^2)(s1^2+s2^2) + 4m^2 (r-m)/(r+m) s3^2.
Mat4 taub_nut_r_form(double m, double r, double th, double psi) {
  const double s1[4] = {0, 0.5 * std::sin(psi), -0.5 * std::sin(th) * std::cos(psi), 0};
  const double s2[4] = {0, 0.5 * std::cos(psi), 0.5 * std::sin(th) * std::sin(psi), 0};
  const double s3[4] = {0, 0, 0.5 * std::cos(th), 0.5};
  Mat4 g{};
  g[0][0] = (r + m) / (4 * (r - m));
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      g[a][b] += (r * r - m * m) * (s1[a] * s1[b] + s2[a] * s2[b]) + 4 * m * m * (r - m) / (r + m) * s3[a] * s3[b];
  return g;
}

}  // namespace

TEST_CASE("catalog lists its entries and validates parameters") {
  const auto& names = geometry_names();
  CHECK(names.size() == 6);
  for (const auto& n : names) CHECK(make_geometry(n).name == n);
  CHECK_THROWS_AS(make_geometry("schwarzschild"), std::invalid_argument);
  CHECK_THROWS_AS(make_geometry("kerr", {{"q", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_geometry("kerr", {{"alpha", 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_geometry("taub-nut", {{"m", -1.0}}), std::invalid_argument);
  CHECK(make_geometry("kerr", {{"M", 2.0}}).parameter("M") == 2.0);
}

TEST_CASE("default parameters and regions") {
  const GeometryEntry tn = taub_nut();
  CHECK(tn.parameter("m") == 0.5);
  CHECK(tn.region[0].first == 0.1);
  CHECK(tn.region[3].second == doctest::Approx(4 * std::numbers::pi));
  const GeometryEntry k = kerr_euclidean();
  CHECK(k.parameter("M") == 1.0);
  CHECK(k.parameter("alpha") == 0.5);
  CHECK(k.region[0].first == doctest::Approx(1.05 * kerr_euclidean_horizon(1.0, 0.5)));
  CHECK(kerr_euclidean_horizon(1.0, 0.5) == doctest::Approx(1.0 + std::sqrt(1.25)));
}

TEST_CASE("every expected claim is covered by a default check group") {
  for (const auto& n : geometry_names()) {
    const GeometryEntry e = make_geometry(n);
    CHECK_FALSE(e.expected.empty());
    CHECK_FALSE(e.default_checks.empty());
  }
}

TEST_CASE("Taub-NUT m-form matches the r = rho + m form") {
  const GeometryEntry e = taub_nut(0.5);
  for (const auto& p : testing::sample(e, 100)) {
    const Mat4 got = values(metric_at(e.metric, p));
    const Mat4 want = taub_nut_r_form(0.5, p.coords[0] + 0.5, p.coords[1], p.coords[3]);
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) CHECK(std::abs(got[a][b] - want[a][b]) < 1e-10 * std::max(1.0, std::abs(want[a][b])));
  }
}

TEST_CASE("catalog frames are orthonormal and dual to their coframes") {
  for (const auto& n : geometry_names()) {
    const GeometryEntry e = make_geometry(n);
    if (!e.frame()) continue;
    for (const auto& p : testing::sample(e, 100)) {
      CHECK(orthonormality_residual(*e.frame(), e.metric, p) < 1e-9);
      CHECK(duality_residual(*e.frame(), p) < 1e-9);
      CHECK(coframe_metric_residual(*e.frame(), e.metric, p) < 1e-9);
    }
  }
}

TEST_CASE("Taub-NUT charts are isometric") {
  const GeometryEntry r3 = taub_nut_r3();
  const GeometryEntry polar = taub_nut(0.5);
  double worst = 0.0, roundtrip = 0.0, hodge = 0.0;
  for (const auto& p : testing::sample(r3, 500)) {
    worst = std::max(worst, isometry_pullback_residual(r3, polar, p));
    const ChartPoint q = taub_nut_isometry(p, polar);
    CHECK(q.valid);
    const ChartPoint back = taub_nut_isometry_inverse(q, r3);
    for (int i = 0; i < kDim; ++i)
      roundtrip = std::max(roundtrip, std::abs(back.coords[i] - p.coords[i]) / std::max(1.0, std::abs(p.coords[i])));
    hodge = std::max(hodge, theta_hodge_residual(p));
  }
  CHECK(worst < 1e-8);
  CHECK(roundtrip < 1e-12);
  CHECK(hodge < 1e-9);
  CHECK_THROWS_AS(taub_nut_isometry(r3.metric.chart.point({0.0, 0.0, 1.0, 0.0}), polar), DomainError);
}

TEST_CASE("perturbed structure keeps the chart and squares to minus one") {
  const GeometryEntry e = flat();
  const AlmostComplexField pj = perturbed_acs(e.acs.front(), 0.5);
  CHECK(pj.chart_id == "flat");
  for (const auto& p : testing::sample(e, 50)) {
    const Mat4 j = values(acs_at(pj, p));
    CHECK(acs_residual(j) < 1e-14);
    CHECK(std::abs(j[0][1] - values(acs_at(e.acs.front(), p))[0][1]) > 0.0);
  }
}
