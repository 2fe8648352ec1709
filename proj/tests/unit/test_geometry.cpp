#include <doctest.h>

#include <cmath>
#include <numbers>

#include "curvlab/catalog.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/metric.hpp"
#include "support.hpp"

using namespace curvlab;

namespace {

// S^2(radius) x R^2 on (theta, phi, z, w).
MetricField sphere_times_plane(double radius) {
  Chart c;
  c.id = "s2xr2";
  c.coordinate_names = {"theta", "phi", "z", "w"};
  c.guards.push_back(Guard{"0 < theta < pi", [](const Point4& x) { return x[0] > 0 && x[0] < std::numbers::pi; }});
  return MetricField{"s2xr2", c, Signature::riemannian, Orientation{}, [radius](const Coords& x) {
                       Mat4J g;
                       g[0][0] = Jet2(radius * radius);
                       g[1][1] = radius * radius * square(sin(x[0]));
                       g[2][2] = g[3][3] = Jet2(1.0);
                       return g;
                     }};
}

std::vector<GeometryEntry> all_entries() {
  std::vector<GeometryEntry> out;
  for (const auto& name : geometry_names()) out.push_back(make_geometry(name));
  return out;
}

}  // namespace

TEST_CASE("chart guards reject points outside the domain") {
  const GeometryEntry tn = taub_nut();
  const Chart& c = tn.metric.chart;
  CHECK(c.point({1.0, 1.0, 0.0, 0.0}).valid);
  CHECK_FALSE(c.point({-1.0, 1.0, 0.0, 0.0}).valid);
  CHECK_FALSE(c.point({1.0, 0.0, 0.0, 0.0}).valid);
  REQUIRE(c.violated_guard({1.0, 4.0, 0.0, 0.0}).has_value());
  CHECK(c.violated_guard({1.0, 4.0, 0.0, 0.0})->find("theta") != std::string::npos);
  CHECK_THROWS_AS(c.require_valid(c.point({1.0, 0.0, 0.0, 0.0})), DomainError);
  ChartPoint foreign = make_geometry("kerr").metric.chart.point({5.0, 1.0, 0.0, 0.0});
  CHECK_THROWS_AS(c.require_valid(foreign), ContractViolation);
  CHECK_THROWS_AS(metric_at(tn.metric, c.point({0.0, 1.0, 0.0, 0.0})), DomainError);
}

TEST_CASE("guards hold at the boundary fuzz points of every sampling region") {
  for (const auto& e : all_entries()) {
    const auto pts = testing::sample(e, 200, 99);
    for (const auto& p : pts) {
      REQUIRE(p.valid);
      CHECK_NOTHROW(curvature(e.metric, p));
    }
  }
}

TEST_CASE("matrix inverse and determinant") {
  const Mat4 a{{{4, 1, 0, 0}, {1, 3, 0, 0.5}, {0, 0, 2, 0}, {0, 0.5, 0, 1}}};
  const Mat4 prod = multiply(a, invert(a));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) CHECK(prod[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));
  CHECK(determinant(a) == doctest::Approx(2.0 * (4.0 * (3.0 - 0.25) - 1.0)));
  Mat4 singular = a;
  singular[3] = singular[2];
  CHECK_THROWS_AS(invert(singular), SingularityError);
}

TEST_CASE("Christoffel symbols match a finite-difference reimplementation on every geometry") {
  for (const auto& e : all_entries()) {
    double worst = 0.0;
    for (const auto& p : testing::sample(e, 100, 5)) {
      const Christoffel exact = christoffel(e.metric, p);
      const Christoffel fd = testing::christoffel_fd(e.metric, p.coords);
      double scale = 1.0;
      for (const auto& a : exact)
        for (const auto& b : a)
          for (double v : b) scale = std::max(scale, std::abs(v));
      for (int k = 0; k < kDim; ++k)
        for (int i = 0; i < kDim; ++i)
          for (int j = 0; j < kDim; ++j) worst = std::max(worst, std::abs(exact[k][i][j] - fd[k][i][j]) / scale);
    }
    INFO(e.name << " worst relative deviation " << worst);
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("curvature of S^2 x R^2 has the documented sign") {
  const MetricField g = sphere_times_plane(2.0);
  const ChartPoint p = g.chart.point({1.1, 0.4, 0.0, 0.0});
  const CurvatureBundle c = curvature(g, p);
  const double s2 = std::pow(std::sin(1.1), 2);
  // g(R(d_theta, d_phi) d_phi, d_theta) = K |d_theta ^ d_phi|^2 with K = 1/4.
  CHECK(c.riemann_lowered(0, 1, 0, 1) == doctest::Approx(0.25 * 4.0 * 4.0 * s2));
  CHECK(c.ricci[0][0] == doctest::Approx(1.0));
  CHECK(c.ricci[1][1] == doctest::Approx(s2));
  CHECK(c.scalar == doctest::Approx(0.5));
  CHECK(riemann_symmetry_residual(c) < 1e-12);
  CHECK(ricci_residual(c) > 0.1);
}

TEST_CASE("Riemann symmetries and trace-free trace hold on all geometries") {
  for (const auto& e : all_entries()) {
    for (const auto& p : testing::sample(e, 50, 3)) {
      const CurvatureBundle c = curvature(e.metric, p);
      CHECK(riemann_symmetry_residual(c) < 1e-9);
      CHECK(tracefree_trace_residual(c) < 1e-9);
    }
  }
}

TEST_CASE("Ricci-flat entries are Ricci flat, the rescaled Kerr is not Einstein") {
  for (const char* name : {"taub-nut", "taub-nut-r3", "kerr", "kerr-lorentzian"}) {
    const GeometryEntry e = make_geometry(name);
    double worst = 0.0;
    for (const auto& p : testing::sample(e, 100)) worst = std::max(worst, ricci_residual(curvature(e.metric, p)));
    INFO(name);
    CHECK(worst < 1e-8);
  }
  const GeometryEntry k = kerr_conformal();
  double least = 1e300;
  for (const auto& p : testing::sample(k, 100)) least = std::min(least, tracefree_ricci_residual(curvature(k.metric, p)));
  CHECK(least > 1e-6);
}

TEST_CASE("flat space has vanishing curvature scale") {
  const GeometryEntry e = flat();
  const CurvatureBundle c = curvature(e.metric, e.metric.chart.point({0.1, 0.2, 0.3, 0.4}));
  CHECK(c.riemann.max_abs() == 0.0);
  CHECK(c.scale() == doctest::Approx(1e-30));
}

TEST_CASE("signature guard refuses Lorentzian metrics") {
  CHECK(signature_guard(kerr_euclidean().metric).allowed);
  const SignatureCheck s = signature_guard(kerr_lorentzian().metric);
  CHECK_FALSE(s.allowed);
  CHECK_FALSE(s.reason.empty());
}

TEST_CASE("positive definiteness by leading minors") {
  CHECK(positive_definite(identity4()));
  Mat4 m = identity4();
  m[3][3] = -1.0;
  CHECK_FALSE(positive_definite(m));
  CHECK(min_normalized_minor(m) < 0.0);
}

TEST_CASE("orientation flip swaps the last labels and the sign") {
  const Orientation o;
  const Orientation f = o.flipped();
  CHECK(f.sign == -1);
  CHECK(f.labels[2] == "e4");
  CHECK(f.labels[3] == "e3");
}
