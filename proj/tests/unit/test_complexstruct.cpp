#include <doctest.h>

#include <cmath>

#include "curvlab/catalog.hpp"
#include "curvlab/complexstruct.hpp"
#include "curvlab/lck.hpp"
#include "support.hpp"

using namespace curvlab;

TEST_CASE("Lie bracket of coordinate fields vanishes, of scaled fields follows the Leibniz rule") {
  const GeometryEntry e = flat();
  const ChartPoint p = e.metric.chart.point({0.3, -0.2, 0.5, 0.1});
  const VectorField dx = coordinate_field("flat", 0), dy = coordinate_field("flat", 1);
  CHECK(max_abs(lie_bracket(dx, dy, p)) == 0.0);
  // [x d_y, d_x] = -d_y
  const ScalarField x0 = [](const Coords& x) { return x[0]; };
  const Vec4 b = lie_bracket(scaled(x0, dy), dx, p);
  CHECK(b[1] == doctest::Approx(-1.0));
  CHECK(b[0] == 0.0);
}

TEST_CASE("catalog complex structures square to minus the identity and are Hermitian") {
  for (const char* name : {"flat", "taub-nut", "kerr", "kerr-conformal"}) {
    const GeometryEntry e = make_geometry(name);
    const auto pts = testing::sample(e, 200);
    for (const auto& j : e.acs) {
      if (j.label.ends_with("_tilde")) continue;
      INFO(name << " " << j.label);
      CHECK(acs_check(j, pts).passed());
      CHECK(hermitian_check(e.metric, j, pts).passed());
      CHECK(integrability_verdict(j, e.metric, pts).passed());
    }
  }
}

TEST_CASE("Taub-NUT triple satisfies the quaternion relations, a sign flip breaks them") {
  const GeometryEntry e = taub_nut();
  const auto pts = testing::sample(e, 200);
  const auto& j1 = *e.find_acs("J1");
  const auto& j2 = *e.find_acs("J2");
  const auto& j3 = *e.find_acs("J3");
  const Verdict good = quaternion_check(j1, j2, j3, pts);
  CHECK(good.passed());
  CHECK(good.max_residual < 1e-12);
  const Verdict bad = quaternion_check(j1, j2, negated(j3), pts);
  CHECK(bad.status == Status::fail);
  CHECK(bad.max_residual > 0.5);
}

TEST_CASE("quaternion residuals on constant matrices") {
  // Left multiplication by i, j, k on H = R^4 acting on row vectors.
  const Mat4 i{{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}};
  const Mat4 j{{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}};
  const Mat4 k = multiply(transpose(i), transpose(j));
  const auto r = quaternion_residuals(i, j, transpose(k));
  for (double v : r) CHECK(v < 1e-15);
  Mat4 mk = transpose(k);
  for (auto& row : mk)
    for (double& v : row) v = -v;
  const auto s = quaternion_residuals(i, j, mk);
  CHECK(s[3] > 1.0);
}

TEST_CASE("perturbed complex structure is almost complex but not integrable") {
  const GeometryEntry e = flat();
  const AlmostComplexField pj = perturbed_acs(e.acs.front(), 0.3);
  const auto pts = testing::sample(e, 200);
  CHECK(acs_check(pj, pts).passed());
  const Verdict v = integrability_verdict(pj, e.metric, pts);
  CHECK(v.status == Status::fail);
  CHECK(v.max_residual > 1e-3);
  CHECK(v.has_argmax);
}

TEST_CASE("Nijenhuis tensor is tensorial") {
  const GeometryEntry e = flat();
  const AlmostComplexField pj = perturbed_acs(e.acs.front(), 0.3);
  const ScalarField f = [](const Coords& x) { return 1.0 + square(x[0]) + x[2]; };
  const ScalarField g = [](const Coords& x) { return exp(x[1] * x[3]); };
  for (const auto& p : testing::sample(e, 50)) {
    const Mat4 gv = values(metric_at(e.metric, p));
    CHECK(nijenhuis_tensoriality_residual(pj, coordinate_field("flat", 0), coordinate_field("flat", 2), f, g, p, gv) <
          1e-10);
  }
}

TEST_CASE("Kahler form and J round-trip through the metric") {
  for (const char* name : {"taub-nut", "kerr"}) {
    const GeometryEntry e = make_geometry(name);
    const AlmostComplexField& j = e.acs.front();
    for (const auto& p : testing::sample(e, 100)) {
      const OmegaResult o = omega_from_j(e.metric, j, p);
      CHECK(o.compatible);
      CHECK(o.symmetric_residual < 1e-12);
      const Mat4 back = j_from_omega(e.metric, o.omega, p);
      const Mat4 jv = values(acs_at(j, p));
      CHECK(max_abs(multiply(back, identity4())) > 0.0);
      double d = 0.0;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) d = std::max(d, std::abs(back[a][b] - jv[a][b]));
      CHECK(d / std::max(1.0, max_abs(jv)) < 1e-12);
    }
  }
}

TEST_CASE("Kerr: omega is not closed, the J built from the scaled form is not almost complex") {
  const GeometryEntry e = kerr_euclidean();
  const AlmostComplexField& j = *e.find_acs("J");
  const AlmostComplexField& jt = *e.find_acs("J_tilde");
  double least_kahler = 1e300, least_acs = 1e300;
  for (const auto& p : testing::sample(e, 200)) {
    least_kahler = std::min(least_kahler, kahler_closed_residual(e.metric, j, p));
    if (std::abs(p.coords[0] - 0.5 * std::cos(p.coords[1]) - 1.0) > 0.5)
      least_acs = std::min(least_acs, acs_residual(values(acs_at(jt, p))));
  }
  CHECK(least_kahler > 1e-4);
  CHECK(least_acs > 0.1);
}

TEST_CASE("Lorentzian metrics are refused") {
  const GeometryEntry e = kerr_lorentzian();
  const FrameField f = kerr_euclidean().frames.front();
  const AlmostComplexField j{"J", e.metric.chart.id, [](const Coords&) {
                               Mat4J m;
                               m[0][1] = Jet2(-1.0);
                               m[1][0] = Jet2(1.0);
                               m[2][3] = Jet2(-1.0);
                               m[3][2] = Jet2(1.0);
                               return m;
                             }};
  const Verdict v = hermitian_check(e.metric, j, testing::sample(e, 10));
  CHECK(v.status == Status::refused);
  CHECK_FALSE(v.note.empty());
}
