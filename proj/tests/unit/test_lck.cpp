#include <doctest.h>

#include <cmath>

#include "curvlab/catalog.hpp"
#include "curvlab/lck.hpp"
#include "curvlab/reference.hpp"
#include "support.hpp"

using namespace curvlab;

TEST_CASE("Lee identity and closedness on Euclidean Kerr") {
  const GeometryEntry e = kerr_euclidean();
  const AlmostComplexField& j = *e.find_acs("J");
  for (const auto& p : testing::sample(e, 200)) {
    const LeeIdentity li = lee_identity(e.metric, j, p);
    CHECK(li.residual < 1e-10);
    const OneFormJets xi = lee_form(e.metric, j, p);
    CHECK(lee_closed_residual(xi) < 1e-10);
    const Vec4 a = values(xi), b = lee_form_codifferential(e.metric, j, p);
    for (int i = 0; i < kDim; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-10 * std::max(1.0, std::abs(a[i])));
  }
}

TEST_CASE("Lee form vanishes for Kahler structures") {
  const GeometryEntry e = taub_nut();
  for (const auto& p : testing::sample(e, 50))
    for (const auto& j : e.acs) CHECK(max_abs(values(lee_form(e.metric, j, p))) < 1e-10);
}

TEST_CASE("exactness probe recovers the logarithmic Kerr potential") {
  const GeometryEntry e = kerr_euclidean();
  const AlmostComplexField& j = *e.find_acs("J");
  const auto pts = testing::sample(e, 100);
  const OneFormField xi = [&](const ChartPoint& p) { return lee_form(e.metric, j, p); };
  const ExactnessResult r = exactness_probe(xi, e.metric.chart, pts);
  REQUIRE(r.potential.has_value());
  CHECK(r.potential->max_residual < 1e-8);
  CHECK(r.potential->description.find("log") != std::string::npos);
  for (const auto& p : pts) {
    const double f = r.potential->f(seed(p)).value();
    CHECK(f == doctest::Approx(reference::kerr_lee_potential(0.5, p.coords[0], p.coords[1])).epsilon(1e-8));
  }
}

TEST_CASE("exactness probe finds polynomial potentials") {
  const GeometryEntry e = flat();
  const auto pts = testing::sample(e, 50);
  // xi = d(x y + z^2)
  const OneFormField xi = [](const ChartPoint& p) {
    const Coords x = seed(p);
    return OneFormJets{Jet1::from(x[1]), Jet1::from(x[0]), 2.0 * Jet1::from(x[2]), Jet1(0.0)};
  };
  const ExactnessResult r = exactness_probe(xi, e.metric.chart, pts);
  REQUIRE(r.potential.has_value());
  CHECK(r.potential->max_residual < 1e-10);
}

TEST_CASE("closed but non-exact 1-form is reported as undetermined") {
  // d(phi) on a chart where phi is an angle: closed, with no single-valued potential.
  const GeometryEntry e = taub_nut();
  const auto pts = testing::sample(e, 100);
  const OneFormField dphi = [](const ChartPoint&) {
    OneFormJets xi;
    xi[2] = Jet1(1.0);
    return xi;
  };
  const ExactnessResult r = exactness_probe(dphi, e.metric.chart, pts);
  CHECK_FALSE(r.potential.has_value());
  CHECK(r.closed_residual < 1e-12);
  CHECK(r.note.find("closed, exactness undetermined") != std::string::npos);
}

TEST_CASE("classification of the catalog structures") {
  const GeometryEntry kerr = kerr_euclidean();
  const auto kp = testing::sample(kerr, 100);
  const LeeFormResult k = classify_lck(kerr.metric, *kerr.find_acs("J"), kp);
  CHECK(k.classification == LckClass::globally_conformally_kahler);
  CHECK(k.exact_potential.has_value());
  CHECK(to_string(k.classification) == "globally_conformally_kahler");

  const GeometryEntry tn = taub_nut();
  const LeeFormResult t = classify_lck(tn.metric, tn.acs.front(), testing::sample(tn, 50));
  CHECK(t.classification == LckClass::kahler);

  const GeometryEntry fl = flat();
  const LeeFormResult p = classify_lck(fl.metric, perturbed_acs(fl.acs.front(), 0.3), testing::sample(fl, 50));
  CHECK(p.classification == LckClass::not_lck);
}

TEST_CASE("conformal rescaling by the Lee factor makes Kerr Kahler") {
  const GeometryEntry e = kerr_conformal();
  for (const auto& p : testing::sample(e, 100)) CHECK(kahler_closed_residual(e.metric, e.acs.front(), p) < 1e-10);
  const GeometryEntry base = kerr_euclidean();
  const ChartPoint p = base.metric.chart.point({5.0, 1.0, 0.3, 0.2});
  const ChartPoint q = e.metric.chart.point({5.0, 1.0, 0.3, 0.2});
  const Mat4 g = values(metric_at(base.metric, p)), gh = values(metric_at(e.metric, q));
  const double lambda = reference::kerr_lee_factor(0.5, 5.0, 1.0);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) CHECK(gh[a][b] == doctest::Approx(lambda * g[a][b]));
  const ScalarField negative = [](const Coords&) { return Jet2(-1.0); };
  const MetricField bad = conformal_rescale(base.metric, negative);
  CHECK_THROWS_AS(metric_at(bad, p), DomainError);
}

TEST_CASE("factor match detects constant and non-constant ratios") {
  const GeometryEntry e = kerr_euclidean();
  const auto pts = testing::sample(e, 50);
  const PointScalar lee = [](const ChartPoint& p) { return reference::kerr_lee_factor(0.5, p.coords[0], p.coords[1]); };
  const PointScalar weyl = [](const ChartPoint& p) {
    return reference::kerr_weyl_factor(1.0, 0.5, p.coords[0], p.coords[1]);
  };
  const FactorMatch m = factor_match(lee, weyl, pts);
  CHECK(m.verdict.passed());
  CHECK(m.constant == doctest::Approx(std::pow(6.0, -1.0 / 3.0)).epsilon(1e-12));
  const PointScalar off = [](const ChartPoint& p) { return p.coords[0]; };
  CHECK(factor_match(lee, off, pts).verdict.status == Status::fail);
}

TEST_CASE("Derdzinski factor is inapplicable on flat space") {
  const GeometryEntry e = flat();
  const DerdzinskiResult d = derdzinski_factor(e.metric, e.frames.front(), e.metric.chart.point({0.1, 0.2, 0.3, 0.4}));
  CHECK(d.status == DerdzinskiStatus::inapplicable);
  const GeometryEntry k = kerr_conformal();
  const DerdzinskiResult n = derdzinski_factor(k.metric, k.frames.front(), k.metric.chart.point({5.0, 1.0, 0.3, 0.2}));
  CHECK(n.status == DerdzinskiStatus::not_einstein);
}
