#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "curvlab/catalog.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/reference.hpp"
#include "curvlab/weyl.hpp"
#include "support.hpp"

using namespace curvlab;

TEST_CASE("closed-form symmetric eigenvalues agree with Eigen") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 0; n < 1000; ++n) {
    Mat3 a{};
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        a[i][j] = a[j][i] = u(rng);
        m(i, j) = m(j, i) = a[i][j];
      }
    // Every tenth matrix gets a repeated eigenvalue.
    if (n % 10 == 0) {
      a = Mat3{{{1.5, 0, 0}, {0, 1.5, 0}, {0, 0, -3.0}}};
      m = Eigen::Vector3d(1.5, 1.5, -3.0).asDiagonal();
    }
    const Vec3 mine = symmetric_eigenvalues(a);
    const Eigen::Vector3d ref = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m, Eigen::EigenvaluesOnly).eigenvalues();
    for (int i = 0; i < 3; ++i) CHECK(std::abs(mine[i] - ref[i]) < 1e-12 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("pattern detector") {
  const WeylSpectrum good = weyl_plus_spectrum(Mat3{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 2}}});
  CHECK(good.pattern);
  CHECK(good.pattern_residual < 1e-15);
  const WeylSpectrum bad = weyl_plus_spectrum(Mat3{{{-1, 0, 0}, {0, 0, 0}, {0, 0, 1}}});
  CHECK_FALSE(bad.pattern);
  const WeylSpectrum zero = weyl_plus_spectrum(Mat3{});
  CHECK(zero.vanishes);
}

TEST_CASE("Kerr W+ at r = 3 on the equator") {
  const GeometryEntry e = kerr_euclidean();
  const ChartPoint p = e.metric.chart.point({3.0, std::numbers::pi / 2, 0.7, 1.1});
  const Mat3 a = weyl_plus_matrix(e.metric, p, e.frames.front());
  const Vec3 l = symmetric_eigenvalues(a);
  CHECK(std::abs(l[0] + 1.0 / 27) < 1e-9);
  CHECK(std::abs(l[1] + 1.0 / 27) < 1e-9);
  CHECK(std::abs(l[2] - 2.0 / 27) < 1e-9);
  const Vec3 want = reference::kerr_weyl_plus_eigenvalues(1.0, 0.5, 3.0, std::numbers::pi / 2);
  for (int i = 0; i < 3; ++i) CHECK(a[i][i] == doctest::Approx(want[i]).epsilon(1e-10));
}

TEST_CASE("Kerr W+ has the degenerate pattern with the predicted eigenvalues") {
  const GeometryEntry e = kerr_euclidean();
  for (const auto& p : testing::sample(e, 200)) {
    const CurvatureBundle c = curvature(e.metric, p);
    const Mat3 a = weyl_plus_matrix(e.metric, c, p, e.frames.front());
    const WeylSpectrum s = weyl_plus_spectrum(a, c.scale());
    CHECK(s.pattern);
    CHECK(std::abs(s.trace) < 1e-9 * c.scale());
    Vec3 want = reference::kerr_weyl_plus_eigenvalues(1.0, 0.5, p.coords[0], p.coords[1]);
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 3; ++i) CHECK(std::abs(s.eigenvalues[i] - want[i]) < 1e-8 * std::abs(want[2]));
  }
}

TEST_CASE("Taub-NUT is half-flat for the frame orientation") {
  const GeometryEntry e = taub_nut();
  for (const auto& p : testing::sample(e, 50)) {
    const CurvatureBundle c = curvature(e.metric, p);
    const WeylSpectrum s = weyl_plus_spectrum(weyl_plus_matrix(e.metric, c, p, e.frames.front()), c.scale());
    CHECK(s.vanishes);
  }
}

TEST_CASE("frame Riemann components are those of an orthonormal frame") {
  const GeometryEntry e = kerr_euclidean();
  const ChartPoint p = e.metric.chart.point({4.0, 1.0, 0.0, 0.0});
  const CurvatureBundle c = curvature(e.metric, p);
  const Tensor4 r = frame_riemann(c, values(frame_at(e.frames.front(), p).vectors));
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int cc = 0; cc < kDim; ++cc)
        for (int d = 0; d < kDim; ++d) {
          CHECK(std::abs(r(a, b, cc, d) + r(b, a, cc, d)) < 1e-12);
          CHECK(std::abs(r(a, b, cc, d) - r(cc, d, a, b)) < 1e-12);
        }
}

TEST_CASE("a non-orthonormal frame is a contract violation") {
  const GeometryEntry e = kerr_euclidean();
  const GeometryEntry k = kerr_conformal();
  const ChartPoint p = e.metric.chart.point({4.0, 1.0, 0.0, 0.0});
  CHECK_THROWS_AS(weyl_plus_matrix(e.metric, p, k.frames.front()), ContractViolation);
}
