#include <doctest.h>

#include <cmath>

#include "curvlab/catalog.hpp"
#include "curvlab/complexstruct.hpp"
#include "curvlab/lck.hpp"
#include "curvlab/reference.hpp"
#include "support.hpp"

using namespace curvlab;
namespace ref = curvlab::reference;

namespace {

// max |got - want| / max |want|, or the absolute deviation when want vanishes.
double relative(const Vec4& got, const Vec4& want) {
  double d = 0.0, s = 0.0;
  for (int i = 0; i < kDim; ++i) {
    d = std::max(d, std::abs(got[i] - want[i]));
    s = std::max(s, std::abs(want[i]));
  }
  return s > 1e-12 ? d / s : d;
}

double relative(const FormD& got, const FormD& want) {
  const double s = max_abs(want);
  const double d = max_abs(got - want);
  return s > 1e-12 ? d / s : d;
}

double relative(const Mat4& got, const Mat4& want) {
  double d = 0.0, s = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      d = std::max(d, std::abs(got[i][j] - want[i][j]));
      s = std::max(s, std::abs(want[i][j]));
    }
  return d / s;
}

}  // namespace

TEST_CASE("printed layout conversion") {
  Mat4 printed{};
  printed[0][1] = 7.0;  // row = lower index in printed order
  const Mat4 j = ref::chart_from_printed(printed, ref::kTaubNutPrintedOrder);
  // P[i][k] = J^{perm[k]}_{perm[i]}: printed column 1 is phi, so J^phi_rho = 7.
  CHECK(j[2][0] == 7.0);
}

TEST_CASE("Taub-NUT complex structures match the printed matrices") {
  const GeometryEntry e = taub_nut();
  for (const auto& p : testing::sample(e, 100)) {
    const auto& x = p.coords;
    for (int which = 1; which <= 3; ++which) {
      const Mat4 want = ref::chart_from_printed(ref::taub_nut_printed_j(which, x[0], x[1], x[2]),
                                                ref::kTaubNutPrintedOrder);
      const Mat4 got = values(acs_at(*e.find_acs("J" + std::to_string(which)), p));
      CHECK(relative(got, want) < 1e-12);
      const FormD w = values(form_at(kahler_form_field(e.metric, *e.find_acs("J" + std::to_string(which))), p));
      CHECK(relative(w, ref::taub_nut_omega(which, x[0], x[1], x[2])) < 1e-12);
    }
  }
}

TEST_CASE("Taub-NUT frame brackets match the six printed closed forms") {
  const GeometryEntry e = taub_nut();
  const FrameField& f = e.frames.front();
  double worst = 0.0;
  for (const auto& p : testing::sample(e, 100, 2)) {
    for (int a = 0; a < kDim; ++a)
      for (int b = a + 1; b < kDim; ++b) {
        const Vec4 got = lie_bracket(frame_vector(f, a), frame_vector(f, b), p);
        worst = std::max(worst, relative(got, ref::taub_nut_bracket(a, b, p.coords[0], p.coords[1], p.coords[2])));
      }
    CHECK(orthonormality_residual(f, e.metric, p) < 1e-9);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("Kerr complex structure, Kahler form and its derivative") {
  const GeometryEntry e = kerr_euclidean();
  const AlmostComplexField& j = *e.find_acs("J");
  for (const auto& p : testing::sample(e, 100)) {
    const double r = p.coords[0], th = p.coords[1];
    const Mat4 want = ref::chart_from_printed(ref::kerr_printed_j(1.0, 0.5, r, th), ref::kKerrPrintedOrder);
    CHECK(relative(values(acs_at(j, p)), want) < 1e-12);
    const KFormField w = kahler_form_field(e.metric, j);
    CHECK(relative(values(form_at(w, p)), ref::kerr_omega(0.5, r, th)) < 1e-12);
    CHECK(relative(exterior_derivative(w, p), ref::kerr_d_omega(0.5, r, th)) < 1e-8);
    CHECK(relative(values(lee_form(e.metric, j, p)), ref::kerr_lee_form(0.5, r, th)) < 1e-8);
    CHECK(relative(values(form_at(*e.find_form("omega_tilde"), p)), ref::kerr_scaled_omega(0.5, r, th)) < 1e-12);
  }
}

TEST_CASE("rescaled Kerr frame brackets agree with the printed forms") {
  const GeometryEntry e = kerr_conformal();
  const FrameField& f = e.frames.front();
  double worst = 0.0;
  for (const auto& p : testing::sample(e, 100, 4))
    for (int a = 0; a < kDim; ++a)
      for (int b = a + 1; b < kDim; ++b) {
        const Vec4 got = lie_bracket(frame_vector(f, a), frame_vector(f, b), p);
        worst = std::max(worst,
                         relative(got, ref::kerr_scaled_bracket(a, b, 1.0, 0.5, p.coords[0], p.coords[1])));
      }
  CHECK(worst < 1e-8);
}

TEST_CASE("rescaled Kerr Kahler form is the scaled omega") {
  const GeometryEntry e = kerr_conformal();
  for (const auto& p : testing::sample(e, 100)) {
    const FormD got = values(form_at(kahler_form_field(e.metric, e.acs.front()), p));
    CHECK(relative(got, ref::kerr_scaled_omega(0.5, p.coords[0], p.coords[1])) < 1e-12);
  }
}

TEST_CASE("Lee factor to Weyl factor ratio") {
  CHECK(ref::kerr_factor_ratio(1.0) == doctest::Approx(std::pow(6.0, -1.0 / 3.0)));
  CHECK(ref::kerr_factor_ratio(8.0) == doctest::Approx(std::pow(6.0, -1.0 / 3.0) / 4.0));
  const double r = 4.0, th = 0.8;
  CHECK(ref::kerr_lee_factor(0.5, r, th) / ref::kerr_weyl_factor(1.0, 0.5, r, th) ==
        doctest::Approx(ref::kerr_factor_ratio(1.0)));
}
