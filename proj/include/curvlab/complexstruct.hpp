#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "curvlab/chart.hpp"
#include "curvlab/forms.hpp"
#include "curvlab/frame.hpp"
#include "curvlab/metric.hpp"
#include "curvlab/verdict.hpp"

namespace curvlab {

/// A (1,1)-tensor field in coordinates: j(x)[mu][sigma] = J^mu_sigma, so
/// J(d_sigma) = J^mu_sigma d_mu.
struct AlmostComplexField {
  std::string label;
  std::string chart_id;
  std::function<Mat4J(const Coords&)> j;
};

struct VectorField {
  std::string name;
  std::string chart_id;
  std::function<Vec4J(const Coords&)> components;
};

Mat4J acs_at(const AlmostComplexField& j, const ChartPoint& p);
Vec4J vector_at(const VectorField& v, const ChartPoint& p);

/// The coordinate field d_mu.
VectorField coordinate_field(const std::string& chart_id, int mu);

/// Leg a of a frame as a vector field.
VectorField frame_vector(const FrameField& frame, int a);

/// f X for a scalar field f.
VectorField scaled(const ScalarField& f, const VectorField& x);

/// J X as a vector field.
VectorField apply(const AlmostComplexField& j, const VectorField& x);

/// -J, with the label prefixed by '-'.
AlmostComplexField negated(const AlmostComplexField& j);

/// Frame-level assignment J e_a = sign_a e_{target_a}, pushed to coordinates:
/// J^mu_sigma = sum_a sign_a e_{target_a}^mu (e^a)_sigma.
struct FrameMap {
  std::array<int, kDim> target{};
  std::array<int, kDim> sign{};
};
AlmostComplexField acs_from_frame(std::string label, const FrameField& frame, const FrameMap& map);

/// [X, Y]^mu = X^nu d_nu Y^mu - Y^nu d_nu X^mu.
Vec4 lie_bracket(const VectorField& x, const VectorField& y, const ChartPoint& p);

/// Matrix residual max |J^2 + Id| / max(1, max |J|)^2.
double acs_residual(const Mat4& j);

struct OmegaResult {
  FormD omega{2};
  double symmetric_residual = 0.0;  // max |sym part| / max(1, max |omega|)
  bool compatible = true;
};

/// omega_{sigma nu} = g_{mu nu} J^mu_sigma; the antisymmetric part is stored,
/// and the symmetric part is reported as the compatibility residual.
OmegaResult omega_from_j(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p,
                         double tol = 1e-9);

/// The Kahler form of (g, J) as a 2-form field (antisymmetrized), for d omega.
KFormField kahler_form_field(const MetricField& metric, const AlmostComplexField& j);

/// J^a_s = g^{n a} omega_{s n}.
Mat4 j_from_omega(const MetricField& metric, const FormD& omega, const ChartPoint& p);
AlmostComplexField acs_from_omega(std::string label, const MetricField& metric, const KFormField& omega);

/// Metric norm sqrt(g(v, v)) (Euclidean component norm when g is not positive definite).
double vector_norm(const Vec4& v, const Mat4& g);

struct NijenhuisTerms {
  Vec4 value{};   // N(X, Y)
  double scale = 0.0;  // largest metric norm among the four terms
};

/// N(X,Y) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY], all brackets from jets.
NijenhuisTerms nijenhuis_terms(const AlmostComplexField& j, const VectorField& x, const VectorField& y,
                               const ChartPoint& p, const Mat4& g);
Vec4 nijenhuis(const AlmostComplexField& j, const VectorField& x, const VectorField& y, const ChartPoint& p);

/// |N(fX, gY) - f g N(X, Y)| / max(1, |f g N(X, Y)|, term scale).
double nijenhuis_tensoriality_residual(const AlmostComplexField& j, const VectorField& x, const VectorField& y,
                                       const ScalarField& f, const ScalarField& g, const ChartPoint& p,
                                       const Mat4& metric_value);

/// Per-point integrability residual: max over the 6 coordinate pairs of |N|_g,
/// divided by the largest bracket term norm over all pairs, plus the
/// tensoriality spot check.
double integrability_residual(const AlmostComplexField& j, const MetricField& metric, const ChartPoint& p);

/// Max over the sample of integrability_residual; integrable when below tol.
Verdict integrability_verdict(const AlmostComplexField& j, const MetricField& metric,
                              const std::vector<ChartPoint>& sample, double tol = 1e-8);

/// Residuals of J1^2, J2^2, J3^2 = -Id, J1J2 = J3, J2J3 = J1, J3J1 = J2 and
/// J1J2 = -J2J1, each divided by max(1, max|Ji| max|Jj|).
///
/// Products are taken on the action on 1-forms (alpha -> alpha o J, matrix
/// rows indexed by the lower index), the layout in which coordinate J's are
/// usually printed. As endomorphisms of the tangent space this reverses the
/// order: J1 J2 = J3 here means J2 o J1 = J3 on vectors.
std::array<double, 7> quaternion_residuals(const Mat4& j1, const Mat4& j2, const Mat4& j3);
extern const std::array<const char*, 7> kQuaternionRelations;

Verdict quaternion_check(const AlmostComplexField& j1, const AlmostComplexField& j2,
                         const AlmostComplexField& j3, const std::vector<ChartPoint>& sample,
                         double tol = 1e-8);

/// max |J^T g J - g| / max|g| at one point.
double hermitian_residual(const Mat4& g, const Mat4& j);

/// Refused on Lorentzian metrics.
Verdict hermitian_check(const MetricField& metric, const AlmostComplexField& j,
                        const std::vector<ChartPoint>& sample, double tol = 1e-9);

Verdict acs_check(const AlmostComplexField& j, const std::vector<ChartPoint>& sample, double tol = 1e-12);

}  // namespace curvlab
