#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/complexstruct.hpp"
#include "curvlab/forms.hpp"
#include "curvlab/frame.hpp"
#include "curvlab/metric.hpp"
#include "curvlab/verdict.hpp"
#include "curvlab/weyl.hpp"

namespace curvlab {

using OneFormJets = std::array<Jet1, kDim>;

/// xi_i = -(nabla_a J^a_b) J^b_i (the four-dimensional case of the divergence
/// formula), with first derivatives so that d xi is exact.
OneFormJets lee_form(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p);

/// Same form through the codifferential: xi_i = -(delta omega)_b J^b_i with
/// (delta omega)_b = -g_{bn} (1/sqrt g) d_a (sqrt g omega^{an}); no Christoffel symbols.
Vec4 lee_form_codifferential(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p);

Vec4 values(const OneFormJets& xi);
FormD as_form(const Vec4& one_form);

struct LeeIdentity {
  FormD d_omega{3};
  FormD xi_wedge_omega{3};
  double residual = 0.0;  // max |d omega - xi ^ omega| / max(1, max |d omega|, max |xi ^ omega|)
};

LeeIdentity lee_identity(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p);

/// max |d omega| / max(1, max |omega|) for the Kahler form of (g, J).
double kahler_closed_residual(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p);

/// max |d xi| / max(1, max |d_mu xi_nu|).
double lee_closed_residual(const OneFormJets& xi);

/// A 1-form field evaluated with first derivatives (e.g. a Lee form or a synthetic test field).
using OneFormField = std::function<OneFormJets(const ChartPoint&)>;

struct Potential {
  std::string description;
  ScalarField f;
  double max_residual = 0.0;  // max |df - xi| / max(1, |xi|)
};

struct ExactnessResult {
  std::optional<Potential> potential;
  double closed_residual = 0.0;
  std::string note;
};

/// Fits potentials f with df = xi at the sample points: first f as a linear
/// combination of coordinate monomials of degree <= 2 and trigonometric terms (periodic
/// coordinates only contribute sin, cos), then f = k log P for the same basis
/// and a small set of exponents k. A fit is returned only when |df - xi| < tol
/// at every sample point; otherwise the note reads "closed, exactness undetermined".
ExactnessResult exactness_probe(const OneFormField& xi, const Chart& chart, const std::vector<ChartPoint>& sample,
                                double tol = 1e-8, double closed_tol = 1e-9);

/// lambda * g; throws DomainError where lambda <= 0.
MetricField conformal_rescale(const MetricField& metric, const ScalarField& lambda, std::string name = "");

enum class DerdzinskiStatus { ok, inapplicable, not_einstein };

struct DerdzinskiResult {
  DerdzinskiStatus status = DerdzinskiStatus::ok;
  double factor = 0.0;  // |W+|^{2/3} = (sum l_i^2)^{1/3}
  WeylSpectrum spectrum;
  std::string note;
};

DerdzinskiResult derdzinski_factor(const MetricField& metric, const FrameField& frame, const ChartPoint& p,
                                   double einstein_tol = 1e-8);

struct FactorMatch {
  Verdict verdict;
  double constant = 0.0;  // mean of lee / weyl
  double spread = 0.0;    // stddev / |mean|
};

using PointScalar = std::function<double(const ChartPoint&)>;

FactorMatch factor_match(const PointScalar& lee_factor, const PointScalar& weyl_factor,
                         const std::vector<ChartPoint>& sample, double tol = 1e-8);
FactorMatch factor_match(const std::vector<double>& lee_values, const std::vector<double>& weyl_values,
                         const std::vector<ChartPoint>& sample, double tol = 1e-8);

enum class LckClass { kahler, globally_conformally_kahler, locally_conformally_kahler, not_lck };

std::string to_string(LckClass c);

struct LeeFormResult {
  double d_omega_residual = 0.0;
  double lee_identity_residual = 0.0;
  double d_xi_residual = 0.0;
  std::optional<Potential> exact_potential;
  LckClass classification = LckClass::not_lck;
  std::string note;
};

struct LckTolerances {
  double closed = 1e-8;
  double lee_identity = 1e-8;
  double lee_closed = 1e-9;
  double potential = 1e-8;
};

LeeFormResult classify_lck(const MetricField& metric, const AlmostComplexField& j,
                           const std::vector<ChartPoint>& sample, const LckTolerances& tol = {});

}  // namespace curvlab
