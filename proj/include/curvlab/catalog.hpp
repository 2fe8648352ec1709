#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/complexstruct.hpp"
#include "curvlab/forms.hpp"
#include "curvlab/frame.hpp"
#include "curvlab/metric.hpp"

namespace curvlab {

using Region = std::array<std::pair<double, double>, kDim>;
using ParameterList = std::vector<std::pair<std::string, double>>;

struct GeometryEntry {
  std::string name;
  std::string title;
  ParameterList parameters;
  MetricField metric;
  /// The first frame is the orthonormal reference frame for the metric.
  std::vector<FrameField> frames;
  std::vector<KFormField> forms;
  std::vector<AlmostComplexField> acs;
  std::optional<std::array<std::string, 3>> hyper_kahler_triple;
  /// Claims this entry must reproduce.
  std::vector<std::string> expected;
  /// Check groups run by `--checks all`.
  std::vector<std::string> default_checks;
  Region region{};
  /// Conformal factor predicted from the Lee potential, if the entry has one.
  std::optional<ScalarField> lee_conformal_factor;
  /// Scaled Kerr: the trace-free Ricci must be nonzero (conformal rescaling breaks Einstein).
  bool non_einstein_control = false;

  double parameter(const std::string& key) const;
  const FrameField* frame() const { return frames.empty() ? nullptr : &frames.front(); }
  const AlmostComplexField* find_acs(const std::string& label) const;
  const KFormField* find_form(const std::string& name) const;
  bool expects(const std::string& claim) const;
};

/// Parameter overrides keyed by name (M, alpha, m).
using ParamOverrides = std::map<std::string, double>;

GeometryEntry flat();
GeometryEntry taub_nut(double m = 0.5);
GeometryEntry taub_nut_r3();
GeometryEntry kerr_lorentzian(double M = 1.0, double alpha = 0.5);
GeometryEntry kerr_euclidean(double M = 1.0, double alpha = 0.5);
GeometryEntry kerr_conformal(double M = 1.0, double alpha = 0.5);

/// Outer root of Delta = r^2 - 2Mr - alpha^2.
double kerr_euclidean_horizon(double M, double alpha);

/// Names accepted by make_geometry, in listing order.
const std::vector<std::string>& geometry_names();

/// Builds a catalog entry; throws std::invalid_argument on an unknown name,
/// an unknown parameter, or a parameter outside the entry's domain.
GeometryEntry make_geometry(const std::string& name, const ParamOverrides& params = {});

/// Frame maps J e_a = +-e_b of the catalog complex structures.
FrameMap taub_nut_j1_map();
FrameMap taub_nut_j2_map();
FrameMap taub_nut_j3_map();
FrameMap kerr_j_map();

/// A complex structure conjugated by a non-constant invertible field,
/// P J P^{-1} with P = Id + amplitude * sin(x^2) E_{01}: still J^2 = -Id, generically not integrable.
AlmostComplexField perturbed_acs(const AlmostComplexField& j, double amplitude);

/// Taub-NUT SU(2)-invariant forms on the (rho, theta, phi, psi) chart.
std::array<KFormField, 3> sigma_forms(const std::string& chart_id, double scale = 1.0);

// ---- Isometry between the (x,y,z,t) and (rho,theta,phi,psi) Taub-NUT charts.

/// f(x,y,z,t) = (rho, theta, phi, psi) with rho = 2r, theta = acos(z/r), phi = atan2(y,x), psi = 2t.
/// Throws DomainError on the z-axis.
ChartPoint taub_nut_isometry(const ChartPoint& p_xyz, const GeometryEntry& target);
/// f^{-1}(rho, theta, phi, psi) = (rho/2 sin th cos ph, rho/2 sin th sin ph, rho/2 cos th, psi/2).
ChartPoint taub_nut_isometry_inverse(const ChartPoint& p_polar, const GeometryEntry& r3);

/// max |(f^* g_TN) - g_xyz| / max |g_xyz| at p (Jacobian from jets of f^{-1}, inverted).
double isometry_pullback_residual(const GeometryEntry& r3, const GeometryEntry& polar, const ChartPoint& p_xyz);

/// max |d Theta - *_3 dV| on the (x, y, z) slice, flat Hodge star.
double theta_hodge_residual(const ChartPoint& p_xyz);

}  // namespace curvlab
