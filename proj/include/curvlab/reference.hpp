#pragma once

#include <array>

#include "curvlab/chart.hpp"
#include "curvlab/forms.hpp"
#include "curvlab/weyl.hpp"

/// Closed-form values for the built-in geometries, written out by hand from
/// the published expressions. Tests compare the engine against these.
namespace curvlab::reference {

/// Converts a J matrix printed as P[i][j] = J^{perm[j]}_{perm[i]} to chart
/// storage j[mu][sigma] = J^mu_sigma.
Mat4 chart_from_printed(const Mat4& printed, const std::array<int, kDim>& perm);

// ---- Taub-NUT with m = 1/2 on (rho, theta, phi, psi).

/// Printed layout order (rho, phi, theta, psi).
inline constexpr std::array<int, kDim> kTaubNutPrintedOrder{0, 2, 1, 3};

/// Printed J1, J2, J3 (which = 1, 2, 3).
Mat4 taub_nut_printed_j(int which, double rho, double theta, double phi);

/// Kahler forms omega_1..3.
FormD taub_nut_omega(int which, double rho, double theta, double phi);

/// [e_a, e_b] for frame legs a < b (0-based), chart components.
Vec4 taub_nut_bracket(int a, int b, double rho, double theta, double phi);

// ---- Euclidean Kerr on (r, theta, phi, t).

/// Printed layout order (t, r, theta, phi).
inline constexpr std::array<int, kDim> kKerrPrintedOrder{3, 0, 1, 2};

Mat4 kerr_printed_j(double M, double alpha, double r, double theta);
FormD kerr_omega(double alpha, double r, double theta);
FormD kerr_d_omega(double alpha, double r, double theta);
/// omega / (r - alpha cos theta)^2, the closed form of the rescaled metric.
FormD kerr_scaled_omega(double alpha, double r, double theta);
Vec4 kerr_lee_form(double alpha, double r, double theta);
/// log (r - alpha cos theta)^2
double kerr_lee_potential(double alpha, double r, double theta);
/// 1 / (r - alpha cos theta)^2
double kerr_lee_factor(double alpha, double r, double theta);
/// diag(-M, -M, 2M) / (r - alpha cos theta)^3 in the J-adapted self-dual basis.
Vec3 kerr_weyl_plus_eigenvalues(double M, double alpha, double r, double theta);
/// |W+|^{2/3} = 6^{1/3} M^{2/3} / (r - alpha cos theta)^2
double kerr_weyl_factor(double M, double alpha, double r, double theta);
/// Lee factor / Weyl factor = 6^{-1/3} M^{-2/3}.
double kerr_factor_ratio(double M);
/// [e_a, e_b] of the frame scaled by (r - alpha cos theta), legs a < b, chart components.
Vec4 kerr_scaled_bracket(int a, int b, double M, double alpha, double r, double theta);

}  // namespace curvlab::reference
