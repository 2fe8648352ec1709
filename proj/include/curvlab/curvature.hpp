#pragma once

#include <array>

#include "curvlab/chart.hpp"
#include "curvlab/jet1.hpp"
#include "curvlab/metric.hpp"

namespace curvlab {

/// Christoffel symbols Gamma^k_{ij}, indexed [k][i][j].
using Christoffel = std::array<std::array<std::array<double, kDim>, kDim>, kDim>;
using ChristoffelJets = std::array<std::array<std::array<Jet1, kDim>, kDim>, kDim>;

/// Dense rank-4 array with (a, b, c, d) indexing.
class Tensor4 {
 public:
  double& operator()(int a, int b, int c, int d) noexcept { return data_[offset(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const noexcept { return data_[offset(a, b, c, d)]; }
  double max_abs() const noexcept;

 private:
  static constexpr size_t offset(int a, int b, int c, int d) noexcept {
    return static_cast<size_t>(((a * kDim + b) * kDim + c) * kDim + d);
  }
  std::array<double, kDim * kDim * kDim * kDim> data_{};
};

/// Curvature at one point.
///
/// Conventions:
///   riemann(l, i, j, k)         = R^l_{ijk} = d_i G^l_{jk} - d_j G^l_{ik} + G^l_{im} G^m_{jk} - G^l_{jm} G^m_{ik}
///   riemann_lowered(a, b, c, d) = R_{abcd} = g_{ae} R^e_{cdb}   (positive sectional curvature on spheres)
///   ricci(j, k)                 = R^i_{ijk}
struct CurvatureBundle {
  Mat4 metric{};
  Mat4 inverse_metric{};
  Christoffel christoffel{};
  Tensor4 riemann;
  Tensor4 riemann_lowered;
  Mat4 ricci{};
  double scalar = 0.0;
  Mat4 tracefree_ricci{};

  /// Largest |R^l_{ijk}| plus 1e-30; the denominator of every curvature zero-test.
  double scale() const noexcept;
};

/// Gamma^k_{ij} = 1/2 g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij}).
Christoffel christoffel(const MetricField& metric, const ChartPoint& p);

/// Christoffel symbols together with their first partials (from metric Hessians).
ChristoffelJets christoffel_jets(const MetricField& metric, const ChartPoint& p);
ChristoffelJets christoffel_jets(const Mat4J& g, const Mat4J& g_inv);

CurvatureBundle curvature(const MetricField& metric, const ChartPoint& p);

// Residuals, all normalized by CurvatureBundle::scale().

/// Max over the antisymmetry, pair-symmetry and first Bianchi identities.
double riemann_symmetry_residual(const CurvatureBundle& c);
double ricci_residual(const CurvatureBundle& c);
double tracefree_ricci_residual(const CurvatureBundle& c);
/// |g^{ij} (trace-free Ricci)_{ij}| / scale.
double tracefree_trace_residual(const CurvatureBundle& c);

}  // namespace curvlab
