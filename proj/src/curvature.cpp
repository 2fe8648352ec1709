#include "curvlab/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace curvlab {

double Tensor4::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double CurvatureBundle::scale() const noexcept { return riemann.max_abs() + 1e-30; }

ChristoffelJets christoffel_jets(const Mat4J& g, const Mat4J& g_inv) {
  // dg[l][i][j] = d_l g_{ij} as a first-order jet.
  std::array<std::array<std::array<Jet1, kDim>, kDim>, kDim> dg;
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) dg[l][i][j] = Jet1::partial(g[i][j], l);

  ChristoffelJets gamma;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = i; j < kDim; ++j) {
        Jet1 sum;
        for (int l = 0; l < kDim; ++l)
          sum = sum + Jet1::from(g_inv[k][l]) * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        gamma[k][i][j] = 0.5 * sum;
        gamma[k][j][i] = gamma[k][i][j];
      }
  return gamma;
}

ChristoffelJets christoffel_jets(const MetricField& metric, const ChartPoint& p) {
  const Mat4J g = metric_at(metric, p);
  const Mat4J g_inv = at_point(p, [&] { return invert(g); });
  return christoffel_jets(g, g_inv);
}

Christoffel christoffel(const MetricField& metric, const ChartPoint& p) {
  const ChristoffelJets gj = christoffel_jets(metric, p);
  Christoffel out;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) out[k][i][j] = gj[k][i][j].value;
  return out;
}

CurvatureBundle curvature(const MetricField& metric, const ChartPoint& p) {
  const Mat4J g = metric_at(metric, p);
  const Mat4J g_inv = at_point(p, [&] { return invert(g); });
  const ChristoffelJets gamma = christoffel_jets(g, g_inv);

  CurvatureBundle c;
  c.metric = values(g);
  c.inverse_metric = values(g_inv);
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) c.christoffel[k][i][j] = gamma[k][i][j].value;

  const auto& G = c.christoffel;
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
          double r = gamma[l][j][k].grad[i] - gamma[l][i][k].grad[j];
          for (int m = 0; m < kDim; ++m) r += G[l][i][m] * G[m][j][k] - G[l][j][m] * G[m][i][k];
          c.riemann(l, i, j, k) = r;
        }

  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int cc = 0; cc < kDim; ++cc)
        for (int d = 0; d < kDim; ++d) {
          double r = 0.0;
          for (int e = 0; e < kDim; ++e) r += c.metric[a][e] * c.riemann(e, cc, d, b);
          c.riemann_lowered(a, b, cc, d) = r;
        }

  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) {
      double r = 0.0;
      for (int i = 0; i < kDim; ++i) r += c.riemann(i, i, j, k);
      c.ricci[j][k] = r;
    }
  c.scalar = 0.0;
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) c.scalar += c.inverse_metric[j][k] * c.ricci[j][k];
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k)
      c.tracefree_ricci[j][k] = c.ricci[j][k] - 0.25 * c.scalar * c.metric[j][k];

  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      if (!std::isfinite(c.ricci[i][j])) throw DomainError("curvature: non-finite result at " + describe(p));
    }
  return c;
}

double riemann_symmetry_residual(const CurvatureBundle& c) {
  const Tensor4& R = c.riemann_lowered;
  const double s = R.max_abs() + 1e-30;
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int cc = 0; cc < kDim; ++cc)
        for (int d = 0; d < kDim; ++d) {
          const double v = R(a, b, cc, d);
          worst = std::max({worst, std::abs(v + R(b, a, cc, d)), std::abs(v + R(a, b, d, cc)),
                            std::abs(v - R(cc, d, a, b)),
                            std::abs(v + R(a, cc, d, b) + R(a, d, b, cc))});
        }
  return worst / s;
}

double ricci_residual(const CurvatureBundle& c) { return max_abs(c.ricci) / c.scale(); }

double tracefree_ricci_residual(const CurvatureBundle& c) {
  return max_abs(c.tracefree_ricci) / c.scale();
}

double tracefree_trace_residual(const CurvatureBundle& c) {
  double t = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) t += c.inverse_metric[i][j] * c.tracefree_ricci[i][j];
  return std::abs(t) / c.scale();
}

}  // namespace curvlab
