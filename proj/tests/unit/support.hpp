#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "curvlab/catalog.hpp"
#include "curvlab/chart.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/forms.hpp"
#include "curvlab/metric.hpp"
#include "curvlab/sampling.hpp"

namespace testing {

using namespace curvlab;

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

/// Metric value g_{ij}(x) through the engine's field, no derivatives used.
inline Mat4 metric_value(const MetricField& g, const Point4& x) {
  return values(metric_at(g, g.chart.point(x)));
}

inline Point4 shifted(Point4 x, int i, double h) {
  x[static_cast<size_t>(i)] += h;
  return x;
}

/// Christoffel symbols from central differences of metric values.
inline Christoffel christoffel_fd(const MetricField& g, const Point4& x, double h = 1e-5) {
  std::array<Mat4, kDim> dg;
  for (int k = 0; k < kDim; ++k) {
    const Mat4 p = metric_value(g, shifted(x, k, h)), m = metric_value(g, shifted(x, k, -h));
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) dg[k][a][b] = (p[a][b] - m[a][b]) / (2.0 * h);
  }
  const Mat4 ginv = invert(metric_value(g, x));
  Christoffel out{};
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double s = 0.0;
        for (int l = 0; l < kDim; ++l) s += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        out[k][i][j] = 0.5 * s;
      }
  return out;
}

/// (d a)_{I} from central differences of the coefficient values of a k-form field.
inline FormD exterior_derivative_fd(const KFormField& a, const Chart& chart, const Point4& x, double h = 1e-5) {
  std::array<FormD, kDim> da;
  for (int k = 0; k < kDim; ++k) {
    const FormD p = values(form_at(a, chart.point(shifted(x, k, h))));
    const FormD m = values(form_at(a, chart.point(shifted(x, k, -h))));
    da[k] = scale(p - m, 1.0 / (2.0 * h));
  }
  FormD out(a.degree + 1);
  for (int s = 0; s < out.size(); ++s) {
    const IndexTuple t = form_tuple(out.degree(), s);
    double v = 0.0;
    for (int pos = 0; pos <= a.degree; ++pos) {
      int rest[4];
      int n = 0;
      for (int q = 0; q <= a.degree; ++q)
        if (q != pos) rest[n++] = t[q];
      const double sign = pos % 2 == 0 ? 1.0 : -1.0;
      v += sign * (a.degree == 0 ? da[t[pos]][0] : da[t[pos]].component(std::span<const int>(rest, n)));
    }
    out[s] = v;
  }
  return out;
}

inline std::vector<ChartPoint> sample(const GeometryEntry& e, std::size_t n, std::uint64_t seed = 11) {
  return sample_points(e.metric.chart, e.region, n, seed);
}

}  // namespace testing
