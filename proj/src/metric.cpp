#include "curvlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace curvlab {

std::string to_string(Signature s) {
  return s == Signature::riemannian ? "riemannian" : "lorentzian";
}

Orientation Orientation::flipped() const {
  Orientation o = *this;
  std::swap(o.labels[2], o.labels[3]);
  o.sign = -sign;
  return o;
}

Mat4J metric_at(const MetricField& metric, const ChartPoint& p) {
  metric.chart.require_valid(p);
  return at_point(p, [&] {
    Mat4J g = metric.components(seed(p));
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) require_finite(g[i][j], "metric_at");
    return g;
  });
}

Mat4J inverse_metric_at(const MetricField& metric, const ChartPoint& p) {
  const Mat4J g = metric_at(metric, p);
  return at_point(p, [&] { return invert(g); });
}

namespace {

double leading_minor(const Mat4& g, int n) {
  Mat4 m = identity4();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g[i][j];
  return determinant(m);
}

}  // namespace

double min_normalized_minor(const Mat4& g) {
  const double s = std::max(max_abs(g), 1e-300);
  double worst = INFINITY;
  for (int n = 1; n <= kDim; ++n) worst = std::min(worst, leading_minor(g, n) / std::pow(s, n));
  return worst;
}

bool positive_definite(const Mat4& g) { return min_normalized_minor(g) > 0.0; }

SignatureCheck signature_guard(const MetricField& metric) {
  if (metric.signature == Signature::lorentzian)
    return {false,
            "refused: metric '" + metric.name +
                "' has Lorentzian signature, which admits no almost Hermitian structure"};
  return {true, ""};
}

}  // namespace curvlab
