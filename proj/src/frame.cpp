#include "curvlab/frame.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace curvlab {

FrameAt frame_at(const FrameField& frame, const ChartPoint& p) {
  if (frame.chart_id != p.chart_id)
    throw ContractViolation("frame '" + frame.name + "' lives on chart '" + frame.chart_id +
                            "', point is on '" + p.chart_id + "'");
  return at_point(p, [&] {
    const Coords x = seed(p);
    FrameAt f{frame.vectors(x), frame.coframe(x)};
    for (int a = 0; a < kDim; ++a)
      for (int mu = 0; mu < kDim; ++mu) {
        require_finite(f.vectors[a][mu], frame.name);
        require_finite(f.coframe[a][mu], frame.name);
      }
    return f;
  });
}

FrameField frame_from_coframe(std::string name, std::string chart_id, FrameFunction coframe) {
  FrameField f;
  f.name = std::move(name);
  f.chart_id = std::move(chart_id);
  f.coframe = coframe;
  // E[a][mu] inverted gives F[mu][a] = e_a^mu; the vectors are its transpose.
  f.vectors = [coframe](const Coords& x) {
    const Mat4J inv = invert(coframe(x));
    Mat4J v;
    for (int a = 0; a < kDim; ++a)
      for (int mu = 0; mu < kDim; ++mu) v[a][mu] = inv[mu][a];
    return v;
  };
  return f;
}

double duality_residual(const FrameField& frame, const ChartPoint& p) {
  const FrameAt f = frame_at(frame, p);
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      double s = 0.0;
      for (int mu = 0; mu < kDim; ++mu) s += f.coframe[a][mu].value() * f.vectors[b][mu].value();
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

double orthonormality_residual(const FrameField& frame, const MetricField& metric, const ChartPoint& p) {
  const Mat4 g = values(metric_at(metric, p));
  const Mat4 e = values(frame_at(frame, p).vectors);
  double worst = 0.0;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      double s = 0.0;
      for (int m = 0; m < kDim; ++m)
        for (int n = 0; n < kDim; ++n) s += g[m][n] * e[a][m] * e[b][n];
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

double coframe_metric_residual(const FrameField& frame, const MetricField& metric, const ChartPoint& p) {
  const Mat4 g = values(metric_at(metric, p));
  const Mat4 e = values(frame_at(frame, p).coframe);
  double worst = 0.0;
  for (int m = 0; m < kDim; ++m)
    for (int n = 0; n < kDim; ++n) {
      double s = 0.0;
      for (int a = 0; a < kDim; ++a) s += e[a][m] * e[a][n];
      worst = std::max(worst, std::abs(s - g[m][n]));
    }
  return worst / std::max(1.0, max_abs(g));
}

std::array<FormJ, kDim> coframe_forms(const FrameField& frame, const ChartPoint& p) {
  const FrameAt f = frame_at(frame, p);
  std::array<FormJ, kDim> out;
  for (int a = 0; a < kDim; ++a) {
    out[a] = FormJ(1);
    for (int mu = 0; mu < kDim; ++mu) out[a][mu] = f.coframe[a][mu];
  }
  return out;
}

FrameField rescale_frame(const FrameField& frame, const ScalarField& lambda) {
  FrameField out = frame;
  out.name = frame.name + "_scaled";
  out.vectors = [v = frame.vectors, lambda](const Coords& x) {
    const Jet2 s = 1.0 / sqrt(lambda(x));
    Mat4J m = v(x);
    for (auto& row : m)
      for (auto& c : row) c = s * c;
    return m;
  };
  out.coframe = [c = frame.coframe, lambda](const Coords& x) {
    const Jet2 s = sqrt(lambda(x));
    Mat4J m = c(x);
    for (auto& row : m)
      for (auto& v : row) v = s * v;
    return m;
  };
  return out;
}

int coframe_orientation(const FrameField& frame, const ChartPoint& p) {
  const double d = determinant(values(frame_at(frame, p).coframe));
  return d > 0 ? 1 : -1;
}

}  // namespace curvlab
