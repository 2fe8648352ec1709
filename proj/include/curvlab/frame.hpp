#pragma once

#include <array>
#include <functional>
#include <string>

#include "curvlab/chart.hpp"
#include "curvlab/forms.hpp"
#include "curvlab/metric.hpp"

namespace curvlab {

/// Row a holds the coordinate components of leg a: vectors[a][mu] = e_a^mu,
/// coframe[a][mu] = (e^a)_mu.
using FrameFunction = std::function<Mat4J(const Coords&)>;

struct FrameField {
  std::string name;
  std::string chart_id;
  FrameFunction vectors;
  FrameFunction coframe;
  bool orthonormal = true;
};

struct FrameAt {
  Mat4J vectors;
  Mat4J coframe;
};

FrameAt frame_at(const FrameField& frame, const ChartPoint& p);

/// Frame whose vectors are the jet inverse of the given coframe.
FrameField frame_from_coframe(std::string name, std::string chart_id, FrameFunction coframe);

/// max |<e^a, e_b> - delta^a_b|.
double duality_residual(const FrameField& frame, const ChartPoint& p);

/// max |g(e_a, e_b) - delta_ab|.
double orthonormality_residual(const FrameField& frame, const MetricField& metric, const ChartPoint& p);

/// max |sum_a e^a (x) e^a - g| / max(1, max |g|).
double coframe_metric_residual(const FrameField& frame, const MetricField& metric, const ChartPoint& p);

/// The four coframe legs as 1-form jets.
std::array<FormJ, kDim> coframe_forms(const FrameField& frame, const ChartPoint& p);

/// Frame adapted to the metric lambda * g: vectors scale by 1/sqrt(lambda), coframe by sqrt(lambda).
FrameField rescale_frame(const FrameField& frame, const ScalarField& lambda);

/// Sign of det(coframe) at p (the orientation e^1^e^2^e^3^e^4 induces on the chart).
int coframe_orientation(const FrameField& frame, const ChartPoint& p);

}  // namespace curvlab
