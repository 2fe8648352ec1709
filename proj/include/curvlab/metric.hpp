#pragma once

#include <array>
#include <functional>
#include <string>

#include "curvlab/chart.hpp"

namespace curvlab {

enum class Signature { riemannian, lorentzian };

std::string to_string(Signature s);

/// Volume-form orientation. `labels` names the coframe legs in oriented order;
/// `sign` is the sign of e^{l1}^e^{l2}^e^{l3}^e^{l4} relative to dx^0^dx^1^dx^2^dx^3.
struct Orientation {
  std::array<std::string, kDim> labels{"e1", "e2", "e3", "e4"};
  int sign = 1;

  /// Opposite orientation: swaps the last two labels and negates the sign.
  Orientation flipped() const;
};

using ScalarField = std::function<Jet2(const Coords&)>;
using MetricFunction = std::function<Mat4J(const Coords&)>;

struct MetricField {
  std::string name;
  Chart chart;
  Signature signature = Signature::riemannian;
  Orientation orientation;
  MetricFunction components;
};

/// g_{mu nu}(p) with exact first and second partials.
Mat4J metric_at(const MetricField& metric, const ChartPoint& p);

/// g^{mu nu}(p), inverted through jet arithmetic.
Mat4J inverse_metric_at(const MetricField& metric, const ChartPoint& p);

/// Positive definiteness by leading principal minors.
bool positive_definite(const Mat4& g);

/// Smallest leading principal minor divided by the matching power of max|g|.
double min_normalized_minor(const Mat4& g);

struct SignatureCheck {
  bool allowed = true;
  std::string reason;
};

/// Refuses Hermitian/Kähler analysis of Lorentzian metrics: a Lorentz-signature
/// manifold admits no almost Hermitian structure.
SignatureCheck signature_guard(const MetricField& metric);

}  // namespace curvlab
