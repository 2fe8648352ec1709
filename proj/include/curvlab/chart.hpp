#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/errors.hpp"
#include "curvlab/jet.hpp"

namespace curvlab {

using Point4 = std::array<double, kDim>;
using Vec4 = std::array<double, kDim>;
using Mat4 = std::array<std::array<double, kDim>, kDim>;

/// Coordinate jets seeded at a point: coords[i] is the jet of x^i.
using Coords = std::array<Jet2, kDim>;
using Vec4J = std::array<Jet2, kDim>;
using Mat4J = std::array<std::array<Jet2, kDim>, kDim>;

/// Coordinate values on a named chart. `valid` is set by Chart::point.
struct ChartPoint {
  Point4 coords{};
  std::string chart_id;
  bool valid = false;
};

/// One domain restriction of a chart, e.g. "0 < theta < pi".
struct Guard {
  std::string description;
  std::function<bool(const Point4&)> holds;
};

struct Chart {
  std::string id;
  std::array<std::string, kDim> coordinate_names;
  /// Coordinates that are angles identified modulo a period (used by the exactness probe).
  std::array<bool, kDim> periodic{};
  std::vector<Guard> guards;

  /// Description of the first guard that fails at x, if any.
  std::optional<std::string> violated_guard(const Point4& x) const;

  /// Builds a point on this chart with `valid` set from the guards.
  ChartPoint point(const Point4& x) const;

  /// Throws ContractViolation on a chart mismatch and DomainError naming the
  /// violated guard when p is outside the domain.
  void require_valid(const ChartPoint& p) const;
};

/// Jet of the coordinate function x^index at p.
Jet2 seed_coordinate(const ChartPoint& p, int index);

/// All four coordinate jets at p.
Coords seed(const ChartPoint& p);

/// "(chart: a, b, c, d)" for error messages.
std::string describe(const ChartPoint& p);

/// Runs `f`, re-throwing any DomainError with the point appended.
template <class F>
auto at_point(const ChartPoint& p, F&& f) -> decltype(f()) {
  try {
    return std::forward<F>(f)();
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " at " + describe(p));
  }
}

// Value-channel helpers.
Mat4 values(const Mat4J& m);
Vec4 values(const Vec4J& v);

Mat4 identity4();
Mat4 multiply(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
/// Max absolute entry.
double max_abs(const Mat4& a);
double max_abs(const Vec4& v);

/// Inverse of a 4x4 jet matrix by Gauss-Jordan elimination on jets with
/// partial pivoting on the value channel. Throws SingularityError when
/// |det| < 1e-12 * (max |entry|)^4.
Mat4J invert(const Mat4J& m);

/// Plain double inverse with the same singularity rule.
Mat4 invert(const Mat4& m);

double determinant(const Mat4& m);

}  // namespace curvlab
