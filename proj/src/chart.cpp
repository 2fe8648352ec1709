#include "curvlab/chart.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace curvlab {

std::optional<std::string> Chart::violated_guard(const Point4& x) const {
  for (const auto& g : guards)
    if (!g.holds(x)) return g.description;
  for (double v : x)
    if (!std::isfinite(v)) return std::string("finite coordinates");
  return std::nullopt;
}

ChartPoint Chart::point(const Point4& x) const {
  return ChartPoint{x, id, !violated_guard(x).has_value()};
}

void Chart::require_valid(const ChartPoint& p) const {
  if (p.chart_id != id)
    throw ContractViolation("point on chart '" + p.chart_id + "' passed to a field on chart '" +
                            id + "'");
  if (auto g = violated_guard(p.coords)) throw DomainError("guard violated: " + *g + " at " + describe(p));
}

Jet2 seed_coordinate(const ChartPoint& p, int index) {
  return Jet2::variable(p.coords.at(static_cast<size_t>(index)), index);
}

Coords seed(const ChartPoint& p) {
  Coords c;
  for (int i = 0; i < kDim; ++i) c[i] = Jet2::variable(p.coords[i], i);
  return c;
}

std::string describe(const ChartPoint& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%s: %.17g, %.17g, %.17g, %.17g)", p.chart_id.c_str(), p.coords[0],
                p.coords[1], p.coords[2], p.coords[3]);
  return buf;
}

Mat4 values(const Mat4J& m) {
  Mat4 r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i][j] = m[i][j].value();
  return r;
}

Vec4 values(const Vec4J& v) {
  Vec4 r;
  for (int i = 0; i < kDim; ++i) r[i] = v[i].value();
  return r;
}

Mat4 identity4() {
  Mat4 r{};
  for (int i = 0; i < kDim; ++i) r[i][i] = 1.0;
  return r;
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k)
      for (int j = 0; j < kDim; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat4 transpose(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i][j] = a[j][i];
  return r;
}

double max_abs(const Mat4& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const Vec4& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

namespace {

template <class T>
double value_of(const T& x) {
  if constexpr (std::is_same_v<T, double>)
    return x;
  else
    return x.value();
}

template <class T>
std::array<std::array<T, kDim>, kDim> gauss_jordan(std::array<std::array<T, kDim>, kDim> a) {
  double scale = 0.0;
  for (const auto& row : a)
    for (const auto& v : row) scale = std::max(scale, std::abs(value_of(v)));
  std::array<std::array<T, kDim>, kDim> inv;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) inv[i][j] = T(i == j ? 1.0 : 0.0);

  double det = 1.0;
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kDim; ++r)
      if (std::abs(value_of(a[r][col])) > std::abs(value_of(a[pivot][col]))) pivot = r;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    const T p = a[col][col];
    det *= value_of(p);
    if (value_of(p) == 0.0) throw SingularityError("matrix is singular (zero pivot)");
    for (int j = 0; j < kDim; ++j) {
      a[col][j] = a[col][j] / p;
      inv[col][j] = inv[col][j] / p;
    }
    for (int r = 0; r < kDim; ++r) {
      if (r == col) continue;
      const T f = a[r][col];
      if (value_of(f) == 0.0 && std::is_same_v<T, double>) continue;
      for (int j = 0; j < kDim; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  const double s4 = scale * scale * scale * scale;
  if (!(std::abs(det) >= 1e-12 * s4))
    throw SingularityError("matrix is numerically singular (|det| below 1e-12 of scale)");
  return inv;
}

}  // namespace

Mat4J invert(const Mat4J& m) { return gauss_jordan(m); }

Mat4 invert(const Mat4& m) { return gauss_jordan(m); }

double determinant(const Mat4& m) {
  Mat4 a = m;
  double det = 1.0;
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kDim; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < kDim; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int j = col; j < kDim; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace curvlab
