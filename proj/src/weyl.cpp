#include "curvlab/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvlab {

namespace {

int eps3(int i, int j, int k) {
  // Indices 1..3.
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

int label_leg(const std::string& label) {
  if (label.size() == 2 && label[0] == 'e' && label[1] >= '1' && label[1] <= '4') return label[1] - '1';
  throw ContractViolation("orientation label '" + label + "' is not one of e1..e4");
}

}  // namespace

Tensor4 frame_riemann(const CurvatureBundle& c, const Mat4& e) {
  // Contract one slot at a time: 4 * 4^5 multiply-adds.
  Tensor4 t1, t2;
  const Tensor4& R = c.riemann_lowered;
  for (int a = 0; a < kDim; ++a)
    for (int n = 0; n < kDim; ++n)
      for (int o = 0; o < kDim; ++o)
        for (int q = 0; q < kDim; ++q) {
          double s = 0.0;
          for (int m = 0; m < kDim; ++m) s += e[a][m] * R(m, n, o, q);
          t1(a, n, o, q) = s;
        }
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int o = 0; o < kDim; ++o)
        for (int q = 0; q < kDim; ++q) {
          double s = 0.0;
          for (int n = 0; n < kDim; ++n) s += e[b][n] * t1(a, n, o, q);
          t2(a, b, o, q) = s;
        }
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int cc = 0; cc < kDim; ++cc)
        for (int q = 0; q < kDim; ++q) {
          double s = 0.0;
          for (int o = 0; o < kDim; ++o) s += e[cc][o] * t2(a, b, o, q);
          t1(a, b, cc, q) = s;
        }
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int cc = 0; cc < kDim; ++cc)
        for (int d = 0; d < kDim; ++d) {
          double s = 0.0;
          for (int q = 0; q < kDim; ++q) s += e[d][q] * t1(a, b, cc, q);
          t2(a, b, cc, d) = s;
        }
  return t2;
}

Mat3 weyl_plus_matrix(const MetricField& metric, const ChartPoint& p, const FrameField& frame) {
  return weyl_plus_matrix(metric, curvature(metric, p), p, frame);
}

Mat3 weyl_plus_matrix(const MetricField& metric, const CurvatureBundle& c, const ChartPoint& p,
                      const FrameField& frame) {
  const double gram = orthonormality_residual(frame, metric, p);
  if (!(gram <= 1e-8))
    throw ContractViolation("weyl_plus_matrix: frame '" + frame.name + "' is not orthonormal at " +
                            describe(p) + " (Gram deviation " + std::to_string(gram) + ")");
  const FrameAt f = frame_at(frame, p);
  Mat4 legs{};
  Mat4 co{};
  for (int a = 0; a < kDim; ++a) {
    const int src = label_leg(metric.orientation.labels[a]);
    for (int mu = 0; mu < kDim; ++mu) {
      legs[a][mu] = f.vectors[src][mu].value();
      co[a][mu] = f.coframe[src][mu].value();
    }
  }
  const int induced = determinant(co) > 0 ? 1 : -1;
  if (induced != metric.orientation.sign)
    throw ContractViolation("weyl_plus_matrix: coframe orientation disagrees with metric '" + metric.name +
                            "' orientation metadata at " + describe(p));

  const Tensor4 F = frame_riemann(c, legs);
  Mat3 A{};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      double v = F(0, i, 0, j);
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          v += 0.5 * eps3(j, k, l) * F(0, i, k, l);
          v += 0.5 * eps3(i, k, l) * F(k, l, 0, j);
        }
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
          for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l) v += 0.25 * eps3(i, m, n) * eps3(j, k, l) * F(m, n, k, l);
      A[i - 1][j - 1] = 0.5 * v;
    }
  return A;
}

Vec3 symmetric_eigenvalues(const Mat3& a) {
  const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
  const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
  Vec3 ev{};
  const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                    (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
  if (p2 == 0.0) return {q, q, q};
  const double p = std::sqrt(p2 / 6.0);
  Mat3 b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
  const double det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  const double r = std::clamp(det_b / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  ev[2] = q + 2.0 * p * std::cos(phi);
  ev[0] = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  ev[1] = 3.0 * q - ev[0] - ev[2];
  std::sort(ev.begin(), ev.end());
  return ev;
}

double frobenius2(const Mat3& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return s;
}

WeylSpectrum weyl_plus_spectrum(const Mat3& a, double scale) {
  WeylSpectrum w;
  w.eigenvalues = symmetric_eigenvalues(a);
  const Vec3& l = w.eigenvalues;
  w.trace = a[0][0] + a[1][1] + a[2][2];
  w.norm2 = l[0] * l[0] + l[1] * l[1] + l[2] * l[2];
  const double biggest = std::max({std::abs(l[0]), std::abs(l[1]), std::abs(l[2])});
  w.vanishes = biggest <= 1e-9 * scale;

  auto residual = [&](int pa, int pb, int other) {
    const double pair = std::abs(l[pa] - l[pb]);
    const double closure = std::abs(l[other] + l[pa] + l[pb]);
    return std::max(pair, closure) / std::max(1.0, std::abs(l[other]));
  };
  w.pattern_residual = std::min(residual(0, 1, 2), residual(1, 2, 0));
  w.pattern = w.pattern_residual <= 1e-7;
  return w;
}

}  // namespace curvlab
