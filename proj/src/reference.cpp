#include "curvlab/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab::reference {

namespace {

void put(FormD& w, int i, int j, double v) {
  const int idx[] = {i, j};
  w.add(idx, v);
}

enum { R = 0, T = 1, F = 2, S = 3 };

}  // namespace

Mat4 chart_from_printed(const Mat4& printed, const std::array<int, kDim>& perm) {
  Mat4 j{};
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) j[perm[k]][perm[i]] = printed[i][k];
  return j;
}

Mat4 taub_nut_printed_j(int which, double rho, double th, double ph) {
  const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
  const double cot = ct / st, q = 1 + rho, b = 1 + rho * st * st;
  const double c = (rho * (2 + rho) * st * st + 1) / (q * st);
  switch (which) {
    case 1:
      return {{{0, 1 / rho, 0, ct},
               {-rho * b / q, 0, -rho * ct * st / q, 0},
               {0, cot, 0, -b / st},
               {-rho * ct / q, 0, st / q, 0}}};
    case 2:
      return {{{0, -cp * cot / rho, -sp / rho, b * cp / (rho * st)},
               {rho * rho * std::sin(2 * th) * cp / (2 * q), sp * cot / q, -b * cp / q, -c * sp},
               {rho * sp, cp, 0, rho * ct * cp},
               {-rho * cp * st / q, sp / (q * st), -ct * cp / q, -cot * sp / q}}};
    case 3:
      return {{{0, sp * cot / rho, -cp / rho, -b * sp / (rho * st)},
               {-rho * rho * std::sin(2 * th) * sp / (2 * q), cp * cot / q, b * sp / q, -c * cp},
               {rho * cp, -sp, 0, -rho * ct * sp},
               {rho * sp * st / q, cp / (q * st), ct * sp / q, -cot * cp / q}}};
    default:
      throw std::invalid_argument("taub_nut_printed_j: which must be 1, 2 or 3");
  }
}

FormD taub_nut_omega(int which, double rho, double th, double ph) {
  const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
  FormD w(2);
  switch (which) {
    case 1:
      put(w, R, S, ct / 4);
      put(w, T, F, rho * rho * st * ct / 4);
      put(w, T, S, -rho * st / 4);
      put(w, R, F, rho * st * st / 4 + 0.25);
      break;
    case 2:
      put(w, T, R, (1 + rho) * sp / 4);
      put(w, T, F, rho * cp * (1 + rho * st * st) / 4);
      put(w, T, S, rho * cp * ct / 4);
      put(w, R, F, -rho * cp * ct * st / 4);
      put(w, R, S, cp * st / 4);
      put(w, F, S, -rho * sp * st / 4);
      break;
    case 3:
      put(w, T, R, (1 + rho) * cp / 4);
      put(w, T, F, -rho * sp * (1 + rho * st * st) / 4);
      put(w, R, F, rho * sp * ct * st / 4);
      put(w, T, S, -rho * sp * ct / 4);
      put(w, R, S, -sp * st / 4);
      put(w, F, S, -rho * cp * st / 4);
      break;
    default:
      throw std::invalid_argument("taub_nut_omega: which must be 1, 2 or 3");
  }
  return w;
}

Vec4 taub_nut_bracket(int a, int b, double rho, double th, double ph) {
  const double st = std::sin(th), ct = std::cos(th), sp = std::sin(ph), cp = std::cos(ph);
  const double q = rho * (1 + rho) * (1 + rho), p = rho * (1 + rho);
  const double u = (st * st * (1 + 2 * rho) + 1) / (rho * st * (1 + rho) * (1 + rho));
  const int key = 10 * a + b;
  switch (key) {
    case 1: return {0, 0, 2 / q, 2 * (1 + 2 * rho) * ct / q};
    case 3: return {0, 0, 0, -2 * cp * st / p};
    case 13: return {0, 0, 0, -2 * sp * st / p};
    case 23: return {0, 0, 0, -2 * ct / p};
    case 2: return {0, -2 * cp / q, 2 * (ct / st) * sp / q, -2 * sp * u};
    case 12: return {0, -2 * sp / q, -2 * (ct / st) * cp / q, 2 * cp * u};
    default: throw std::invalid_argument("taub_nut_bracket: legs must satisfy 0 <= a < b < 4");
  }
}

Mat4 kerr_printed_j(double M, double alpha, double r, double th) {
  const double st = std::sin(th), ct = std::cos(th);
  const double delta = r * r - 2 * M * r - alpha * alpha, xi = r * r - alpha * alpha * ct * ct;
  return {{{0, -delta / xi, -alpha * st / xi, 0},
           {(r * r - alpha * alpha) / delta, 0, 0, -alpha / delta},
           {alpha * st, 0, 0, 1 / st},
           {0, alpha * delta * st * st / xi, st * (alpha * alpha - r * r) / xi, 0}}};
}

FormD kerr_omega(double alpha, double r, double th) {
  enum { Rr = 0, Th = 1, Ph = 2, Tt = 3 };
  const double st = std::sin(th);
  FormD w(2);
  put(w, Rr, Tt, 1.0);
  put(w, Rr, Ph, -alpha * st * st);
  put(w, Tt, Th, -alpha * st);
  put(w, Th, Ph, (r * r - alpha * alpha) * st);
  return w;
}

FormD kerr_d_omega(double alpha, double r, double th) {
  FormD w(3);
  const int idx[] = {0, 1, 2};
  w.add(idx, 2 * (r + alpha * std::cos(th)) * std::sin(th));
  return w;
}

FormD kerr_scaled_omega(double alpha, double r, double th) {
  return scale(kerr_omega(alpha, r, th), kerr_lee_factor(alpha, r, th));
}

Vec4 kerr_lee_form(double alpha, double r, double th) {
  const double rho = r - alpha * std::cos(th);
  return {2 / rho, 2 * alpha * std::sin(th) / rho, 0, 0};
}

double kerr_lee_potential(double alpha, double r, double th) {
  const double rho = r - alpha * std::cos(th);
  return std::log(rho * rho);
}

double kerr_lee_factor(double alpha, double r, double th) {
  const double rho = r - alpha * std::cos(th);
  return 1 / (rho * rho);
}

Vec3 kerr_weyl_plus_eigenvalues(double M, double alpha, double r, double th) {
  const double rho = r - alpha * std::cos(th);
  const double k = M / (rho * rho * rho);
  return {-k, -k, 2 * k};
}

double kerr_weyl_factor(double M, double alpha, double r, double th) {
  const double rho = r - alpha * std::cos(th);
  return std::cbrt(6.0) * std::cbrt(M * M) / (rho * rho);
}

double kerr_factor_ratio(double M) { return 1 / (std::cbrt(6.0) * std::cbrt(M * M)); }

Vec4 kerr_scaled_bracket(int a, int b, double M, double alpha, double r, double th) {
  const double st = std::sin(th), ct = std::cos(th);
  const double delta = r * r - 2 * M * r - alpha * alpha, xi = r * r - alpha * alpha * ct * ct;
  const double rp = r + alpha * ct, d2 = rp * rp, sd = std::sqrt(delta);
  const int key = 10 * a + b;
  switch (key) {
    case 1: return {-alpha * sd * r * st / d2, alpha * sd * ct / d2, 0, 0};
    case 13: {
      const double k = r * alpha * st / (sd * d2);
      return {0, 0, -alpha * k, (r * r - alpha * alpha) * k};
    }
    case 2: {
      const double k = alpha * sd * (ct / st) / d2;
      return {0, 0, k, alpha * st * st * k};
    }
    case 23: return {0, 0, 0, 0};
    case 3:
      return {0, 0, -(alpha * alpha * ct * delta + alpha * xi * (M - r)) / (delta * d2),
              (alpha * ct * delta * (r * r - alpha * alpha) + xi * (delta * r - M * (r * r + alpha * alpha))) /
                  (delta * d2)};
    case 12:
      return {0, 0, (alpha * r - xi * (ct / st) / st) / d2, (-r * r * r + xi * rp + alpha * alpha * r) / d2};
    default: throw std::invalid_argument("kerr_scaled_bracket: legs must satisfy 0 <= a < b < 4");
  }
}

}  // namespace curvlab::reference
