#pragma once

#include <array>

#include "curvlab/jet.hpp"

namespace curvlab {

/// First-order jet. Used where a quantity is itself built from first
/// derivatives (Christoffel symbols, the Lee form) and only its gradient is
/// needed next, so the second-order channel of a Jet2 would be unavailable.
struct Jet1 {
  double value = 0.0;
  std::array<double, kDim> grad{};

  constexpr Jet1() noexcept = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr Jet1(double c) noexcept : value(c) {}
  constexpr Jet1(double v, const std::array<double, kDim>& g) noexcept : value(v), grad(g) {}

  /// Drops the Hessian of a Jet2.
  static Jet1 from(const Jet2& a) noexcept { return Jet1(a.value(), a.grad()); }

  /// The partial derivative d/dx^i of a Jet2, as a first-order jet (value from
  /// the gradient, gradient from the Hessian row).
  static Jet1 partial(const Jet2& a, int i) noexcept {
    std::array<double, kDim> g{};
    for (int j = 0; j < kDim; ++j) g[j] = a.hess(i, j);
    return Jet1(a.grad(i), g);
  }
};

inline Jet1 operator+(const Jet1& a, const Jet1& b) noexcept {
  Jet1 r(a.value + b.value);
  for (int i = 0; i < kDim; ++i) r.grad[i] = a.grad[i] + b.grad[i];
  return r;
}

inline Jet1 operator-(const Jet1& a, const Jet1& b) noexcept {
  Jet1 r(a.value - b.value);
  for (int i = 0; i < kDim; ++i) r.grad[i] = a.grad[i] - b.grad[i];
  return r;
}

inline Jet1 operator-(const Jet1& a) noexcept {
  Jet1 r(-a.value);
  for (int i = 0; i < kDim; ++i) r.grad[i] = -a.grad[i];
  return r;
}

inline Jet1 operator*(const Jet1& a, const Jet1& b) noexcept {
  Jet1 r(a.value * b.value);
  for (int i = 0; i < kDim; ++i) r.grad[i] = a.value * b.grad[i] + b.value * a.grad[i];
  return r;
}

inline Jet1 operator*(double s, const Jet1& a) noexcept {
  Jet1 r(s * a.value);
  for (int i = 0; i < kDim; ++i) r.grad[i] = s * a.grad[i];
  return r;
}

}  // namespace curvlab
