#pragma once

// Second-order forward-mode jets over the four chart coordinates.

#include <array>
#include <cmath>
#include <string_view>

#include "curvlab/errors.hpp"

namespace curvlab {

inline constexpr int kDim = 4;

/// Position of (i, j) in the packed upper triangle of a symmetric 4x4 matrix.
constexpr int hess_index(int i, int j) noexcept {
  if (i > j) {
    const int t = i;
    i = j;
    j = t;
  }
  return i * kDim - i * (i - 1) / 2 + (j - i);
}

inline constexpr int kHessSize = kDim * (kDim + 1) / 2;

/// Value, gradient and Hessian of a scalar function of the chart coordinates.
///
/// Jets are values: every operation returns a new jet and never mutates its
/// operands. The Hessian is stored as its 10 unique entries so symmetry holds
/// bit for bit.
class Jet2 {
 public:
  using Grad = std::array<double, kDim>;
  using Hess = std::array<double, kHessSize>;

  constexpr Jet2() noexcept = default;
  // NOLINTNEXTLINE(google-explicit-constructor): constants promote freely
  constexpr Jet2(double constant) noexcept : value_(constant) {}
  constexpr Jet2(double value, const Grad& grad, const Hess& hess) noexcept
      : value_(value), grad_(grad), hess_(hess) {}

  /// Jet of the coordinate function x^index evaluated at `value`.
  static Jet2 variable(double value, int index);

  constexpr double value() const noexcept { return value_; }
  constexpr const Grad& grad() const noexcept { return grad_; }
  constexpr double grad(int i) const noexcept { return grad_[static_cast<size_t>(i)]; }
  constexpr const Hess& hess_packed() const noexcept { return hess_; }
  constexpr double hess(int i, int j) const noexcept {
    return hess_[static_cast<size_t>(hess_index(i, j))];
  }

  /// True when every channel is finite.
  bool finite() const noexcept;

  /// Applies a scalar function given its value and first two derivatives at value().
  Jet2 chain(double f, double df, double d2f) const noexcept;

 private:
  double value_ = 0.0;
  Grad grad_{};
  Hess hess_{};
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 tan(const Jet2& a);
Jet2 cot(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
/// a^exponent for a constant real exponent. Non-integer exponents need a > 0.
Jet2 pow(const Jet2& a, double exponent);
Jet2 square(const Jet2& a);

/// Throws DomainError naming `op` when any channel of `a` is NaN or infinite.
void require_finite(const Jet2& a, std::string_view op);

}  // namespace curvlab
