#include "curvlab/jet.hpp"

#include <string>

namespace curvlab {

namespace {

// A sum of non-finite numbers is non-finite, so one isfinite covers all channels.
bool channels_finite(const Jet2& a) noexcept {
  double s = a.value();
  for (double g : a.grad()) s += g;
  for (double h : a.hess_packed()) s += h;
  if (std::isfinite(s)) return true;
  // The sum may overflow on finite inputs; confirm channel by channel.
  if (!std::isfinite(a.value())) return false;
  for (double g : a.grad())
    if (!std::isfinite(g)) return false;
  for (double h : a.hess_packed())
    if (!std::isfinite(h)) return false;
  return true;
}

[[noreturn]] void domain_fail(std::string_view fn, const std::string& detail) {
  throw DomainError(std::string(fn) + ": " + detail);
}

}  // namespace

Jet2 Jet2::variable(double value, int index) {
  if (index < 0 || index >= kDim)
    throw ContractViolation("Jet2::variable: coordinate index " + std::to_string(index) +
                            " outside 0..3");
  Grad g{};
  g[static_cast<size_t>(index)] = 1.0;
  return Jet2(value, g, Hess{});
}

bool Jet2::finite() const noexcept { return channels_finite(*this); }

Jet2 Jet2::chain(double f, double df, double d2f) const noexcept {
  Grad g{};
  Hess h{};
  for (int i = 0; i < kDim; ++i) g[i] = df * grad_[i];
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      const int k = hess_index(i, j);
      h[k] = df * hess_[k] + d2f * grad_[i] * grad_[j];
    }
  return Jet2(f, g, h);
}

void require_finite(const Jet2& a, std::string_view op) {
  if (!channels_finite(a)) domain_fail(op, "consumed a non-finite jet");
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  require_finite(a, "add");
  require_finite(b, "add");
  Jet2::Grad g;
  Jet2::Hess h;
  for (int i = 0; i < kDim; ++i) g[i] = a.grad()[i] + b.grad()[i];
  for (int k = 0; k < kHessSize; ++k) h[k] = a.hess_packed()[k] + b.hess_packed()[k];
  return Jet2(a.value() + b.value(), g, h);
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  require_finite(a, "sub");
  require_finite(b, "sub");
  Jet2::Grad g;
  Jet2::Hess h;
  for (int i = 0; i < kDim; ++i) g[i] = a.grad()[i] - b.grad()[i];
  for (int k = 0; k < kHessSize; ++k) h[k] = a.hess_packed()[k] - b.hess_packed()[k];
  return Jet2(a.value() - b.value(), g, h);
}

Jet2 operator-(const Jet2& a) {
  require_finite(a, "neg");
  Jet2::Grad g;
  Jet2::Hess h;
  for (int i = 0; i < kDim; ++i) g[i] = -a.grad()[i];
  for (int k = 0; k < kHessSize; ++k) h[k] = -a.hess_packed()[k];
  return Jet2(-a.value(), g, h);
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  require_finite(a, "mul");
  require_finite(b, "mul");
  const double av = a.value();
  const double bv = b.value();
  const auto& ag = a.grad();
  const auto& bg = b.grad();
  Jet2::Grad g;
  Jet2::Hess h;
  for (int i = 0; i < kDim; ++i) g[i] = av * bg[i] + bv * ag[i];
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      const int k = hess_index(i, j);
      h[k] = av * b.hess_packed()[k] + bv * a.hess_packed()[k] + ag[i] * bg[j] + ag[j] * bg[i];
    }
  return Jet2(av * bv, g, h);
}

// Quotient rule written so that a/a is exactly (1, 0, 0).
Jet2 operator/(const Jet2& a, const Jet2& b) {
  require_finite(a, "div");
  require_finite(b, "div");
  const double bv = b.value();
  if (bv == 0.0) domain_fail("div", "division by a jet with zero value");
  const double q = a.value() / bv;
  Jet2::Grad g;
  for (int i = 0; i < kDim; ++i) g[i] = (a.grad()[i] - q * b.grad()[i]) / bv;
  Jet2::Hess h;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      const int k = hess_index(i, j);
      h[k] = (a.hess_packed()[k] - q * b.hess_packed()[k] - g[i] * b.grad()[j] -
              g[j] * b.grad()[i]) /
             bv;
    }
  return Jet2(q, g, h);
}

Jet2 sin(const Jet2& a) {
  require_finite(a, "sin");
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  return a.chain(s, c, -s);
}

Jet2 cos(const Jet2& a) {
  require_finite(a, "cos");
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  return a.chain(c, -s, -c);
}

Jet2 tan(const Jet2& a) {
  require_finite(a, "tan");
  const double c = std::cos(a.value());
  if (c == 0.0) domain_fail("tan", "cos(argument) is zero");
  const double t = std::tan(a.value());
  const double sec2 = 1.0 + t * t;
  return a.chain(t, sec2, 2.0 * t * sec2);
}

Jet2 cot(const Jet2& a) {
  require_finite(a, "cot");
  const double s = std::sin(a.value());
  if (s == 0.0) domain_fail("cot", "sin(argument) is zero");
  const double ct = std::cos(a.value()) / s;
  const double csc2 = 1.0 + ct * ct;
  return a.chain(ct, -csc2, 2.0 * ct * csc2);
}

Jet2 sqrt(const Jet2& a) {
  require_finite(a, "sqrt");
  if (!(a.value() > 0.0)) domain_fail("sqrt", "argument must be positive");
  const double r = std::sqrt(a.value());
  return a.chain(r, 0.5 / r, -0.25 / (r * a.value()));
}

Jet2 exp(const Jet2& a) {
  require_finite(a, "exp");
  const double e = std::exp(a.value());
  return a.chain(e, e, e);
}

Jet2 log(const Jet2& a) {
  require_finite(a, "log");
  if (!(a.value() > 0.0)) domain_fail("log", "argument must be positive");
  const double x = a.value();
  return a.chain(std::log(x), 1.0 / x, -1.0 / (x * x));
}

Jet2 pow(const Jet2& a, double exponent) {
  require_finite(a, "pow");
  const double x = a.value();
  const bool integral = std::floor(exponent) == exponent;
  if (x < 0.0 && !integral) domain_fail("pow", "negative base with non-integer exponent");
  if (x == 0.0 && exponent < 2.0 && exponent != 0.0 && exponent != 1.0)
    domain_fail("pow", "zero base with exponent below 2");
  if (exponent == 0.0) return Jet2(1.0);
  if (exponent == 1.0) return a;
  const double f = std::pow(x, exponent);
  const double df = exponent * std::pow(x, exponent - 1.0);
  const double d2f = exponent * (exponent - 1.0) * std::pow(x, exponent - 2.0);
  return a.chain(f, df, d2f);
}

Jet2 square(const Jet2& a) { return a * a; }

}  // namespace curvlab
