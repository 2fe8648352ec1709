#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "curvlab/chart.hpp"
#include "curvlab/jet1.hpp"
#include "curvlab/metric.hpp"

namespace curvlab {

/// Number of strictly increasing index tuples of length `degree` from {0..3}.
constexpr int form_size(int degree) noexcept {
  constexpr int sizes[] = {1, 4, 6, 4, 1};
  return (degree >= 0 && degree <= kDim) ? sizes[degree] : 0;
}

using IndexTuple = std::array<int, kDim>;

/// The k-th strictly increasing tuple of the given degree (unused slots are -1).
IndexTuple form_tuple(int degree, int k);

/// Storage slot of a strictly increasing tuple, or -1.
int form_slot(int degree, const IndexTuple& sorted);

/// A k-form at a point (or a jet-valued one), stored on strictly increasing
/// multi-indices: a = sum_{I increasing} a_I dx^I.
template <class T>
class Form {
 public:
  Form() = default;
  explicit Form(int degree) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw ContractViolation("form degree must be in 0..4");
    c_.fill(T(0.0));
  }

  int degree() const noexcept { return degree_; }
  int size() const noexcept { return form_size(degree_); }

  T& operator[](int k) { return c_[static_cast<size_t>(k)]; }
  const T& operator[](int k) const { return c_[static_cast<size_t>(k)]; }

  /// Fully antisymmetric component a_{i1...ik} for arbitrary indices.
  T component(std::span<const int> idx) const;
  T operator()(int i, int j) const {
    const int idx[] = {i, j};
    return component(idx);
  }

  /// Adds `v` to the antisymmetric component at `idx` (any order, sign-corrected).
  void add(std::span<const int> idx, const T& v);

 private:
  int degree_ = 0;
  std::array<T, 6> c_{};
};

namespace detail {

/// Sorts idx in place (length k) and returns the permutation sign, or 0 on a repeated index.
inline int sort_with_sign(IndexTuple& idx, int k) {
  int sign = 1;
  for (int i = 1; i < k; ++i)
    for (int j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (int i = 1; i < k; ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace detail

template <class T>
T Form<T>::component(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_) throw ContractViolation("form component arity mismatch");
  IndexTuple t{-1, -1, -1, -1};
  for (int i = 0; i < degree_; ++i) t[i] = idx[i];
  const int sign = detail::sort_with_sign(t, degree_);
  if (sign == 0) return T(0.0);
  const T& v = c_[static_cast<size_t>(form_slot(degree_, t))];
  return sign > 0 ? v : T(0.0) - v;
}

template <class T>
void Form<T>::add(std::span<const int> idx, const T& v) {
  if (static_cast<int>(idx.size()) != degree_) throw ContractViolation("form component arity mismatch");
  IndexTuple t{-1, -1, -1, -1};
  for (int i = 0; i < degree_; ++i) t[i] = idx[i];
  const int sign = detail::sort_with_sign(t, degree_);
  if (sign == 0) return;
  T& slot = c_[static_cast<size_t>(form_slot(degree_, t))];
  slot = sign > 0 ? slot + v : slot - v;
}

using FormD = Form<double>;
using FormJ = Form<Jet2>;

FormD values(const FormJ& a);

/// A k-form field: coefficient jets as a function of the coordinate jets.
struct KFormField {
  std::string name;
  int degree = 0;
  std::string chart_id;
  std::function<FormJ(const Coords&)> coeffs;
};

/// Coefficient jets at p.
FormJ form_at(const KFormField& a, const ChartPoint& p);

/// Graded-antisymmetric product; throws ContractViolation when degrees sum above 4.
FormD wedge(const FormD& a, const FormD& b);
FormJ wedge(const FormJ& a, const FormJ& b);
KFormField wedge(const KFormField& a, const KFormField& b);

FormD scale(const FormD& a, double s);
FormD operator+(const FormD& a, const FormD& b);
FormD operator-(const FormD& a, const FormD& b);
FormJ operator+(const FormJ& a, const FormJ& b);
FormJ operator-(const FormJ& a, const FormJ& b);

/// (da) read from the coefficient gradients; no differencing.
FormD exterior_derivative(const FormJ& a);
FormD exterior_derivative(const KFormField& a, const ChartPoint& p);

/// d(da) read from the coefficient Hessians.
FormD second_exterior_derivative(const FormJ& a);

/// Exterior derivative of a 1-form given as first-order jets (e.g. the Lee form).
FormD exterior_derivative(const std::array<Jet1, kDim>& one_form);

/// Hodge star of a 2-form at a point: (*a)_{rs} = 1/2 sign sqrt|det g| eps_{mnrs} a^{mn}.
FormD hodge_star(const FormD& two_form, const Mat4& g, int orientation_sign);
FormD hodge_star(const FormD& two_form, const MetricField& metric, const ChartPoint& p);

/// Metric inner product of two 2-forms, <a, b> = sum_{m<n} a_{mn} b^{mn}.
double inner2(const FormD& a, const FormD& b, const Mat4& g_inv);

/// (1 + *)/2 and (1 - *)/2.
FormD self_dual_part(const FormD& a, const Mat4& g, int orientation_sign);
FormD anti_self_dual_part(const FormD& a, const Mat4& g, int orientation_sign);

/// Max |coefficient|.
double max_abs(const FormD& a);

/// Omega+/- built from four coframe 1-forms at a point:
/// plus  = {e1^e2 + e3^e4, e1^e3 + e4^e2, e1^e4 + e2^e3}, minus with the signs flipped.
struct SelfDualBasis {
  std::array<FormD, 3> plus;
  std::array<FormD, 3> minus;
};

SelfDualBasis self_dual_basis(const std::array<FormD, kDim>& coframe);

/// Residual of d sigma_i = sign * eps_ijk sigma_j ^ sigma_k (summed over j, k),
/// maximized over i and normalized by max(1, largest coefficient involved).
double structure_equation_residual(const std::array<FormJ, 3>& sigma, int sign = 1);

}  // namespace curvlab
