#include "curvlab/forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace curvlab {

namespace {

struct FormTables {
  std::array<std::array<IndexTuple, 6>, kDim + 1> tuples{};

  FormTables() {
    for (int degree = 0; degree <= kDim; ++degree) {
      int k = 0;
      for (int mask = 0; mask < (1 << kDim); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != degree) continue;
        IndexTuple t{-1, -1, -1, -1};
        int n = 0;
        for (int i = 0; i < kDim; ++i)
          if (mask & (1 << i)) t[n++] = i;
        tuples[degree][k++] = t;
      }
      std::sort(tuples[degree].begin(), tuples[degree].begin() + k);
    }
  }
};

const FormTables& tables() {
  static const FormTables t;
  return t;
}

template <class T>
Form<T> wedge_impl(const Form<T>& a, const Form<T>& b) {
  const int p = a.degree();
  const int q = b.degree();
  if (p + q > kDim) throw ContractViolation("wedge: degree " + std::to_string(p + q) + " exceeds 4");
  Form<T> out(p + q);
  for (int i = 0; i < a.size(); ++i) {
    const IndexTuple I = form_tuple(p, i);
    for (int j = 0; j < b.size(); ++j) {
      const IndexTuple J = form_tuple(q, j);
      std::array<int, kDim> idx{};
      for (int s = 0; s < p; ++s) idx[s] = I[s];
      for (int s = 0; s < q; ++s) idx[p + s] = J[s];
      out.add(std::span<const int>(idx.data(), static_cast<size_t>(p + q)), a[i] * b[j]);
    }
  }
  return out;
}

template <class T>
Form<T> combine(const Form<T>& a, const Form<T>& b, double sb) {
  if (a.degree() != b.degree()) throw ContractViolation("form sum: degree mismatch");
  Form<T> out(a.degree());
  for (int i = 0; i < a.size(); ++i) out[i] = sb > 0 ? a[i] + b[i] : a[i] - b[i];
  return out;
}

// Totally antisymmetric symbol on four indices.
int levi_civita4(int a, int b, int c, int d) {
  IndexTuple t{a, b, c, d};
  return detail::sort_with_sign(t, kDim);
}

}  // namespace

IndexTuple form_tuple(int degree, int k) {
  if (k < 0 || k >= form_size(degree)) throw ContractViolation("form_tuple: slot out of range");
  return tables().tuples[degree][k];
}

int form_slot(int degree, const IndexTuple& sorted) {
  const auto& row = tables().tuples[degree];
  for (int k = 0; k < form_size(degree); ++k) {
    bool same = true;
    for (int s = 0; s < degree; ++s) same = same && row[k][s] == sorted[s];
    if (same) return k;
  }
  return -1;
}

FormD values(const FormJ& a) {
  FormD out(a.degree());
  for (int i = 0; i < a.size(); ++i) out[i] = a[i].value();
  return out;
}

FormJ form_at(const KFormField& a, const ChartPoint& p) {
  if (a.chart_id != p.chart_id)
    throw ContractViolation("form '" + a.name + "' lives on chart '" + a.chart_id + "', point is on '" +
                            p.chart_id + "'");
  return at_point(p, [&] {
    FormJ f = a.coeffs(seed(p));
    if (f.degree() != a.degree) throw ContractViolation("form '" + a.name + "': coefficient degree mismatch");
    for (int i = 0; i < f.size(); ++i) require_finite(f[i], a.name);
    return f;
  });
}

FormD wedge(const FormD& a, const FormD& b) { return wedge_impl(a, b); }
FormJ wedge(const FormJ& a, const FormJ& b) { return wedge_impl(a, b); }

KFormField wedge(const KFormField& a, const KFormField& b) {
  if (a.chart_id != b.chart_id) throw ContractViolation("wedge: forms live on different charts");
  if (a.degree + b.degree > kDim)
    throw ContractViolation("wedge: degree " + std::to_string(a.degree + b.degree) + " exceeds 4");
  KFormField out;
  out.name = a.name + "^" + b.name;
  out.degree = a.degree + b.degree;
  out.chart_id = a.chart_id;
  out.coeffs = [fa = a.coeffs, fb = b.coeffs](const Coords& x) { return wedge_impl(fa(x), fb(x)); };
  return out;
}

FormD scale(const FormD& a, double s) {
  FormD out(a.degree());
  for (int i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

FormD operator+(const FormD& a, const FormD& b) { return combine(a, b, 1.0); }
FormD operator-(const FormD& a, const FormD& b) { return combine(a, b, -1.0); }
FormJ operator+(const FormJ& a, const FormJ& b) { return combine(a, b, 1.0); }
FormJ operator-(const FormJ& a, const FormJ& b) { return combine(a, b, -1.0); }

FormD exterior_derivative(const FormJ& a) {
  const int k = a.degree();
  if (k >= kDim) throw ContractViolation("exterior_derivative: degree must be at most 3");
  FormD out(k + 1);
  for (int i = 0; i < a.size(); ++i) {
    const IndexTuple I = form_tuple(k, i);
    for (int mu = 0; mu < kDim; ++mu) {
      std::array<int, kDim> idx{mu};
      for (int s = 0; s < k; ++s) idx[s + 1] = I[s];
      out.add(std::span<const int>(idx.data(), static_cast<size_t>(k + 1)), a[i].grad(mu));
    }
  }
  return out;
}

FormD exterior_derivative(const KFormField& a, const ChartPoint& p) {
  return exterior_derivative(form_at(a, p));
}

FormD second_exterior_derivative(const FormJ& a) {
  const int k = a.degree();
  if (k + 2 > kDim) throw ContractViolation("second_exterior_derivative: degree must be at most 2");
  FormD out(k + 2);
  for (int i = 0; i < a.size(); ++i) {
    const IndexTuple I = form_tuple(k, i);
    for (int mu = 0; mu < kDim; ++mu)
      for (int nu = 0; nu < kDim; ++nu) {
        std::array<int, kDim> idx{mu, nu};
        for (int s = 0; s < k; ++s) idx[s + 2] = I[s];
        out.add(std::span<const int>(idx.data(), static_cast<size_t>(k + 2)), a[i].hess(mu, nu));
      }
  }
  return out;
}

FormD exterior_derivative(const std::array<Jet1, kDim>& one_form) {
  FormD out(2);
  for (int mu = 0; mu < kDim; ++mu)
    for (int nu = 0; nu < kDim; ++nu) {
      if (mu == nu) continue;
      const int idx[] = {mu, nu};
      out.add(idx, one_form[nu].grad[mu]);
    }
  return out;
}

FormD hodge_star(const FormD& a, const Mat4& g, int orientation_sign) {
  if (a.degree() != 2) throw ContractViolation("hodge_star: expects a 2-form");
  const Mat4 gi = invert(g);
  const double vol = std::sqrt(std::abs(determinant(g)));
  Mat4 up{};
  for (int m = 0; m < kDim; ++m)
    for (int n = 0; n < kDim; ++n) {
      double s = 0.0;
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) s += gi[m][i] * gi[n][j] * a(i, j);
      up[m][n] = s;
    }
  FormD out(2);
  for (int k = 0; k < out.size(); ++k) {
    const IndexTuple t = form_tuple(2, k);
    double s = 0.0;
    for (int m = 0; m < kDim; ++m)
      for (int n = 0; n < kDim; ++n) s += levi_civita4(m, n, t[0], t[1]) * up[m][n];
    out[k] = 0.5 * orientation_sign * vol * s;
  }
  return out;
}

FormD hodge_star(const FormD& a, const MetricField& metric, const ChartPoint& p) {
  if (metric.signature != Signature::riemannian)
    throw ContractViolation("hodge_star: only Riemannian metrics are supported");
  return hodge_star(a, values(metric_at(metric, p)), metric.orientation.sign);
}

double inner2(const FormD& a, const FormD& b, const Mat4& g_inv) {
  double s = 0.0;
  for (int m = 0; m < kDim; ++m)
    for (int n = 0; n < kDim; ++n)
      for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) s += a(m, n) * g_inv[m][i] * g_inv[n][j] * b(i, j);
  return 0.5 * s;
}

FormD self_dual_part(const FormD& a, const Mat4& g, int orientation_sign) {
  return scale(a + hodge_star(a, g, orientation_sign), 0.5);
}

FormD anti_self_dual_part(const FormD& a, const Mat4& g, int orientation_sign) {
  return scale(a - hodge_star(a, g, orientation_sign), 0.5);
}

double max_abs(const FormD& a) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

SelfDualBasis self_dual_basis(const std::array<FormD, kDim>& e) {
  for (const auto& f : e)
    if (f.degree() != 1) throw ContractViolation("self_dual_basis: coframe legs must be 1-forms");
  SelfDualBasis b;
  const FormD e12 = wedge(e[0], e[1]), e34 = wedge(e[2], e[3]);
  const FormD e13 = wedge(e[0], e[2]), e42 = wedge(e[3], e[1]);
  const FormD e14 = wedge(e[0], e[3]), e23 = wedge(e[1], e[2]);
  b.plus = {e12 + e34, e13 + e42, e14 + e23};
  b.minus = {e12 - e34, e13 - e42, e14 - e23};
  return b;
}

double structure_equation_residual(const std::array<FormJ, 3>& sigma, int sign) {
  double worst = 0.0;
  double scale_ref = 1.0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const FormD lhs = exterior_derivative(sigma[i]);
    // eps_ijk s_j ^ s_k summed over j, k is twice the cyclic term.
    const FormD rhs = scale(wedge(values(sigma[j]), values(sigma[k])), 2.0 * sign);
    worst = std::max(worst, max_abs(lhs - rhs));
    scale_ref = std::max({scale_ref, max_abs(lhs), max_abs(rhs)});
  }
  return worst / scale_ref;
}

}  // namespace curvlab
