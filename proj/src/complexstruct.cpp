#include "curvlab/complexstruct.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace curvlab {

namespace {

void require_chart(const std::string& owner, const std::string& chart_id, const ChartPoint& p) {
  if (chart_id != p.chart_id)
    throw ContractViolation("'" + owner + "' lives on chart '" + chart_id + "', point is on '" + p.chart_id +
                            "'");
}

Vec4J mat_vec(const Mat4J& m, const Vec4J& v) {
  Vec4J out;
  for (int mu = 0; mu < kDim; ++mu) {
    Jet2 s;
    for (int s_ = 0; s_ < kDim; ++s_) s = s + m[mu][s_] * v[s_];
    out[mu] = s;
  }
  return out;
}

Vec4 mat_vec(const Mat4& m, const Vec4& v) {
  Vec4 out{};
  for (int mu = 0; mu < kDim; ++mu)
    for (int s = 0; s < kDim; ++s) out[mu] += m[mu][s] * v[s];
  return out;
}

Vec4 bracket(const Vec4J& x, const Vec4J& y) {
  Vec4 out{};
  for (int mu = 0; mu < kDim; ++mu) {
    double s = 0.0;
    for (int nu = 0; nu < kDim; ++nu) s += x[nu].value() * y[mu].grad(nu) - y[nu].value() * x[mu].grad(nu);
    out[mu] = s;
  }
  return out;
}

Vec4 add(const Vec4& a, const Vec4& b, double sb = 1.0) {
  Vec4 out{};
  for (int i = 0; i < kDim; ++i) out[i] = a[i] + sb * b[i];
  return out;
}

Mat4 product(const Mat4& a, const Mat4& b) { return multiply(a, b); }

double max_abs_diff(const Mat4& a, const Mat4& b, double sb) {
  double m = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) m = std::max(m, std::abs(a[i][j] + sb * b[i][j]));
  return m;
}

}  // namespace

Mat4J acs_at(const AlmostComplexField& j, const ChartPoint& p) {
  require_chart(j.label, j.chart_id, p);
  return at_point(p, [&] {
    Mat4J m = j.j(seed(p));
    for (const auto& row : m)
      for (const auto& c : row) require_finite(c, j.label);
    return m;
  });
}

Vec4J vector_at(const VectorField& v, const ChartPoint& p) {
  require_chart(v.name, v.chart_id, p);
  return at_point(p, [&] {
    Vec4J c = v.components(seed(p));
    for (const auto& x : c) require_finite(x, v.name);
    return c;
  });
}

VectorField coordinate_field(const std::string& chart_id, int mu) {
  if (mu < 0 || mu >= kDim) throw ContractViolation("coordinate_field: index out of range");
  VectorField v;
  v.name = "d" + std::to_string(mu);
  v.chart_id = chart_id;
  v.components = [mu](const Coords&) {
    Vec4J c;
    c[mu] = Jet2(1.0);
    return c;
  };
  return v;
}

VectorField frame_vector(const FrameField& frame, int a) {
  VectorField v;
  v.name = frame.name + ".e" + std::to_string(a + 1);
  v.chart_id = frame.chart_id;
  v.components = [vec = frame.vectors, a](const Coords& x) { return vec(x)[a]; };
  return v;
}

VectorField scaled(const ScalarField& f, const VectorField& x) {
  VectorField v;
  v.name = "f*" + x.name;
  v.chart_id = x.chart_id;
  v.components = [f, c = x.components](const Coords& q) {
    const Jet2 s = f(q);
    Vec4J out = c(q);
    for (auto& e : out) e = s * e;
    return out;
  };
  return v;
}

VectorField apply(const AlmostComplexField& j, const VectorField& x) {
  if (j.chart_id != x.chart_id) throw ContractViolation("apply: J and X live on different charts");
  VectorField v;
  v.name = j.label + "(" + x.name + ")";
  v.chart_id = x.chart_id;
  v.components = [jj = j.j, c = x.components](const Coords& q) { return mat_vec(jj(q), c(q)); };
  return v;
}

AlmostComplexField negated(const AlmostComplexField& j) {
  AlmostComplexField out;
  out.label = "-" + j.label;
  out.chart_id = j.chart_id;
  out.j = [jj = j.j](const Coords& q) {
    Mat4J m = jj(q);
    for (auto& row : m)
      for (auto& c : row) c = -c;
    return m;
  };
  return out;
}

AlmostComplexField acs_from_frame(std::string label, const FrameField& frame, const FrameMap& map) {
  AlmostComplexField out;
  out.label = std::move(label);
  out.chart_id = frame.chart_id;
  out.j = [vec = frame.vectors, co = frame.coframe, map](const Coords& q) {
    const Mat4J e = vec(q);
    const Mat4J th = co(q);
    Mat4J m;
    for (int a = 0; a < kDim; ++a) {
      const int b = map.target[a];
      const double s = map.sign[a];
      for (int mu = 0; mu < kDim; ++mu)
        for (int sg = 0; sg < kDim; ++sg) m[mu][sg] = m[mu][sg] + s * (e[b][mu] * th[a][sg]);
    }
    return m;
  };
  return out;
}

Vec4 lie_bracket(const VectorField& x, const VectorField& y, const ChartPoint& p) {
  return bracket(vector_at(x, p), vector_at(y, p));
}

double acs_residual(const Mat4& j) {
  const Mat4 sq = multiply(j, j);
  const double s = std::max(1.0, max_abs(j));
  return max_abs_diff(sq, identity4(), 1.0) / (s * s);
}

OmegaResult omega_from_j(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p,
                         double tol) {
  const Mat4 g = values(metric_at(metric, p));
  const Mat4 J = values(acs_at(j, p));
  Mat4 w{};
  for (int s = 0; s < kDim; ++s)
    for (int n = 0; n < kDim; ++n)
      for (int mu = 0; mu < kDim; ++mu) w[s][n] += g[mu][n] * J[mu][s];
  OmegaResult r;
  double sym = 0.0;
  for (int s = 0; s < kDim; ++s)
    for (int n = 0; n < kDim; ++n) sym = std::max(sym, std::abs(0.5 * (w[s][n] + w[n][s])));
  for (int k = 0; k < form_size(2); ++k) {
    const IndexTuple t = form_tuple(2, k);
    r.omega[k] = 0.5 * (w[t[0]][t[1]] - w[t[1]][t[0]]);
  }
  r.symmetric_residual = sym / std::max(1.0, max_abs(w));
  r.compatible = r.symmetric_residual < tol;
  return r;
}

KFormField kahler_form_field(const MetricField& metric, const AlmostComplexField& j) {
  if (metric.chart.id != j.chart_id) throw ContractViolation("kahler_form_field: chart mismatch");
  KFormField f;
  f.name = "omega[" + j.label + "]";
  f.degree = 2;
  f.chart_id = j.chart_id;
  f.coeffs = [g = metric.components, jj = j.j](const Coords& x) {
    const Mat4J gm = g(x);
    const Mat4J J = jj(x);
    FormJ w(2);
    for (int k = 0; k < form_size(2); ++k) {
      const IndexTuple t = form_tuple(2, k);
      Jet2 a, b;
      for (int mu = 0; mu < kDim; ++mu) {
        a = a + gm[mu][t[1]] * J[mu][t[0]];
        b = b + gm[mu][t[0]] * J[mu][t[1]];
      }
      w[k] = 0.5 * (a - b);
    }
    return w;
  };
  return f;
}

Mat4 j_from_omega(const MetricField& metric, const FormD& omega, const ChartPoint& p) {
  if (omega.degree() != 2) throw ContractViolation("j_from_omega: expects a 2-form");
  const Mat4 gi = values(inverse_metric_at(metric, p));
  Mat4 J{};
  for (int a = 0; a < kDim; ++a)
    for (int s = 0; s < kDim; ++s)
      for (int n = 0; n < kDim; ++n) J[a][s] += gi[n][a] * omega(s, n);
  return J;
}

AlmostComplexField acs_from_omega(std::string label, const MetricField& metric, const KFormField& omega) {
  if (omega.degree != 2) throw ContractViolation("acs_from_omega: expects a 2-form field");
  AlmostComplexField out;
  out.label = std::move(label);
  out.chart_id = omega.chart_id;
  out.j = [g = metric.components, w = omega.coeffs](const Coords& x) {
    const Mat4J gi = invert(g(x));
    const FormJ om = w(x);
    Mat4J J;
    for (int a = 0; a < kDim; ++a)
      for (int s = 0; s < kDim; ++s)
        for (int n = 0; n < kDim; ++n) J[a][s] = J[a][s] + gi[n][a] * om(s, n);
    return J;
  };
  return out;
}

double vector_norm(const Vec4& v, const Mat4& g) {
  double s = 0.0;
  for (int m = 0; m < kDim; ++m)
    for (int n = 0; n < kDim; ++n) s += g[m][n] * v[m] * v[n];
  return std::sqrt(std::abs(s));
}

NijenhuisTerms nijenhuis_terms(const AlmostComplexField& j, const VectorField& x, const VectorField& y,
                               const ChartPoint& p, const Mat4& g) {
  const Mat4J Jj = acs_at(j, p);
  const Mat4 J = values(Jj);
  const Vec4J X = vector_at(x, p);
  const Vec4J Y = vector_at(y, p);
  const Vec4J JX = at_point(p, [&] { return mat_vec(Jj, X); });
  const Vec4J JY = at_point(p, [&] { return mat_vec(Jj, Y); });
  const Vec4 t1 = bracket(X, Y);
  const Vec4 t2 = mat_vec(J, bracket(JX, Y));
  const Vec4 t3 = mat_vec(J, bracket(X, JY));
  const Vec4 t4 = bracket(JX, JY);
  NijenhuisTerms r;
  r.value = add(add(add(t1, t2), t3), t4, -1.0);
  r.scale = std::max({vector_norm(t1, g), vector_norm(t2, g), vector_norm(t3, g), vector_norm(t4, g)});
  return r;
}

Vec4 nijenhuis(const AlmostComplexField& j, const VectorField& x, const VectorField& y, const ChartPoint& p) {
  return nijenhuis_terms(j, x, y, p, identity4()).value;
}

double nijenhuis_tensoriality_residual(const AlmostComplexField& j, const VectorField& x, const VectorField& y,
                                       const ScalarField& f, const ScalarField& g, const ChartPoint& p,
                                       const Mat4& metric_value) {
  const NijenhuisTerms plain = nijenhuis_terms(j, x, y, p, metric_value);
  const NijenhuisTerms mixed = nijenhuis_terms(j, scaled(f, x), scaled(g, y), p, metric_value);
  const Coords c = seed(p);
  const double fg = f(c).value() * g(c).value();
  Vec4 expect{};
  for (int i = 0; i < kDim; ++i) expect[i] = fg * plain.value[i];
  const double diff = vector_norm(add(mixed.value, expect, -1.0), metric_value);
  const double ref = std::max({1.0, vector_norm(expect, metric_value), mixed.scale, std::abs(fg) * plain.scale});
  return diff / ref;
}

double integrability_residual(const AlmostComplexField& j, const MetricField& metric, const ChartPoint& p) {
  const Mat4 g = values(metric_at(metric, p));
  // Normalized by the largest bracket term over all pairs: a pair whose terms
  // all vanish to roundoff would otherwise read as O(1).
  double worst_norm = 0.0, scale = 0.0;
  for (int mu = 0; mu < kDim; ++mu)
    for (int nu = mu + 1; nu < kDim; ++nu) {
      const NijenhuisTerms n =
          nijenhuis_terms(j, coordinate_field(j.chart_id, mu), coordinate_field(j.chart_id, nu), p, g);
      worst_norm = std::max(worst_norm, vector_norm(n.value, g));
      scale = std::max(scale, n.scale);
    }
  double worst = worst_norm > 0.0 ? worst_norm / std::max(scale, 1e-300) : 0.0;
  // Tensoriality spot check: N(fX, hY) = f h N(X, Y) with non-constant f, h.
  const ScalarField f = [](const Coords& x) { return 1.0 + 0.5 * sin(x[0] + 0.7 * x[1] - 0.3 * x[3]); };
  const ScalarField h = [](const Coords& x) { return 2.0 + cos(0.4 * x[2] - x[1] + 0.2 * x[0]); };
  worst = std::max(worst, nijenhuis_tensoriality_residual(j, coordinate_field(j.chart_id, 0),
                                                          coordinate_field(j.chart_id, 2), f, h, p, g));
  return worst;
}

Verdict integrability_verdict(const AlmostComplexField& j, const MetricField& metric,
                              const std::vector<ChartPoint>& sample, double tol) {
  MaxTracker t;
  for (const auto& p : sample) t.observe(integrability_residual(j, metric, p), p.coords);
  return t.verdict("integrable[" + j.label + "]", tol);
}

const std::array<const char*, 7> kQuaternionRelations = {
    "J1^2 = -Id", "J2^2 = -Id", "J3^2 = -Id", "J1 J2 = J3", "J2 J3 = J1", "J3 J1 = J2", "J1 J2 = -J2 J1"};

std::array<double, 7> quaternion_residuals(const Mat4& j1_vec, const Mat4& j2_vec, const Mat4& j3_vec) {
  const Mat4 j1 = transpose(j1_vec), j2 = transpose(j2_vec), j3 = transpose(j3_vec);
  const double m1 = std::max(1.0, max_abs(j1));
  const double m2 = std::max(1.0, max_abs(j2));
  const double m3 = std::max(1.0, max_abs(j3));
  const Mat4 id = identity4();
  const Mat4 p12 = product(j1, j2), p21 = product(j2, j1), p23 = product(j2, j3), p31 = product(j3, j1);
  return {max_abs_diff(product(j1, j1), id, 1.0) / (m1 * m1),
          max_abs_diff(product(j2, j2), id, 1.0) / (m2 * m2),
          max_abs_diff(product(j3, j3), id, 1.0) / (m3 * m3),
          max_abs_diff(p12, j3, -1.0) / (m1 * m2),
          max_abs_diff(p23, j1, -1.0) / (m2 * m3),
          max_abs_diff(p31, j2, -1.0) / (m3 * m1),
          max_abs_diff(p12, p21, 1.0) / (m1 * m2)};
}

Verdict quaternion_check(const AlmostComplexField& j1, const AlmostComplexField& j2,
                         const AlmostComplexField& j3, const std::vector<ChartPoint>& sample, double tol) {
  MaxTracker overall;
  std::array<double, 7> worst{};
  for (const auto& p : sample) {
    const auto r = quaternion_residuals(values(acs_at(j1, p)), values(acs_at(j2, p)), values(acs_at(j3, p)));
    double m = 0.0;
    for (int k = 0; k < 7; ++k) {
      worst[k] = std::max(worst[k], r[k]);
      m = std::max(m, r[k]);
    }
    overall.observe(m, p.coords);
  }
  Verdict v = overall.verdict("quaternion[" + j1.label + "," + j2.label + "," + j3.label + "]", tol);
  std::string failed;
  for (int k = 0; k < 7; ++k)
    if (!(worst[k] < tol)) failed += (failed.empty() ? "" : "; ") + std::string(kQuaternionRelations[k]);
  if (!failed.empty()) v.note = "violated: " + failed;
  return v;
}

double hermitian_residual(const Mat4& g, const Mat4& j) {
  const Mat4 jtgj = multiply(transpose(j), multiply(g, j));
  return max_abs_diff(jtgj, g, -1.0) / std::max(max_abs(g), 1e-300);
}

Verdict hermitian_check(const MetricField& metric, const AlmostComplexField& j,
                        const std::vector<ChartPoint>& sample, double tol) {
  const SignatureCheck guard = signature_guard(metric);
  if (!guard.allowed) {
    Verdict v;
    v.name = "hermitian[" + j.label + "]";
    v.status = Status::refused;
    v.tolerance = tol;
    v.note = guard.reason;
    return v;
  }
  MaxTracker t;
  for (const auto& p : sample)
    t.observe(hermitian_residual(values(metric_at(metric, p)), values(acs_at(j, p))), p.coords);
  return t.verdict("hermitian[" + j.label + "]", tol);
}

Verdict acs_check(const AlmostComplexField& j, const std::vector<ChartPoint>& sample, double tol) {
  MaxTracker t;
  for (const auto& p : sample) t.observe(acs_residual(values(acs_at(j, p))), p.coords);
  return t.verdict("acs[" + j.label + "]", tol);
}

}  // namespace curvlab
