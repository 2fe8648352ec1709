#include "curvlab/lck.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "curvlab/curvature.hpp"

namespace curvlab {

namespace {

Jet2 determinant_jet(const Mat4J& m) {
  auto det3 = [&](int skip_col) {
    std::array<int, 3> c{};
    int n = 0;
    for (int j = 0; j < kDim; ++j)
      if (j != skip_col) c[n++] = j;
    return m[1][c[0]] * (m[2][c[1]] * m[3][c[2]] - m[2][c[2]] * m[3][c[1]]) -
           m[1][c[1]] * (m[2][c[0]] * m[3][c[2]] - m[2][c[2]] * m[3][c[0]]) +
           m[1][c[2]] * (m[2][c[0]] * m[3][c[1]] - m[2][c[1]] * m[3][c[0]]);
  };
  Jet2 d;
  for (int j = 0; j < kDim; ++j) {
    const Jet2 term = m[0][j] * det3(j);
    d = (j % 2 == 0) ? d + term : d - term;
  }
  return d;
}

// Coordinate basis for the potential fits.
struct BasisFunction {
  std::string label;
  std::function<Jet2(const Coords&)> f;
};

std::vector<BasisFunction> potential_basis(const Chart& chart) {
  std::vector<BasisFunction> b;
  for (int mu = 0; mu < kDim; ++mu) {
    const std::string& q = chart.coordinate_names[mu];
    if (!chart.periodic[mu]) {
      b.push_back({q, [mu](const Coords& x) { return x[mu]; }});
      b.push_back({q + "^2", [mu](const Coords& x) { return square(x[mu]); }});
    }
    b.push_back({"sin(" + q + ")", [mu](const Coords& x) { return sin(x[mu]); }});
    b.push_back({"cos(" + q + ")", [mu](const Coords& x) { return cos(x[mu]); }});
  }
  for (int mu = 0; mu < kDim; ++mu)
    for (int nu = mu + 1; nu < kDim; ++nu) {
      if (chart.periodic[mu] || chart.periodic[nu]) continue;
      b.push_back({chart.coordinate_names[mu] + "*" + chart.coordinate_names[nu],
                   [mu, nu](const Coords& x) { return x[mu] * x[nu]; }});
    }
  return b;
}

std::string format_coefficient(double c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", c);
  return buf;
}

std::string linear_combination(const std::vector<BasisFunction>& basis, const Eigen::VectorXd& c,
                               bool with_constant) {
  std::string s;
  const int offset = with_constant ? 1 : 0;
  auto append = [&](double coef, const std::string& label) {
    if (coef == 0.0) return;
    if (!s.empty()) s += coef < 0 ? " - " : " + ";
    else if (coef < 0) s += "-";
    s += format_coefficient(std::abs(coef));
    if (!label.empty()) s += "*" + label;
  };
  if (with_constant) append(c[0], "");
  for (size_t j = 0; j < basis.size(); ++j) append(c[static_cast<Eigen::Index>(j) + offset], basis[j].label);
  return s.empty() ? "0" : s;
}

struct SampleXi {
  Point4 where{};
  Coords coords{};
  Vec4 xi{};
};

double potential_residual(const ScalarField& f, const std::vector<SampleXi>& samples, Point4* worst_at) {
  double worst = 0.0;
  for (const auto& s : samples) {
    Jet2 v;
    try {
      v = f(s.coords);
    } catch (const DomainError&) {
      if (worst_at) *worst_at = s.where;
      return INFINITY;
    }
    if (!v.finite()) return INFINITY;
    double d = 0.0, ref = 1.0;
    for (int mu = 0; mu < kDim; ++mu) {
      d = std::max(d, std::abs(v.grad(mu) - s.xi[mu]));
      ref = std::max(ref, std::abs(s.xi[mu]));
    }
    if (d / ref > worst) {
      worst = d / ref;
      if (worst_at) *worst_at = s.where;
    }
  }
  return worst;
}

}  // namespace

OneFormJets lee_form(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p) {
  const Mat4J g = metric_at(metric, p);
  const Mat4J gi = at_point(p, [&] { return invert(g); });
  const ChristoffelJets G = christoffel_jets(g, gi);
  const Mat4J J = acs_at(j, p);

  std::array<Jet1, kDim> div;
  for (int b = 0; b < kDim; ++b) {
    Jet1 s;
    for (int a = 0; a < kDim; ++a) {
      s = s + Jet1::partial(J[a][b], a);
      for (int l = 0; l < kDim; ++l)
        s = s + G[a][a][l] * Jet1::from(J[l][b]) - G[l][a][b] * Jet1::from(J[a][l]);
    }
    div[b] = s;
  }
  OneFormJets xi;
  for (int i = 0; i < kDim; ++i) {
    Jet1 s;
    for (int b = 0; b < kDim; ++b) s = s + div[b] * Jet1::from(J[b][i]);
    xi[i] = -s;
  }
  return xi;
}

Vec4 lee_form_codifferential(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p) {
  const Mat4J g = metric_at(metric, p);
  const Mat4J J = acs_at(j, p);
  return at_point(p, [&] {
    const Mat4J gi = invert(g);
    const FormJ w = form_at(kahler_form_field(metric, j), p);
    const Jet2 vol = sqrt(determinant_jet(g));
    // sqrt(g) omega^{an}
    Mat4J dens;
    for (int a = 0; a < kDim; ++a)
      for (int n = 0; n < kDim; ++n) {
        Jet2 s;
        for (int m = 0; m < kDim; ++m)
          for (int k = 0; k < kDim; ++k) s = s + gi[a][m] * gi[n][k] * w(m, k);
        dens[a][n] = vol * s;
      }
    Vec4 div{};
    for (int n = 0; n < kDim; ++n)
      for (int a = 0; a < kDim; ++a) div[n] += dens[a][n].grad(a);
    Vec4 delta{};
    for (int b = 0; b < kDim; ++b)
      for (int n = 0; n < kDim; ++n) delta[b] -= g[b][n].value() * div[n] / vol.value();
    Vec4 xi{};
    for (int i = 0; i < kDim; ++i)
      for (int b = 0; b < kDim; ++b) xi[i] -= delta[b] * J[b][i].value();
    return xi;
  });
}

Vec4 values(const OneFormJets& xi) {
  Vec4 v{};
  for (int i = 0; i < kDim; ++i) v[i] = xi[i].value;
  return v;
}

FormD as_form(const Vec4& one_form) {
  FormD f(1);
  for (int i = 0; i < kDim; ++i) f[i] = one_form[i];
  return f;
}

LeeIdentity lee_identity(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p) {
  const FormJ w = form_at(kahler_form_field(metric, j), p);
  LeeIdentity r;
  r.d_omega = exterior_derivative(w);
  r.xi_wedge_omega = wedge(as_form(values(lee_form(metric, j, p))), values(w));
  const double ref = std::max({1.0, max_abs(r.d_omega), max_abs(r.xi_wedge_omega)});
  r.residual = max_abs(r.d_omega - r.xi_wedge_omega) / ref;
  return r;
}

double kahler_closed_residual(const MetricField& metric, const AlmostComplexField& j, const ChartPoint& p) {
  const FormJ w = form_at(kahler_form_field(metric, j), p);
  return max_abs(exterior_derivative(w)) / std::max(1.0, max_abs(values(w)));
}

double lee_closed_residual(const OneFormJets& xi) {
  double ref = 1.0;
  for (const auto& c : xi)
    for (double d : c.grad) ref = std::max(ref, std::abs(d));
  return max_abs(exterior_derivative(xi)) / ref;
}

ExactnessResult exactness_probe(const OneFormField& xi, const Chart& chart, const std::vector<ChartPoint>& sample,
                                double tol, double closed_tol) {
  ExactnessResult out;
  std::vector<SampleXi> samples;
  samples.reserve(sample.size());
  double largest = 0.0;
  for (const auto& p : sample) {
    const OneFormJets x = xi(p);
    out.closed_residual = std::max(out.closed_residual, lee_closed_residual(x));
    SampleXi s{p.coords, seed(p), values(x)};
    for (double c : s.xi) largest = std::max(largest, std::abs(c));
    samples.push_back(s);
  }
  if (!(out.closed_residual < closed_tol)) {
    out.note = "not closed: no potential can exist";
    return out;
  }
  if (samples.empty()) {
    out.note = "closed, exactness undetermined (no samples)";
    return out;
  }
  if (largest < tol) {
    out.potential = Potential{"0", [](const Coords&) { return Jet2(0.0); }, largest};
    out.note = "vanishes identically on the sample";
    return out;
  }

  const std::vector<BasisFunction> basis = potential_basis(chart);
  const auto nb = static_cast<Eigen::Index>(basis.size());
  const auto rows = static_cast<Eigen::Index>(samples.size() * kDim);

  // Basis jets at every sample point.
  std::vector<std::vector<Jet2>> bj(samples.size());
  for (size_t s = 0; s < samples.size(); ++s)
    for (const auto& b : basis) bj[s].push_back(b.f(samples[s].coords));

  // f = sum c_j b_j with grad f = xi.
  {
    Eigen::MatrixXd A(rows, nb);
    Eigen::VectorXd y(rows);
    for (size_t s = 0; s < samples.size(); ++s)
      for (int mu = 0; mu < kDim; ++mu) {
        const auto r = static_cast<Eigen::Index>(s * kDim + static_cast<size_t>(mu));
        for (Eigen::Index j = 0; j < nb; ++j) A(r, j) = bj[s][static_cast<size_t>(j)].grad(mu);
        y[r] = samples[s].xi[mu];
      }
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
    for (Eigen::Index j = 0; j < nb; ++j)
      if (std::abs(c[j]) < 1e-12) c[j] = 0.0;
    ScalarField f = [basis, c](const Coords& x) {
      Jet2 v;
      for (size_t j = 0; j < basis.size(); ++j) {
        const double cj = c[static_cast<Eigen::Index>(j)];
        if (cj != 0.0) v = v + cj * basis[j].f(x);
      }
      return v;
    };
    const double res = potential_residual(f, samples, nullptr);
    if (res < tol) {
      out.potential = Potential{linear_combination(basis, c, false), f, res};
      out.note = "exact: potential fitted";
      return out;
    }
  }

  // f = k log|P| with P = c_0 + sum c_j b_j: xi P - k dP = 0 is linear in c.
  const double exponents[] = {1, 2, -1, -2, 0.5, -0.5, 3, -3, 1.5, -1.5, 4, -4};
  for (double k : exponents) {
    Eigen::MatrixXd A(rows, nb + 1);
    for (size_t s = 0; s < samples.size(); ++s)
      for (int mu = 0; mu < kDim; ++mu) {
        const auto r = static_cast<Eigen::Index>(s * kDim + static_cast<size_t>(mu));
        A(r, 0) = samples[s].xi[mu];
        for (Eigen::Index j = 0; j < nb; ++j) {
          const Jet2& b = bj[s][static_cast<size_t>(j)];
          A(r, j + 1) = samples[s].xi[mu] * b.value() - k * b.grad(mu);
        }
      }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
    Eigen::VectorXd c = svd.matrixV().col(nb);
    Eigen::Index big = 0;
    c.cwiseAbs().maxCoeff(&big);
    c /= c[big];
    for (Eigen::Index j = 0; j <= nb; ++j)
      if (std::abs(c[j]) < 1e-12) c[j] = 0.0;
    ScalarField P = [basis, c](const Coords& x) {
      Jet2 v(c[0]);
      for (size_t j = 0; j < basis.size(); ++j) {
        const double cj = c[static_cast<Eigen::Index>(j) + 1];
        if (cj != 0.0) v = v + cj * basis[j].f(x);
      }
      return v;
    };
    // P must keep one sign on the sample for log|P| to be a single smooth branch.
    const double sign0 = P(samples.front().coords).value() >= 0 ? 1.0 : -1.0;
    bool one_sign = true;
    for (const auto& s : samples) one_sign = one_sign && sign0 * P(s.coords).value() > 0;
    if (!one_sign) continue;
    ScalarField f = [P, k, sign0](const Coords& x) { return k * log(sign0 * P(x)); };
    const double res = potential_residual(f, samples, nullptr);
    if (res < tol) {
      std::string inner = linear_combination(basis, c * sign0, true);
      out.potential = Potential{format_coefficient(k) + "*log(" + inner + ")", f, res};
      out.note = "exact: logarithmic potential fitted";
      return out;
    }
  }
  out.note = "closed, exactness undetermined";
  return out;
}

MetricField conformal_rescale(const MetricField& metric, const ScalarField& lambda, std::string name) {
  MetricField out = metric;
  out.name = name.empty() ? metric.name + "_conformal" : std::move(name);
  out.components = [g = metric.components, lambda](const Coords& x) {
    const Jet2 l = lambda(x);
    if (!(l.value() > 0.0)) throw DomainError("conformal_rescale: non-positive factor " + std::to_string(l.value()));
    Mat4J m = g(x);
    for (auto& row : m)
      for (auto& c : row) c = l * c;
    return m;
  };
  return out;
}

DerdzinskiResult derdzinski_factor(const MetricField& metric, const FrameField& frame, const ChartPoint& p,
                                   double einstein_tol) {
  const CurvatureBundle c = curvature(metric, p);
  DerdzinskiResult r;
  const double tf = tracefree_ricci_residual(c);
  if (!(tf < einstein_tol)) {
    r.status = DerdzinskiStatus::not_einstein;
    r.note = "precondition failed: metric is not Einstein (trace-free Ricci residual " + std::to_string(tf) + ")";
    return r;
  }
  r.spectrum = weyl_plus_spectrum(weyl_plus_matrix(metric, c, p, frame), c.scale());
  if (r.spectrum.vanishes) {
    r.status = DerdzinskiStatus::inapplicable;
    r.note = "W+ vanishes: Derdzinski's theorem is inapplicable";
    return r;
  }
  r.factor = std::cbrt(r.spectrum.norm2);
  return r;
}

FactorMatch factor_match(const std::vector<double>& lee, const std::vector<double>& weyl,
                         const std::vector<ChartPoint>& sample, double tol) {
  if (lee.size() != weyl.size() || lee.size() != sample.size())
    throw ContractViolation("factor_match: sample size mismatch");
  FactorMatch m;
  m.verdict.name = "factor_match";
  m.verdict.tolerance = tol;
  if (sample.empty()) return m;
  std::vector<double> ratio(sample.size());
  for (size_t i = 0; i < sample.size(); ++i) {
    if (!(lee[i] > 0.0) || !(weyl[i] > 0.0)) {
      m.verdict.status = Status::fail;
      m.verdict.max_residual = INFINITY;
      m.verdict.argmax = sample[i].coords;
      m.verdict.has_argmax = true;
      m.verdict.note = "precondition failed: factors must be positive";
      return m;
    }
    ratio[i] = lee[i] / weyl[i];
  }
  double mean = 0.0;
  for (double r : ratio) mean += r;
  mean /= static_cast<double>(ratio.size());
  double var = 0.0;
  size_t worst = 0;
  for (size_t i = 0; i < ratio.size(); ++i) {
    var += (ratio[i] - mean) * (ratio[i] - mean);
    if (std::abs(ratio[i] - mean) > std::abs(ratio[worst] - mean)) worst = i;
  }
  var /= static_cast<double>(ratio.size());
  m.constant = mean;
  m.spread = std::sqrt(var) / std::abs(mean);
  MaxTracker t;
  t.observe(m.spread, sample[worst].coords);
  m.verdict = t.verdict("factor_match", tol);
  m.verdict.note = "ratio constant " + format_coefficient(mean);
  return m;
}

FactorMatch factor_match(const PointScalar& lee_factor, const PointScalar& weyl_factor,
                         const std::vector<ChartPoint>& sample, double tol) {
  std::vector<double> a, b;
  for (const auto& p : sample) {
    a.push_back(lee_factor(p));
    b.push_back(weyl_factor(p));
  }
  return factor_match(a, b, sample, tol);
}

std::string to_string(LckClass c) {
  switch (c) {
    case LckClass::kahler: return "kahler";
    case LckClass::globally_conformally_kahler: return "globally_conformally_kahler";
    case LckClass::locally_conformally_kahler: return "locally_conformally_kahler";
    case LckClass::not_lck: return "not_lck";
  }
  return "not_lck";
}

LeeFormResult classify_lck(const MetricField& metric, const AlmostComplexField& j,
                           const std::vector<ChartPoint>& sample, const LckTolerances& tol) {
  LeeFormResult r;
  for (const auto& p : sample) {
    r.d_omega_residual = std::max(r.d_omega_residual, kahler_closed_residual(metric, j, p));
    r.lee_identity_residual = std::max(r.lee_identity_residual, lee_identity(metric, j, p).residual);
    r.d_xi_residual = std::max(r.d_xi_residual, lee_closed_residual(lee_form(metric, j, p)));
  }
  if (r.d_omega_residual < tol.closed) {
    r.classification = LckClass::kahler;
    r.note = "d omega = 0";
    return r;
  }
  if (!(r.lee_identity_residual < tol.lee_identity) || !(r.d_xi_residual < tol.lee_closed)) {
    r.classification = LckClass::not_lck;
    r.note = "d omega != xi ^ omega or xi not closed";
    return r;
  }
  const ExactnessResult e =
      exactness_probe([&](const ChartPoint& p) { return lee_form(metric, j, p); }, metric.chart, sample,
                      tol.potential, tol.lee_closed);
  r.exact_potential = e.potential;
  r.classification = e.potential ? LckClass::globally_conformally_kahler : LckClass::locally_conformally_kahler;
  r.note = e.note;
  return r;
}

}  // namespace curvlab
