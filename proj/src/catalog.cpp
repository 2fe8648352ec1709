#include "curvlab/catalog.hpp"
#include "curvlab/lck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace curvlab {

namespace {

constexpr double kPi = std::numbers::pi;

Guard make_guard(std::string text, std::function<bool(const Point4&)> f) {
  return Guard{std::move(text), std::move(f)};
}

// g = sum_k w_k theta_k (x) theta_k for 1-forms theta_k given by their components.
Mat4J sum_of_squares(const std::vector<std::pair<Jet2, Vec4J>>& terms) {
  Mat4J g;
  for (const auto& [w, t] : terms)
    for (int m = 0; m < kDim; ++m)
      for (int n = m; n < kDim; ++n) {
        g[m][n] = g[m][n] + w * t[m] * t[n];
        g[n][m] = g[m][n];
      }
  return g;
}

KFormField coframe_two_form(std::string name, const FrameField& frame,
                            std::vector<std::pair<std::array<int, 2>, double>> terms) {
  KFormField f;
  f.name = std::move(name);
  f.degree = 2;
  f.chart_id = frame.chart_id;
  f.coeffs = [co = frame.coframe, terms](const Coords& x) {
    const Mat4J E = co(x);
    FormJ w(2);
    for (const auto& [legs, s] : terms) {
      FormJ a(1), b(1);
      for (int mu = 0; mu < kDim; ++mu) {
        a[mu] = E[legs[0]][mu];
        b[mu] = E[legs[1]][mu];
      }
      const FormJ ab = wedge(a, b);
      for (int k = 0; k < w.size(); ++k) w[k] = w[k] + s * ab[k];
    }
    return w;
  };
  return f;
}

KFormField scaled_form(std::string name, const KFormField& f, const ScalarField& s) {
  KFormField out = f;
  out.name = std::move(name);
  out.coeffs = [c = f.coeffs, s](const Coords& x) {
    FormJ w = c(x);
    const Jet2 k = s(x);
    for (int i = 0; i < w.size(); ++i) w[i] = k * w[i];
    return w;
  };
  return out;
}

Chart kerr_chart(const std::string& id, double horizon, double M, double alpha, bool euclidean) {
  Chart c;
  c.id = id;
  c.coordinate_names = {"r", "theta", "phi", "t"};
  c.periodic = {false, false, true, euclidean};
  c.guards.push_back(make_guard("r > " + std::to_string(horizon), [horizon](const Point4& x) { return x[0] > horizon; }));
  c.guards.push_back(make_guard("0 < theta < pi", [](const Point4& x) { return x[1] > 0.0 && x[1] < kPi; }));
  if (euclidean) {
    c.guards.push_back(make_guard("Xi = r^2 - alpha^2 cos^2 theta > 0", [alpha](const Point4& x) {
      const double ct = std::cos(x[1]);
      return x[0] * x[0] - alpha * alpha * ct * ct > 0.0;
    }));
    c.guards.push_back(make_guard("r - alpha cos theta > 0",
                                  [alpha](const Point4& x) { return x[0] - alpha * std::cos(x[1]) > 0.0; }));
  }
  (void)M;
  return c;
}

Region kerr_region(double horizon) {
  return {{{1.05 * horizon, 20.0}, {0.05, kPi - 0.05}, {0.0, 2.0 * kPi}, {0.0, 2.0 * kPi}}};
}

}  // namespace

double GeometryEntry::parameter(const std::string& key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return v;
  throw std::invalid_argument("geometry '" + name + "' has no parameter '" + key + "'");
}

const AlmostComplexField* GeometryEntry::find_acs(const std::string& label) const {
  for (const auto& j : acs)
    if (j.label == label) return &j;
  return nullptr;
}

const KFormField* GeometryEntry::find_form(const std::string& form_name) const {
  for (const auto& f : forms)
    if (f.name == form_name) return &f;
  return nullptr;
}

bool GeometryEntry::expects(const std::string& claim) const {
  return std::find(expected.begin(), expected.end(), claim) != expected.end();
}

FrameMap taub_nut_j1_map() { return FrameMap{{1, 0, 3, 2}, {1, -1, 1, -1}}; }
FrameMap taub_nut_j2_map() { return FrameMap{{3, 2, 1, 0}, {1, 1, -1, -1}}; }
FrameMap taub_nut_j3_map() { return FrameMap{{2, 3, 0, 1}, {1, -1, -1, 1}}; }
FrameMap kerr_j_map() { return taub_nut_j2_map(); }

GeometryEntry flat() {
  GeometryEntry e;
  e.name = "flat";
  e.title = "Euclidean R^4";
  Chart c;
  c.id = "flat";
  c.coordinate_names = {"x", "y", "z", "w"};
  e.metric = MetricField{"flat", c, Signature::riemannian, Orientation{}, [](const Coords&) {
                           Mat4J g;
                           for (int i = 0; i < kDim; ++i) g[i][i] = Jet2(1.0);
                           return g;
                         }};
  FrameField f;
  f.name = "flat.frame";
  f.chart_id = c.id;
  f.vectors = f.coframe = [](const Coords&) {
    Mat4J m;
    for (int i = 0; i < kDim; ++i) m[i][i] = Jet2(1.0);
    return m;
  };
  e.frames.push_back(f);
  e.acs.push_back(acs_from_frame("J", f, taub_nut_j1_map()));
  e.forms.push_back(coframe_two_form("omega", f, {{{0, 1}, 1.0}, {{2, 3}, 1.0}}));
  e.expected = {"kahler"};
  e.default_checks = {"curvature", "kahler", "lck", "weyl"};
  e.region = {{{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  return e;
}

std::array<KFormField, 3> sigma_forms(const std::string& chart_id, double scale) {
  auto make = [&](std::string name, std::function<FormJ(const Coords&)> f) {
    KFormField k;
    k.name = std::move(name);
    k.degree = 1;
    k.chart_id = chart_id;
    k.coeffs = std::move(f);
    return k;
  };
  const double h = 0.5 * scale;
  return {make("sigma1",
               [h](const Coords& x) {
                 FormJ s(1);
                 s[1] = h * sin(x[3]);
                 s[2] = -h * (sin(x[1]) * cos(x[3]));
                 return s;
               }),
          make("sigma2",
               [h](const Coords& x) {
                 FormJ s(1);
                 s[1] = h * cos(x[3]);
                 s[2] = h * (sin(x[1]) * sin(x[3]));
                 return s;
               }),
          make("sigma3", [h](const Coords& x) {
            FormJ s(1);
            s[2] = h * cos(x[1]);
            s[3] = Jet2(h);
            return s;
          })};
}

GeometryEntry taub_nut(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("taub-nut: m must be positive");
  GeometryEntry e;
  e.name = "taub-nut";
  e.title = "Euclidean Taub-NUT on the (rho, theta, phi, psi) chart";
  e.parameters = {{"m", m}};
  Chart c;
  c.id = "taub-nut";
  c.coordinate_names = {"rho", "theta", "phi", "psi"};
  c.periodic = {false, false, true, true};
  c.guards.push_back(make_guard("rho > 0", [](const Point4& x) { return x[0] > 0.0; }));
  c.guards.push_back(make_guard("0 < theta < pi", [](const Point4& x) { return x[1] > 0.0 && x[1] < kPi; }));

  const auto sigma = sigma_forms(c.id);
  e.metric = MetricField{"taub-nut", c, Signature::riemannian, Orientation{}, [m, sigma](const Coords& x) {
                           const Jet2& rho = x[0];
                           const Jet2 q = rho + 2.0 * m;
                           std::array<Vec4J, 3> s;
                           for (int i = 0; i < 3; ++i) {
                             const FormJ f = sigma[i].coeffs(x);
                             for (int mu = 0; mu < kDim; ++mu) s[i][mu] = f[mu];
                           }
                           Vec4J drho;
                           drho[0] = Jet2(1.0);
                           const Jet2 b = rho * q;
                           return sum_of_squares({{q / (4.0 * rho), drho},
                                                  {b, s[0]},
                                                  {b, s[1]},
                                                  {4.0 * m * m * rho / q, s[2]}});
                         }};

  FrameField f;
  f.name = "taub-nut.frame";
  f.chart_id = c.id;
  f.coframe = [m](const Coords& x) {
    const Jet2 &rho = x[0], &th = x[1], &ph = x[2];
    const Jet2 k = sqrt((rho + 2.0 * m) / (4.0 * rho));
    const Jet2 h = m * sqrt(rho / (rho + 2.0 * m));
    const Jet2 st = sin(th), ct = cos(th), sp = sin(ph), cp = cos(ph);
    Mat4J E;
    E[0] = {k * st * cp, k * rho * ct * cp, -(k * rho * st * sp), Jet2(0.0)};
    E[1] = {k * st * sp, k * rho * ct * sp, k * rho * st * cp, Jet2(0.0)};
    E[2] = {k * ct, -(k * rho * st), Jet2(0.0), Jet2(0.0)};
    E[3] = {Jet2(0.0), Jet2(0.0), h * ct, h};
    return E;
  };
  f.vectors = [m](const Coords& x) {
    const Jet2 &rho = x[0], &th = x[1], &ph = x[2];
    const Jet2 k = 2.0 / sqrt(rho * (rho + 2.0 * m));
    const Jet2 st = sin(th), ct = cos(th), sp = sin(ph), cp = cos(ph), cot_t = cot(th);
    Mat4J V;
    V[0] = {k * rho * st * cp, k * ct * cp, -(k * sp / st), k * sp * cot_t};
    V[1] = {k * rho * st * sp, k * ct * sp, k * cp / st, -(k * cp * cot_t)};
    V[2] = {k * rho * ct, -(k * st), Jet2(0.0), Jet2(0.0)};
    V[3] = {Jet2(0.0), Jet2(0.0), Jet2(0.0), sqrt(rho + 2.0 * m) / (m * sqrt(rho))};
    return V;
  };
  e.frames.push_back(f);
  e.acs.push_back(acs_from_frame("J1", f, taub_nut_j1_map()));
  e.acs.push_back(acs_from_frame("J2", f, taub_nut_j2_map()));
  e.acs.push_back(acs_from_frame("J3", f, taub_nut_j3_map()));
  e.hyper_kahler_triple = std::array<std::string, 3>{"J1", "J2", "J3"};
  e.forms.push_back(coframe_two_form("omega1", f, {{{0, 1}, 1.0}, {{2, 3}, 1.0}}));
  e.forms.push_back(coframe_two_form("omega2", f, {{{0, 3}, 1.0}, {{1, 2}, 1.0}}));
  e.forms.push_back(coframe_two_form("omega3", f, {{{0, 2}, 1.0}, {{3, 1}, 1.0}}));
  for (const auto& s : sigma) e.forms.push_back(s);
  e.expected = {"ricci_flat", "hyper_kahler"};
  e.default_checks = {"curvature", "hyper_kahler", "weyl"};
  e.region = {{{0.1, 10.0}, {0.05, kPi - 0.05}, {0.0, 2.0 * kPi}, {0.0, 4.0 * kPi}}};
  return e;
}

GeometryEntry taub_nut_r3() {
  GeometryEntry e;
  e.name = "taub-nut-r3";
  e.title = "Euclidean Taub-NUT as V(dx^2+dy^2+dz^2) + (dt + Theta)^2 / V";
  Chart c;
  c.id = "taub-nut-r3";
  c.coordinate_names = {"x", "y", "z", "t"};
  c.periodic = {false, false, false, true};
  c.guards.push_back(make_guard("r = sqrt(x^2+y^2+z^2) > 0",
                                [](const Point4& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] > 0.0; }));
  c.guards.push_back(make_guard("x^2 + y^2 > 0 (off the z-axis)",
                                [](const Point4& x) { return x[0] * x[0] + x[1] * x[1] > 0.0; }));

  auto potential = [](const Coords& x) {
    const Jet2 r = sqrt(square(x[0]) + square(x[1]) + square(x[2]));
    return 1.0 + 1.0 / (2.0 * r);
  };
  // Theta = (z / 2r) (x dy - y dx) / (x^2 + y^2), the pullback of cos(theta) dphi / 2.
  auto theta = [](const Coords& x) {
    const Jet2 r = sqrt(square(x[0]) + square(x[1]) + square(x[2]));
    const Jet2 w = x[2] / (2.0 * r * (square(x[0]) + square(x[1])));
    FormJ t(1);
    t[0] = -(w * x[1]);
    t[1] = w * x[0];
    return t;
  };
  e.metric = MetricField{"taub-nut-r3", c, Signature::riemannian, Orientation{}, [potential, theta](const Coords& x) {
                           const Jet2 V = potential(x);
                           const FormJ th = theta(x);
                           Vec4J a{th[0], th[1], th[2], Jet2(1.0)};
                           Vec4J ex, ey, ez;
                           ex[0] = ey[1] = ez[2] = Jet2(1.0);
                           return sum_of_squares({{V, ex}, {V, ey}, {V, ez}, {1.0 / V, a}});
                         }};
  FrameField f;
  f.name = "taub-nut-r3.frame";
  f.chart_id = c.id;
  f.coframe = [potential, theta](const Coords& x) {
    const Jet2 s = sqrt(potential(x));
    const FormJ th = theta(x);
    Mat4J E;
    E[0][0] = E[1][1] = E[2][2] = s;
    E[3] = {th[0] / s, th[1] / s, th[2] / s, 1.0 / s};
    return E;
  };
  f.vectors = [potential, theta](const Coords& x) {
    const Jet2 s = sqrt(potential(x));
    const FormJ th = theta(x);
    Mat4J V;
    for (int i = 0; i < 3; ++i) {
      V[i][i] = 1.0 / s;
      V[i][3] = -(th[i] / s);
    }
    V[3][3] = s;
    return V;
  };
  e.frames.push_back(f);
  KFormField th;
  th.name = "Theta";
  th.degree = 1;
  th.chart_id = c.id;
  th.coeffs = theta;
  e.forms.push_back(th);
  KFormField v;
  v.name = "V";
  v.degree = 0;
  v.chart_id = c.id;
  v.coeffs = [potential](const Coords& x) {
    FormJ s(0);
    s[0] = potential(x);
    return s;
  };
  e.forms.push_back(v);
  e.expected = {"ricci_flat"};
  e.default_checks = {"curvature", "isometry"};
  e.region = {{{-3.0, 3.0}, {-3.0, 3.0}, {-3.0, 3.0}, {0.0, 2.0 * kPi}}};
  return e;
}

double kerr_euclidean_horizon(double M, double alpha) { return M + std::sqrt(M * M + alpha * alpha); }

GeometryEntry kerr_lorentzian(double M, double alpha) {
  if (!(M > 0.0) || !std::isfinite(M)) throw std::invalid_argument("kerr-lorentzian: M must be positive");
  if (!(alpha >= 0.0) || !(alpha <= M)) throw std::invalid_argument("kerr-lorentzian: need 0 <= alpha <= M");
  GeometryEntry e;
  e.name = "kerr-lorentzian";
  e.title = "Lorentzian Kerr in Boyer-Lindquist coordinates";
  e.parameters = {{"M", M}, {"alpha", alpha}};
  const double horizon = M + std::sqrt(M * M - alpha * alpha);
  Chart c = kerr_chart("kerr-lorentzian", horizon, M, alpha, false);
  e.metric = MetricField{"kerr-lorentzian", c, Signature::lorentzian, Orientation{}, [M, alpha](const Coords& x) {
                           const Jet2 &r = x[0], &th = x[1];
                           const Jet2 st = sin(th), ct = cos(th);
                           const Jet2 delta = square(r) - 2.0 * M * r + alpha * alpha;
                           const Jet2 xi = square(r) + alpha * alpha * square(ct);
                           Vec4J dr, dth, a, b;
                           dr[0] = Jet2(1.0);
                           dth[1] = Jet2(1.0);
                           a[2] = square(r) + alpha * alpha;
                           a[3] = Jet2(-alpha);
                           b[2] = -(alpha * square(st));
                           b[3] = Jet2(1.0);
                           return sum_of_squares(
                               {{xi / delta, dr}, {xi, dth}, {square(st) / xi, a}, {-(delta / xi), b}});
                         }};
  e.expected = {"signature_refusal"};
  e.default_checks = {"curvature", "kahler"};
  e.region = kerr_region(horizon);
  return e;
}

GeometryEntry kerr_euclidean(double M, double alpha) {
  if (!(M > 0.0) || !std::isfinite(M)) throw std::invalid_argument("kerr: M must be positive");
  if (!(alpha >= 0.0) || !(alpha < M)) throw std::invalid_argument("kerr: need 0 <= alpha < M");
  GeometryEntry e;
  e.name = "kerr";
  e.title = "Euclidean (Wick-rotated) Kerr";
  e.parameters = {{"M", M}, {"alpha", alpha}};
  const double horizon = kerr_euclidean_horizon(M, alpha);
  Chart c = kerr_chart("kerr", horizon, M, alpha, true);
  e.metric = MetricField{"kerr", c, Signature::riemannian, Orientation{}, [M, alpha](const Coords& x) {
                           const Jet2 &r = x[0], &th = x[1];
                           const Jet2 st = sin(th), ct = cos(th);
                           const Jet2 delta = square(r) - 2.0 * M * r - alpha * alpha;
                           const Jet2 xi = square(r) - alpha * alpha * square(ct);
                           Vec4J dr, dth, a, b;
                           dr[0] = Jet2(1.0);
                           dth[1] = Jet2(1.0);
                           a[2] = square(r) - alpha * alpha;
                           a[3] = Jet2(alpha);
                           b[2] = -(alpha * square(st));
                           b[3] = Jet2(1.0);
                           return sum_of_squares(
                               {{xi / delta, dr}, {xi, dth}, {square(st) / xi, a}, {delta / xi, b}});
                         }};
  FrameField f;
  f.name = "kerr.frame";
  f.chart_id = c.id;
  f.coframe = [M, alpha](const Coords& x) {
    const Jet2 &r = x[0], &th = x[1];
    const Jet2 st = sin(th), ct = cos(th);
    const Jet2 delta = square(r) - 2.0 * M * r - alpha * alpha;
    const Jet2 xi = square(r) - alpha * alpha * square(ct);
    const Jet2 sx = sqrt(xi);
    const Jet2 sd = sqrt(delta / xi);
    Mat4J E;
    E[0][0] = sqrt(xi / delta);
    E[1][1] = sx;
    E[2][2] = st / sx * (square(r) - alpha * alpha);
    E[2][3] = st / sx * alpha;
    E[3][2] = -(sd * alpha * square(st));
    E[3][3] = sd;
    return E;
  };
  f.vectors = [M, alpha](const Coords& x) {
    const Jet2 &r = x[0], &th = x[1];
    const Jet2 st = sin(th), ct = cos(th);
    const Jet2 delta = square(r) - 2.0 * M * r - alpha * alpha;
    const Jet2 xi = square(r) - alpha * alpha * square(ct);
    const Jet2 sx = sqrt(xi);
    const Jet2 sdx = sqrt(delta * xi);
    Mat4J V;
    V[0][0] = sqrt(delta / xi);
    V[1][1] = 1.0 / sx;
    V[2][2] = 1.0 / (st * sx);
    V[2][3] = alpha * st / sx;
    V[3][2] = -alpha / sdx;
    V[3][3] = (square(r) - alpha * alpha) / sdx;
    return V;
  };
  e.frames.push_back(f);
  e.acs.push_back(acs_from_frame("J", f, kerr_j_map()));
  const KFormField omega = coframe_two_form("omega", f, {{{0, 3}, 1.0}, {{1, 2}, 1.0}});
  const ScalarField lambda = [alpha](const Coords& x) { return 1.0 / square(x[0] - alpha * cos(x[1])); };
  const KFormField omega_tilde = scaled_form("omega_tilde", omega, lambda);
  e.forms.push_back(omega);
  e.forms.push_back(omega_tilde);
  e.acs.push_back(acs_from_omega("J_tilde", e.metric, omega_tilde));
  e.expected = {"ricci_flat", "gck", "weyl_degenerate"};
  e.default_checks = {"curvature", "hermitian", "lck", "weyl"};
  e.region = kerr_region(horizon);
  e.lee_conformal_factor = lambda;
  return e;
}

GeometryEntry kerr_conformal(double M, double alpha) {
  GeometryEntry base = kerr_euclidean(M, alpha);
  GeometryEntry e;
  e.name = "kerr-conformal";
  e.title = "Euclidean Kerr rescaled by 1/(r - alpha cos theta)^2";
  e.parameters = base.parameters;
  const ScalarField lambda = *base.lee_conformal_factor;
  e.metric = conformal_rescale(base.metric, lambda, "kerr-conformal");
  FrameField f = rescale_frame(base.frames.front(), lambda);
  f.name = "kerr-conformal.frame";
  e.frames.push_back(f);
  AlmostComplexField j = *base.find_acs("J");
  e.acs.push_back(j);
  e.forms.push_back(coframe_two_form("omega_hat", f, {{{0, 3}, 1.0}, {{1, 2}, 1.0}}));
  e.expected = {"kahler"};
  e.default_checks = {"curvature", "kahler", "hermitian"};
  e.region = base.region;
  e.non_einstein_control = true;
  return e;
}

const std::vector<std::string>& geometry_names() {
  static const std::vector<std::string> names = {"flat", "taub-nut", "taub-nut-r3",
                                                 "kerr", "kerr-lorentzian", "kerr-conformal"};
  return names;
}

GeometryEntry make_geometry(const std::string& name, const ParamOverrides& params) {
  auto take = [&](const std::vector<std::string>& allowed) {
    for (const auto& [k, v] : params)
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        throw std::invalid_argument("geometry '" + name + "' has no parameter '" + k + "'");
  };
  auto get = [&](const std::string& k, double dflt) {
    const auto it = params.find(k);
    return it == params.end() ? dflt : it->second;
  };
  if (name == "flat") {
    take({});
    return flat();
  }
  if (name == "taub-nut") {
    take({"m"});
    return taub_nut(get("m", 0.5));
  }
  if (name == "taub-nut-r3") {
    take({});
    return taub_nut_r3();
  }
  if (name == "kerr" || name == "kerr-lorentzian" || name == "kerr-conformal") {
    take({"M", "alpha"});
    const double M = get("M", 1.0), a = get("alpha", 0.5);
    if (name == "kerr") return kerr_euclidean(M, a);
    if (name == "kerr-lorentzian") return kerr_lorentzian(M, a);
    return kerr_conformal(M, a);
  }
  throw std::invalid_argument("unknown geometry '" + name + "'");
}

AlmostComplexField perturbed_acs(const AlmostComplexField& j, double amplitude) {
  AlmostComplexField out;
  out.label = j.label + "_perturbed";
  out.chart_id = j.chart_id;
  out.j = [jj = j.j, amplitude](const Coords& x) {
    const Mat4J J = jj(x);
    const Jet2 b = amplitude * sin(x[2]);
    // P = Id + b E01, P^{-1} = Id - b E01.
    Mat4J PJ = J;
    for (int s = 0; s < kDim; ++s) PJ[0][s] = PJ[0][s] + b * J[1][s];
    Mat4J out_m = PJ;
    for (int r = 0; r < kDim; ++r) out_m[r][1] = out_m[r][1] - b * PJ[r][0];
    return out_m;
  };
  return out;
}

ChartPoint taub_nut_isometry(const ChartPoint& p, const GeometryEntry& target) {
  if (p.chart_id != "taub-nut-r3") throw ContractViolation("taub_nut_isometry: expects a (x,y,z,t) point");
  const double x = p.coords[0], y = p.coords[1], z = p.coords[2], t = p.coords[3];
  const double cyl2 = x * x + y * y;
  if (!(cyl2 > 0.0)) throw DomainError("taub_nut_isometry: point on the z-axis at " + describe(p));
  const double r = std::sqrt(cyl2 + z * z);
  double phi = std::atan2(y, x);
  if (phi < 0) phi += 2.0 * kPi;
  return target.metric.chart.point({2.0 * r, std::acos(std::clamp(z / r, -1.0, 1.0)), phi, 2.0 * t});
}

ChartPoint taub_nut_isometry_inverse(const ChartPoint& p, const GeometryEntry& r3) {
  if (p.chart_id != "taub-nut") throw ContractViolation("taub_nut_isometry_inverse: expects a polar point");
  const double rho = p.coords[0], th = p.coords[1], ph = p.coords[2], ps = p.coords[3];
  return r3.metric.chart.point({0.5 * rho * std::sin(th) * std::cos(ph), 0.5 * rho * std::sin(th) * std::sin(ph),
                                0.5 * rho * std::cos(th), 0.5 * ps});
}

double isometry_pullback_residual(const GeometryEntry& r3, const GeometryEntry& polar, const ChartPoint& p_xyz) {
  const Mat4 g_xyz = values(metric_at(r3.metric, p_xyz));
  const ChartPoint q = taub_nut_isometry(p_xyz, polar);
  const Mat4 g_pol = values(metric_at(polar.metric, q));
  // K[i][mu] = d x^i / d q^mu from jets of the inverse map at q.
  const Coords c = seed(q);
  const Jet2 h = 0.5 * c[0];
  const std::array<Jet2, kDim> inv = {h * sin(c[1]) * cos(c[2]), h * sin(c[1]) * sin(c[2]), h * cos(c[1]),
                                      0.5 * c[3]};
  Mat4 K{};
  for (int i = 0; i < kDim; ++i)
    for (int mu = 0; mu < kDim; ++mu) K[i][mu] = inv[i].grad(mu);
  const Mat4 Jf = invert(K);  // d q^mu / d x^i
  const Mat4 pulled = multiply(transpose(Jf), multiply(g_pol, Jf));
  double worst = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) worst = std::max(worst, std::abs(pulled[i][j] - g_xyz[i][j]));
  return worst / std::max(max_abs(g_xyz), 1e-300);
}

double theta_hodge_residual(const ChartPoint& p) {
  const Coords x = seed(p);
  return at_point(p, [&] {
    const Jet2 r = sqrt(square(x[0]) + square(x[1]) + square(x[2]));
    const Jet2 V = 1.0 + 1.0 / (2.0 * r);
    const Jet2 w = x[2] / (2.0 * r * (square(x[0]) + square(x[1])));
    const std::array<Jet2, 3> th = {-(w * x[1]), w * x[0], Jet2(0.0)};
    double worst = 0.0, ref = 1.0;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      // (d Theta)_{jk} against eps_{jki} d_i V.
      const double d_theta = th[k].grad(j) - th[j].grad(k);
      const double star_dv = V.grad(i);
      worst = std::max(worst, std::abs(d_theta - star_dv));
      ref = std::max({ref, std::abs(d_theta), std::abs(star_dv)});
    }
    return worst / ref;
  });
}

}  // namespace curvlab
