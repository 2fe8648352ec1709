#include "curvlab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "curvlab/curvature.hpp"
#include "curvlab/lck.hpp"
#include "curvlab/sampling.hpp"
#include "curvlab/weyl.hpp"

namespace curvlab {

namespace {

bool same_double(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

std::string short_error(const std::exception& e) { return e.what(); }

// Residuals of one point: values in a fixed order, or the error that stopped evaluation.
struct PointResult {
  std::vector<double> r;
  std::string error;
};

class Runner {
 public:
  Runner(const GeometryEntry& entry, const RunConfig& config)
      : e_(entry),
        tol_(resolve_tolerances(config.tolerances)),
        workers_(resolve_workers(config.workers)) {
    const Region region = resolve_region(entry, config);
    points_ = sample_points(entry.metric.chart, region, config.samples, config.seed);
    for (const auto& label : checked_acs()) acs_.push_back(e_.find_acs(label));
  }

  std::vector<Record> run(const std::vector<std::string>& groups) {
    for (const auto& g : groups) {
      if (g == "curvature") curvature_group();
      else if (g == "hermitian") hermitian_group();
      else if (g == "kahler") kahler_group();
      else if (g == "hyper_kahler") hyper_kahler_group();
      else if (g == "lck") lck_group();
      else if (g == "weyl") weyl_group();
      else if (g == "isometry") isometry_group();
      else if (g == "structure_eqs") structure_group();
    }
    return records_;
  }

 private:
  std::vector<std::string> checked_acs() const {
    std::vector<std::string> out;
    for (const auto& j : e_.acs)
      if (j.label.find("_tilde") == std::string::npos) out.push_back(j.label);
    return out;
  }

  std::string claim(const std::string& candidate) const { return e_.expects(candidate) ? candidate : "extra"; }

  bool seen(const std::string& check) const {
    return std::any_of(records_.begin(), records_.end(), [&](const Record& r) { return r.check == check; });
  }

  void add(Record r) {
    if (!seen(r.check)) records_.push_back(std::move(r));
  }

  void add_status(const std::string& check, const std::string& claim_ref, Status s, std::string note) {
    Record r;
    r.check = check;
    r.claim_ref = claim_ref;
    r.verdict = s;
    r.max_residual = std::nan("");
    r.tolerance = 0.0;
    r.note = std::move(note);
    add(std::move(r));
  }

  bool refuse_if_lorentzian(const std::string& check, const std::string& candidate) {
    if (e_.metric.signature != Signature::lorentzian) return false;
    const std::string ref = e_.expects("signature_refusal") ? "signature_refusal" : claim(candidate);
    add_status(check, ref, Status::refused,
               "metric signature is lorentzian; almost Hermitian structures need a Riemannian metric");
    return true;
  }

  // Evaluates fn at every point in parallel; one residual vector per point.
  std::vector<PointResult> sweep(const std::function<std::vector<double>(const ChartPoint&)>& fn) const {
    return parallel_map<PointResult>(points_.size(), workers_, [&](std::size_t i) {
      PointResult pr;
      try {
        pr.r = fn(points_[i]);
      } catch (const std::exception& ex) {
        pr.error = short_error(ex);
      }
      return pr;
    });
  }

  // Max-reduction of column k in point order.
  Record reduce(const std::vector<PointResult>& res, size_t k, const std::string& check, const std::string& tol_key,
                const std::string& claim_ref) const {
    MaxTracker t;
    std::string first_error;
    for (size_t i = 0; i < res.size(); ++i) {
      const double v = res[i].error.empty() ? res[i].r.at(k) : std::nan("");
      if (!res[i].error.empty() && first_error.empty()) first_error = res[i].error;
      t.observe(v, points_[i].coords);
    }
    const Verdict v = t.verdict(check, tol_.at(tol_key));
    Record r;
    r.check = check;
    r.claim_ref = claim_ref;
    r.verdict = v.status;
    r.max_residual = v.max_residual;
    if (v.has_argmax) r.argmax_point = v.argmax;
    r.tolerance = v.tolerance;
    if (!first_error.empty()) r.note = "evaluation error: " + first_error;
    return r;
  }

  Record from_verdict(const Verdict& v, const std::string& check, const std::string& claim_ref) const {
    Record r;
    r.check = check;
    r.claim_ref = claim_ref;
    r.verdict = v.status;
    r.max_residual = v.max_residual;
    if (v.has_argmax) r.argmax_point = v.argmax;
    r.tolerance = v.tolerance;
    r.note = v.note;
    return r;
  }

  void curvature_group() {
    const FrameField* frame = e_.frame();
    const auto res = sweep([&](const ChartPoint& p) {
      const CurvatureBundle c = curvature(e_.metric, p);
      std::vector<double> r{riemann_symmetry_residual(c), tracefree_trace_residual(c), ricci_residual(c),
                            tracefree_ricci_residual(c)};
      if (frame) {
        r.push_back(orthonormality_residual(*frame, e_.metric, p));
        r.push_back(duality_residual(*frame, p));
      }
      return r;
    });
    add(reduce(res, 0, "riemann_symmetries", "riemann_symmetries", "extra"));
    add(reduce(res, 1, "tracefree_trace", "tracefree_trace", "extra"));
    if (e_.non_einstein_control) {
      add(not_einstein(res));
    } else {
      add(reduce(res, 2, "ricci_flat", "ricci_flat", claim("ricci_flat")));
    }
    if (frame) {
      add(reduce(res, 4, "frame_orthonormal", "frame_orthonormal", "extra"));
      add(reduce(res, 5, "frame_duality", "frame_duality", "extra"));
    }
  }

  // The rescaled metric must not be Einstein: the smallest trace-free Ricci
  // residual over the sample has to stay above the tolerance.
  Record not_einstein(const std::vector<PointResult>& res) const {
    Record r;
    r.check = "not_einstein";
    r.claim_ref = "extra";
    r.tolerance = tol_.at("not_einstein");
    double lowest = INFINITY;
    bool fault = false;
    for (size_t i = 0; i < res.size(); ++i) {
      const double v = res[i].error.empty() ? res[i].r[3] : std::nan("");
      if (std::isnan(v)) {
        fault = true;
        if (!r.argmax_point) r.argmax_point = points_[i].coords;
        continue;
      }
      if (v < lowest) {
        lowest = v;
        if (!fault) r.argmax_point = points_[i].coords;
      }
    }
    r.max_residual = fault ? std::nan("") : lowest;
    r.verdict = fault ? Status::fault : (lowest > r.tolerance ? Status::pass : Status::fail);
    r.note = "minimum trace-free Ricci residual over the sample; must exceed the tolerance";
    return r;
  }

  void structure_records(const AlmostComplexField& j, const std::string& claim_ref, bool closed) {
    const auto res = sweep([&](const ChartPoint& p) {
      const Mat4 g = values(metric_at(e_.metric, p));
      const Mat4 J = values(acs_at(j, p));
      std::vector<double> r{hermitian_residual(g, J), acs_residual(J), integrability_residual(j, e_.metric, p)};
      if (closed) r.push_back(kahler_closed_residual(e_.metric, j, p));
      return r;
    });
    const std::string tag = "[" + j.label + "]";
    if (closed) add(reduce(res, 3, "kahler_closed" + tag, "kahler_closed", claim_ref));
    add(reduce(res, 0, "hermitian" + tag, "hermitian", claim_ref));
    add(reduce(res, 1, "acs" + tag, "acs", claim_ref));
    add(reduce(res, 2, "integrable" + tag, "integrable", claim_ref));
  }

  void hermitian_group() {
    if (refuse_if_lorentzian("hermitian", "hermitian")) return;
    if (acs_.empty()) return add_status("hermitian", "extra", Status::inapplicable, "entry has no complex structure");
    for (const auto* j : acs_) structure_records(*j, claim("hermitian"), false);
  }

  void kahler_group() {
    if (refuse_if_lorentzian("kahler", "kahler")) return;
    if (acs_.empty()) return add_status("kahler", claim("kahler"), Status::inapplicable, "entry has no complex structure");
    for (const auto* j : acs_) structure_records(*j, claim("kahler"), true);
  }

  void hyper_kahler_group() {
    if (refuse_if_lorentzian("hyper_kahler", "hyper_kahler")) return;
    if (!e_.hyper_kahler_triple)
      return add_status("hyper_kahler", claim("hyper_kahler"), Status::inapplicable,
                        "entry declares no triple of complex structures");
    const auto& t = *e_.hyper_kahler_triple;
    std::array<const AlmostComplexField*, 3> js{};
    for (int i = 0; i < 3; ++i) {
      js[static_cast<size_t>(i)] = e_.find_acs(t[static_cast<size_t>(i)]);
      if (!js[static_cast<size_t>(i)]) throw ContractViolation("hyper-Kahler triple names unknown structure " + t[i]);
    }
    const std::string ref = claim("hyper_kahler");
    for (const auto* j : js) structure_records(*j, ref, true);
    const auto res = sweep([&](const ChartPoint& p) {
      const auto q = quaternion_residuals(values(acs_at(*js[0], p)), values(acs_at(*js[1], p)),
                                          values(acs_at(*js[2], p)));
      return std::vector<double>(q.begin(), q.end());
    });
    Record worst = reduce_max_columns(res, 7, "quaternion[" + t[0] + "," + t[1] + "," + t[2] + "]", "quaternion", ref);
    add(worst);
  }

  Record reduce_max_columns(const std::vector<PointResult>& res, size_t n, const std::string& check,
                            const std::string& tol_key, const std::string& claim_ref) const {
    std::vector<PointResult> merged(res.size());
    std::vector<double> col_max(n, 0.0);
    for (size_t i = 0; i < res.size(); ++i) {
      merged[i].error = res[i].error;
      if (!res[i].error.empty()) continue;
      double m = 0.0;
      for (size_t k = 0; k < n; ++k) {
        m = std::isnan(res[i].r[k]) ? res[i].r[k] : std::max(m, res[i].r[k]);
        col_max[k] = std::max(col_max[k], res[i].r[k]);
      }
      merged[i].r = {m};
    }
    Record r = reduce(merged, 0, check, tol_key, claim_ref);
    std::string failed;
    for (size_t k = 0; k < n; ++k)
      if (!(col_max[k] < r.tolerance))
        failed += (failed.empty() ? "" : "; ") + std::string(kQuaternionRelations[k]);
    if (!failed.empty() && r.note.empty()) r.note = "violated: " + failed;
    return r;
  }

  void lck_group() {
    if (refuse_if_lorentzian("lck", "gck")) return;
    if (acs_.empty()) return add_status("lck", "extra", Status::inapplicable, "entry has no complex structure");
    const AlmostComplexField& j = *acs_.front();
    const std::string ref = e_.expects("gck") ? "gck" : claim("lck");
    const std::string tag = "[" + j.label + "]";
    const auto res = sweep([&](const ChartPoint& p) {
      const OneFormJets xi = lee_form(e_.metric, j, p);
      const Vec4 xv = values(xi);
      const Vec4 xc = lee_form_codifferential(e_.metric, j, p);
      double diff = 0.0, ref_scale = 1.0;
      for (int i = 0; i < kDim; ++i) {
        diff = std::max(diff, std::abs(xv[i] - xc[i]));
        ref_scale = std::max(ref_scale, std::abs(xv[i]));
      }
      return std::vector<double>{lee_identity(e_.metric, j, p).residual, lee_closed_residual(xi), diff / ref_scale,
                                 kahler_closed_residual(e_.metric, j, p)};
    });
    Record identity = reduce(res, 0, "lee_identity" + tag, "lee_identity", ref);
    Record closed = reduce(res, 1, "lee_closed" + tag, "lee_closed", ref);
    Record agree = reduce(res, 2, "lee_formulas_agree" + tag, "lee_formulas_agree", ref);
    Record kahler = reduce(res, 3, "d_omega", "kahler_closed", ref);
    add(identity);
    add(closed);
    add(agree);

    Record exact;
    exact.check = "lee_exact" + tag;
    exact.claim_ref = ref;
    exact.tolerance = tol_.at("potential");
    std::optional<Potential> potential;
    if (closed.verdict == Status::fault || identity.verdict == Status::fault) {
      exact.verdict = Status::fault;
      exact.max_residual = std::nan("");
      exact.note = "Lee form could not be evaluated";
    } else {
      const OneFormField xi = [&](const ChartPoint& p) { return lee_form(e_.metric, j, p); };
      const ExactnessResult ex =
          exactness_probe(xi, e_.metric.chart, points_, exact.tolerance, tol_.at("lee_closed"));
      potential = ex.potential;
      if (potential) {
        exact.verdict = Status::pass;
        exact.max_residual = potential->max_residual;
        exact.note = "potential f = " + potential->description + " (" + ex.note + ")";
      } else {
        exact.verdict = Status::fail;
        exact.max_residual = std::nan("");
        exact.note = ex.note;
      }
    }
    add(exact);

    LckClass cls = LckClass::not_lck;
    if (kahler.verdict == Status::pass) cls = LckClass::kahler;
    else if (identity.verdict == Status::pass && closed.verdict == Status::pass)
      cls = potential ? LckClass::globally_conformally_kahler : LckClass::locally_conformally_kahler;
    Record c;
    c.check = "lck_class" + tag;
    c.claim_ref = ref;
    c.verdict = cls == LckClass::not_lck ? Status::fail : Status::pass;
    c.max_residual = kahler.max_residual;
    c.argmax_point = kahler.argmax_point;
    c.tolerance = kahler.tolerance;
    c.note = "classification: " + to_string(cls) + "; residual column is max |d omega|";
    if (kahler.verdict == Status::fault) c.verdict = Status::fault;
    add(c);

    if (potential && e_.lee_conformal_factor) {
      // exp(-f) must be a constant multiple of the entry's conformal factor.
      const ScalarField lambda = *e_.lee_conformal_factor;
      const ScalarField f = potential->f;
      std::vector<double> ratio, ones;
      Record cf;
      cf.check = "conformal_factor" + tag;
      cf.claim_ref = ref;
      for (const auto& p : points_) {
        const Coords x = seed(p);
        ratio.push_back(std::exp(-f(x).value()));
        ones.push_back(lambda(x).value());
      }
      const FactorMatch m = factor_match(ratio, ones, points_, tol_.at("conformal_factor"));
      cf = from_verdict(m.verdict, cf.check, ref);
      cf.note = "exp(-f) / lambda: " + m.verdict.note;
      add(cf);
    }
  }

  void weyl_group() {
    if (refuse_if_lorentzian("weyl", "weyl_degenerate")) return;
    const FrameField* frame = e_.frame();
    const std::string ref = claim("weyl_degenerate");
    if (!frame) return add_status("weyl_degenerate", ref, Status::inapplicable, "entry has no orthonormal frame");
    const bool has_lambda = e_.lee_conformal_factor.has_value();
    const auto res = sweep([&](const ChartPoint& p) {
      const CurvatureBundle c = curvature(e_.metric, p);
      const Mat3 A = weyl_plus_matrix(e_.metric, c, p, *frame);
      const WeylSpectrum s = weyl_plus_spectrum(A, c.scale());
      const double trace_res = std::abs(s.trace - c.scalar / 4.0) / c.scale();
      const double einstein = tracefree_ricci_residual(c);
      const double lam = has_lambda ? (*e_.lee_conformal_factor)(seed(p)).value() : 0.0;
      return std::vector<double>{trace_res, s.vanishes ? 0.0 : s.pattern_residual, s.vanishes ? 1.0 : 0.0,
                                 std::cbrt(s.norm2), lam, einstein};
    });
    add(reduce(res, 0, "weyl_trace", "weyl_trace", "extra"));

    bool all_vanish = true, any_vanish = false, any_error = false, einstein = true;
    for (const auto& pr : res) {
      if (!pr.error.empty()) {
        any_error = true;
        continue;
      }
      all_vanish = all_vanish && pr.r[2] == 1.0;
      any_vanish = any_vanish || pr.r[2] == 1.0;
      einstein = einstein && pr.r[5] < tol_.at("ricci_flat");
    }
    if (all_vanish && !any_error) {
      add_status("weyl_degenerate", ref, Status::inapplicable,
                 "W+ vanishes at every sample point; the degenerate-spectrum test needs W+ != 0");
      return;
    }
    Record pattern = reduce(res, 1, "weyl_degenerate", "weyl_degenerate", ref);
    if (any_vanish) pattern.note = "W+ vanishes at some sample points; those count as degenerate";
    add(pattern);

    if (!has_lambda) return;
    if (!einstein) {
      add_status("factor_match", ref, Status::inapplicable, "metric is not Einstein on the sample");
      return;
    }
    if (any_error || any_vanish) {
      add_status("factor_match", ref, any_error ? Status::fault : Status::inapplicable,
                 any_error ? "curvature evaluation failed" : "W+ vanishes at some sample points");
      return;
    }
    std::vector<double> lee, weyl;
    for (const auto& pr : res) {
      lee.push_back(pr.r[4]);
      weyl.push_back(pr.r[3]);
    }
    const FactorMatch m = factor_match(lee, weyl, points_, tol_.at("factor_match"));
    Record r = from_verdict(m.verdict, "factor_match", ref);
    r.note = "lee factor / |W+|^(2/3): " + m.verdict.note;
    add(r);
  }

  void isometry_group() {
    const bool from_r3 = e_.name == "taub-nut-r3";
    const bool from_polar = e_.name == "taub-nut" && e_.parameter("m") == 0.5;
    if (!from_r3 && !from_polar) {
      add_status("isometry", "extra", Status::inapplicable, "no chart isometry is registered for this entry");
      return;
    }
    const GeometryEntry r3 = from_r3 ? e_ : taub_nut_r3();
    const GeometryEntry polar = from_polar ? e_ : taub_nut();
    const auto res = sweep([&](const ChartPoint& p) {
      const ChartPoint x = from_r3 ? p : taub_nut_isometry_inverse(p, r3);
      const ChartPoint q = taub_nut_isometry(x, polar);
      const ChartPoint back = taub_nut_isometry_inverse(q, r3);
      double rt = 0.0, scale = 1.0;
      for (int i = 0; i < kDim; ++i) {
        rt = std::max(rt, std::abs(back.coords[i] - x.coords[i]));
        scale = std::max(scale, std::abs(x.coords[i]));
      }
      return std::vector<double>{isometry_pullback_residual(r3, polar, x), theta_hodge_residual(x), rt / scale};
    });
    add(reduce(res, 0, "isometry_pullback", "isometry", "extra"));
    add(reduce(res, 1, "theta_hodge", "theta_hodge", "extra"));
    add(reduce(res, 2, "isometry_roundtrip", "isometry_roundtrip", "extra"));
  }

  void structure_group() {
    std::array<const KFormField*, 3> s{e_.find_form("sigma1"), e_.find_form("sigma2"), e_.find_form("sigma3")};
    if (!s[0] || !s[1] || !s[2]) {
      add_status("structure_equations", "extra", Status::inapplicable, "entry has no sigma forms");
      return;
    }
    const auto res = sweep([&](const ChartPoint& p) {
      const std::array<FormJ, 3> f{form_at(*s[0], p), form_at(*s[1], p), form_at(*s[2], p)};
      return std::vector<double>{structure_equation_residual(f, 1), structure_equation_residual(f, -1)};
    });
    Record r = reduce(res, 0, "structure_equations", "structure_equations", "extra");
    double opposite = 0.0;
    for (const auto& pr : res)
      if (pr.error.empty()) opposite = std::max(opposite, pr.r[1]);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "tested d sigma_i = +eps_ijk sigma_j ^ sigma_k; with the opposite sign the max residual is %.3e",
                  opposite);
    if (r.note.empty()) r.note = buf;
    add(r);
  }

  const GeometryEntry& e_;
  std::map<std::string, double> tol_;
  int workers_;
  std::vector<ChartPoint> points_;
  std::vector<const AlmostComplexField*> acs_;
  std::vector<Record> records_;
};

}  // namespace

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::refused: ++s.refused; break;
      case Status::inapplicable: ++s.inapplicable; break;
      case Status::fault: ++s.fault; break;
    }
  }
  return s;
}

bool operator==(const Record& a, const Record& b) {
  return a.check == b.check && a.claim_ref == b.claim_ref && a.verdict == b.verdict &&
         same_double(a.max_residual, b.max_residual) && a.argmax_point == b.argmax_point &&
         same_double(a.tolerance, b.tolerance) && a.note == b.note;
}

bool operator==(const Report& a, const Report& b) {
  return a.schema == b.schema && a.geometry == b.geometry && a.params == b.params && a.conventions == b.conventions &&
         a.seed == b.seed && a.samples == b.samples && a.records == b.records;
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> names = {"curvature", "hermitian", "kahler",     "hyper_kahler",
                                                 "lck",       "weyl",      "isometry",   "structure_eqs"};
  return names;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = {
      {"riemann_symmetries", 1e-9}, {"tracefree_trace", 1e-9},    {"ricci_flat", 1e-8},
      {"not_einstein", 1e-6},       {"frame_orthonormal", 1e-9},  {"frame_duality", 1e-9},
      {"hermitian", 1e-9},          {"acs", 1e-12},               {"integrable", 1e-8},
      {"kahler_closed", 1e-8},      {"quaternion", 1e-8},         {"lee_identity", 1e-8},
      {"lee_closed", 1e-9},         {"lee_formulas_agree", 1e-8}, {"potential", 1e-8},
      {"conformal_factor", 1e-8},   {"weyl_trace", 1e-9},         {"weyl_degenerate", 1e-7},
      {"factor_match", 1e-8},       {"isometry", 1e-8},           {"theta_hodge", 1e-9},
      {"isometry_roundtrip", 1e-12}, {"structure_equations", 1e-9}};
  return t;
}

std::vector<std::pair<std::string, std::string>> conventions_block(const GeometryEntry& entry) {
  const auto& o = entry.metric.orientation;
  std::string orient = o.labels[0] + "^" + o.labels[1] + "^" + o.labels[2] + "^" + o.labels[3] +
                       (o.sign > 0 ? " positive" : " negative") + " (coframe of the entry's reference frame)";
  return {
      {"riemann", "R^l_ijk = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik"},
      {"riemann_lowered", "R_abcd = g_ae R^e_cdb (positive sectional curvature on spheres)"},
      {"ricci", "R_jk = R^i_ijk"},
      {"epsilon", "eps_1234 = +1 on frame indices; (*a)_rs = 1/2 sqrt|g| eps_mnrs a^mn"},
      {"orientation", orient},
      {"self_dual_basis", "e1^e2 + e3^e4, e1^e3 + e4^e2, e1^e4 + e2^e3 in orientation-label order"},
      {"weyl_plus", "A = W+ + (R/12) Id on the self-dual basis; spectrum pattern {l, l, -2l}"},
      {"kahler_form", "omega(X, Y) = g(JX, Y), omega_sn = g_mn J^m_s"},
      {"lee_form", "xi_i = -(nabla_a J^a_b) J^b_i, so that d omega = xi ^ omega"},
      {"zero_test", "curvature residuals divide by max |R^l_ijk| + 1e-30 at each point"},
  };
}

std::vector<std::string> resolve_checks(const GeometryEntry& entry, const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  auto push = [&](const std::string& c) {
    if (std::find(check_groups().begin(), check_groups().end(), c) == check_groups().end())
      throw std::invalid_argument("unknown check '" + c + "'");
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  for (const auto& c : requested) {
    if (c == "all")
      for (const auto& d : entry.default_checks) push(d);
    else
      push(c);
  }
  return out;
}

std::map<std::string, double> resolve_tolerances(const std::map<std::string, double>& overrides) {
  std::map<std::string, double> t = default_tolerances();
  for (const auto& [k, v] : overrides) {
    if (!t.contains(k)) throw std::invalid_argument("unknown tolerance key '" + k + "'");
    if (!std::isfinite(v) || !(v > 0.0))
      throw std::invalid_argument("tolerance '" + k + "' must be a positive finite number");
    t[k] = v;
  }
  return t;
}

Region resolve_region(const GeometryEntry& entry, const RunConfig& config) {
  Region r = entry.region;
  for (const auto& [name, bounds] : config.region) {
    const auto& names = entry.metric.chart.coordinate_names;
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown region coordinate '" + name + "'");
    if (!(bounds.first < bounds.second) || !std::isfinite(bounds.first) || !std::isfinite(bounds.second))
      throw std::invalid_argument("region bounds for '" + name + "' need finite lo < hi");
    r[static_cast<size_t>(it - names.begin())] = bounds;
  }
  return r;
}

Report run_checks(const GeometryEntry& entry, const RunConfig& config) {
  const auto groups = resolve_checks(entry, config.checks);
  Report rep;
  rep.geometry = entry.name;
  rep.params = entry.parameters;
  rep.conventions = conventions_block(entry);
  rep.seed = config.seed;
  rep.samples = config.samples;
  Runner runner(entry, config);
  rep.records = runner.run(groups);
  return rep;
}

int exit_code(const Report& report) {
  const Summary s = report.summary();
  if (s.fault > 0) return 3;
  if (s.fail > 0) return 1;
  return 0;
}

}  // namespace curvlab
