#include "curvlab/geometry_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curvlab/expr.hpp"

namespace curvlab {

namespace {

using nlohmann::json;

struct Location {
  int line = 0;
  int column = 0;
};

Location locate_offset(std::string_view text, size_t offset) {
  Location loc{1, 1};
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

class Builder {
 public:
  Builder(std::string_view text, const ParamOverrides& overrides) : text_(text), overrides_(overrides) {}

  GeometryEntry build() {
    try {
      doc_ = json::parse(text_);
    } catch (const json::parse_error& e) {
      const Location at = locate_offset(text_, e.byte > 0 ? e.byte - 1 : 0);
      throw ParseError(std::string("invalid JSON: ") + e.what(), at.line, at.column);
    }
    if (!doc_.is_object()) throw ParseError("geometry file must contain a JSON object", 1, 1);

    GeometryEntry e;
    e.name = require_string("name");
    e.title = doc_.value("title", "geometry loaded from file");

    read_coordinates();
    read_parameters(e);

    Chart chart;
    chart.id = e.name;
    chart.coordinate_names = vocab_.coordinates;
    if (doc_.contains("periodic")) {
      for (const auto& p : array_of("periodic")) {
        const int i = coordinate_index(p.get<std::string>(), "periodic");
        chart.periodic[static_cast<size_t>(i)] = true;
      }
    }
    if (doc_.contains("guards")) {
      for (const auto& g : array_of("guards")) {
        if (!g.is_string()) schema_error("guards must be strings");
        const std::string src = g.get<std::string>();
        GuardExpression guard = with_location(src, [&] { return parse_guard(src, vocab_); });
        chart.guards.push_back(Guard{src, [guard](const Point4& x) { return guard(x); }});
      }
    }

    Signature sig = Signature::riemannian;
    const std::string s = doc_.value("signature", "riemannian");
    if (s == "lorentzian")
      sig = Signature::lorentzian;
    else if (s != "riemannian")
      schema_error("signature must be \"riemannian\" or \"lorentzian\"");
    Orientation orientation;
    if (doc_.contains("orientation")) {
      const int sign = doc_["orientation"].get<int>();
      if (sign != 1 && sign != -1) schema_error("orientation must be 1 or -1");
      orientation.sign = sign;
    }

    const auto g = matrix_of("metric", true);
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        if (strip(g[i][j].source()) != strip(g[j][i].source()))
          schema_error("metric entries [" + std::to_string(i) + "][" + std::to_string(j) + "] and [" +
                       std::to_string(j) + "][" + std::to_string(i) + "] differ; the metric must be symmetric");
    e.metric = MetricField{e.name, chart, sig, orientation, [g](const Coords& x) {
                             Mat4J m;
                             for (int i = 0; i < kDim; ++i)
                               for (int j = i; j < kDim; ++j) m[i][j] = m[j][i] = g[i][j](x);
                             return m;
                           }};

    if (doc_.contains("coframe")) {
      const auto E = matrix_of("coframe", false);
      e.frames.push_back(frame_from_coframe(e.name + ".frame", e.name, [E](const Coords& x) {
        Mat4J m;
        for (int a = 0; a < kDim; ++a)
          for (int mu = 0; mu < kDim; ++mu) m[a][mu] = E[a][mu](x);
        return m;
      }));
    }

    if (doc_.contains("complex_structures")) {
      for (const auto& js : array_of("complex_structures")) read_acs(e, js);
    }

    if (doc_.contains("lee_conformal_factor")) {
      const Expression f = expression_of(doc_["lee_conformal_factor"]);
      e.lee_conformal_factor = ScalarField([f](const Coords& x) { return f(x); });
    }

    if (doc_.contains("region")) {
      const json& r = doc_["region"];
      if (!r.is_object()) schema_error("region must be an object of coordinate: [lo, hi]");
      std::array<bool, kDim> seen{};
      for (const auto& [k, v] : r.items()) {
        const int i = coordinate_index(k, "region");
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
          schema_error("region." + k + " must be [lo, hi]");
        const double lo = v[0].get<double>(), hi = v[1].get<double>();
        if (!(lo < hi)) schema_error("region." + k + " needs lo < hi");
        e.region[static_cast<size_t>(i)] = {lo, hi};
        seen[static_cast<size_t>(i)] = true;
      }
      for (int i = 0; i < kDim; ++i)
        if (!seen[static_cast<size_t>(i)]) schema_error("region is missing coordinate '" + vocab_.coordinates[i] + "'");
    } else {
      schema_error("missing \"region\" (sampling bounds for every coordinate)");
    }

    if (doc_.contains("expected"))
      for (const auto& c : array_of("expected")) e.expected.push_back(c.get<std::string>());
    if (doc_.contains("checks")) {
      for (const auto& c : array_of("checks")) e.default_checks.push_back(c.get<std::string>());
    } else {
      e.default_checks = {"curvature"};
      if (!e.acs.empty()) e.default_checks.insert(e.default_checks.end(), {"kahler", "lck"});
      if (!e.frames.empty()) e.default_checks.push_back("weyl");
    }
    return e;
  }

 private:
  [[noreturn]] void schema_error(const std::string& what) const { throw ParseError(what, 0, 0); }

  static std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
  }

  std::string require_string(const char* key) const {
    if (!doc_.contains(key) || !doc_[key].is_string()) schema_error(std::string("missing string field \"") + key + "\"");
    return doc_[key].get<std::string>();
  }

  const json& array_of(const char* key) const {
    const json& a = doc_[key];
    if (!a.is_array()) schema_error(std::string("\"") + key + "\" must be an array");
    return a;
  }

  void read_coordinates() {
    if (!doc_.contains("coordinates")) schema_error("missing \"coordinates\"");
    const json& c = doc_["coordinates"];
    if (!c.is_array() || c.size() != kDim) schema_error("\"coordinates\" must list exactly four names");
    for (int i = 0; i < kDim; ++i) {
      if (!c[i].is_string()) schema_error("coordinate names must be strings");
      vocab_.coordinates[static_cast<size_t>(i)] = c[i].get<std::string>();
    }
  }

  void read_parameters(GeometryEntry& e) {
    if (doc_.contains("parameters")) {
      const json& p = doc_["parameters"];
      if (!p.is_object()) schema_error("\"parameters\" must be an object of name: number");
      for (const auto& [k, v] : p.items()) {
        if (!v.is_number()) schema_error("parameter '" + k + "' must be a number");
        vocab_.constants[k] = v.get<double>();
      }
    }
    for (const auto& [k, v] : overrides_) {
      if (!vocab_.constants.contains(k)) throw std::invalid_argument("geometry '" + e.name + "' has no parameter '" + k + "'");
      vocab_.constants[k] = v;
    }
    for (const auto& [k, v] : vocab_.constants) e.parameters.emplace_back(k, v);
  }

  int coordinate_index(const std::string& name, const std::string& where) const {
    for (int i = 0; i < kDim; ++i)
      if (vocab_.coordinates[static_cast<size_t>(i)] == name) return i;
    schema_error(where + ": unknown coordinate '" + name + "'");
  }

  // Re-throws a ParseError from an expression string with its position in the file.
  template <class F>
  auto with_location(const std::string& src, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError& err) {
      const size_t at = text_.find("\"" + src + "\"");
      if (at == std::string_view::npos) throw ParseError(std::string(err.what()) + " in \"" + src + "\"", 0, 0);
      const Location loc = locate_offset(text_, at + 1 + static_cast<size_t>(std::max(err.column(), 1) - 1));
      throw ParseError(std::string(err.what()) + " in \"" + src + "\"", loc.line, loc.column);
    }
  }

  Expression expression_of(const json& v) {
    if (v.is_number()) {
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      return parse_expression(os.str(), vocab_);
    }
    if (!v.is_string()) schema_error("expressions must be strings or numbers");
    const std::string src = v.get<std::string>();
    return with_location(src, [&] { return parse_expression(src, vocab_); });
  }

  std::array<std::array<Expression, kDim>, kDim> matrix_of(const char* key, bool required) {
    if (!doc_.contains(key)) {
      if (required) schema_error(std::string("missing \"") + key + "\"");
      return {};
    }
    const json& m = doc_[key];
    if (!m.is_array() || m.size() != kDim) schema_error(std::string("\"") + key + "\" must be a 4x4 array");
    std::array<std::array<Expression, kDim>, kDim> out;
    for (int i = 0; i < kDim; ++i) {
      if (!m[i].is_array() || m[i].size() != kDim) schema_error(std::string("\"") + key + "\" must be a 4x4 array");
      for (int j = 0; j < kDim; ++j) out[i][j] = expression_of(m[i][j]);
    }
    return out;
  }

  void read_acs(GeometryEntry& e, const json& js) {
    if (!js.is_object() || !js.contains("label")) schema_error("each complex structure needs a \"label\"");
    const std::string label = js["label"].get<std::string>();
    if (js.contains("frame_map")) {
      if (e.frames.empty()) schema_error("complex structure '" + label + "' uses frame_map but no coframe is given");
      const json& m = js["frame_map"];
      if (!m.is_array() || m.size() != kDim) schema_error("frame_map of '" + label + "' must list the images of e1..e4");
      FrameMap map;
      for (int a = 0; a < kDim; ++a) {
        std::string s = m[a].get<std::string>();
        int sign = 1;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
          sign = s[0] == '-' ? -1 : 1;
          s.erase(0, 1);
        }
        if (s.size() != 2 || s[0] != 'e' || s[1] < '1' || s[1] > '4')
          schema_error("frame_map entries look like \"e2\" or \"-e1\"");
        map.target[static_cast<size_t>(a)] = s[1] - '1';
        map.sign[static_cast<size_t>(a)] = sign;
      }
      e.acs.push_back(acs_from_frame(label, e.frames.front(), map));
    } else if (js.contains("matrix")) {
      const json& m = js["matrix"];
      if (!m.is_array() || m.size() != kDim) schema_error("matrix of '" + label + "' must be 4x4");
      std::array<std::array<Expression, kDim>, kDim> J;
      for (int i = 0; i < kDim; ++i) {
        if (!m[i].is_array() || m[i].size() != kDim) schema_error("matrix of '" + label + "' must be 4x4");
        for (int k = 0; k < kDim; ++k) J[i][k] = expression_of(m[i][k]);
      }
      e.acs.push_back(AlmostComplexField{label, e.name, [J](const Coords& x) {
                                           Mat4J out;
                                           for (int i = 0; i < kDim; ++i)
                                             for (int k = 0; k < kDim; ++k) out[i][k] = J[i][k](x);
                                           return out;
                                         }});
    } else {
      schema_error("complex structure '" + label + "' needs \"frame_map\" or \"matrix\"");
    }
  }

  std::string_view text_;
  const ParamOverrides& overrides_;
  json doc_;
  Vocabulary vocab_;
};

}  // namespace

GeometryEntry parse_geometry_json(std::string_view text, const ParamOverrides& overrides) {
  return Builder(text, overrides).build();
}

GeometryEntry load_geometry_file(const std::string& path, const ParamOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read geometry file '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_geometry_json(ss.str(), overrides);
}

}  // namespace curvlab
