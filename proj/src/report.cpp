#include "curvlab/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace curvlab {

namespace {

using ordered = nlohmann::ordered_json;

ordered number(double v) { return std::isfinite(v) ? ordered(v) : ordered(nullptr); }

double number_from(const ordered& v) { return v.is_null() ? std::nan("") : v.get<double>(); }

std::string sci(double v) {
  if (std::isnan(v)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string point_text(const std::optional<Point4>& p) {
  if (!p) return "-";
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g, %.6g)", (*p)[0], (*p)[1], (*p)[2], (*p)[3]);
  return buf;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string report_to_json(const Report& report) {
  ordered j;
  j["schema"] = report.schema;
  j["geometry"] = report.geometry;
  ordered params = ordered::object();
  for (const auto& [k, v] : report.params) params[k] = number(v);
  j["params"] = params;
  ordered conv = ordered::object();
  for (const auto& [k, v] : report.conventions) conv[k] = v;
  j["conventions"] = conv;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  ordered records = ordered::array();
  for (const auto& r : report.records) {
    ordered o;
    o["check"] = r.check;
    o["claim_ref"] = r.claim_ref;
    o["verdict"] = to_string(r.verdict);
    o["max_residual"] = number(r.max_residual);
    if (r.argmax_point) {
      ordered pt = ordered::array();
      for (double x : *r.argmax_point) pt.push_back(number(x));
      o["argmax_point"] = pt;
    } else {
      o["argmax_point"] = nullptr;
    }
    o["tolerance"] = number(r.tolerance);
    o["note"] = r.note;
    records.push_back(o);
  }
  j["records"] = records;
  const Summary s = report.summary();
  j["summary"] = {{"total", s.total()},         {"pass", s.pass},   {"fail", s.fail},
                  {"refused", s.refused},       {"inapplicable", s.inapplicable},
                  {"fault", s.fault}};
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  ordered j;
  try {
    j = ordered::parse(text);
  } catch (const ordered::parse_error& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what(), 0, 0);
  }
  try {
    Report r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != "curvlab-report/1") throw ParseError("unsupported report schema '" + r.schema + "'", 0, 0);
    r.geometry = j.at("geometry").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, number_from(v));
    for (const auto& [k, v] : j.at("conventions").items()) r.conventions.emplace_back(k, v.get<std::string>());
    r.seed = j.at("seed").get<std::uint64_t>();
    r.samples = j.at("samples").get<std::size_t>();
    for (const auto& o : j.at("records")) {
      Record rec;
      rec.check = o.at("check").get<std::string>();
      rec.claim_ref = o.at("claim_ref").get<std::string>();
      rec.verdict = status_from_string(o.at("verdict").get<std::string>());
      rec.max_residual = number_from(o.at("max_residual"));
      if (!o.at("argmax_point").is_null()) {
        Point4 p{};
        for (int i = 0; i < kDim; ++i) p[static_cast<size_t>(i)] = number_from(o.at("argmax_point").at(i));
        rec.argmax_point = p;
      }
      rec.tolerance = number_from(o.at("tolerance"));
      rec.note = o.value("note", "");
      r.records.push_back(rec);
    }
    return r;
  } catch (const ordered::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0, 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0, 0);
  }
}

std::string report_to_text(const Report& report) {
  std::string out;
  out += "curvlab report (" + report.schema + ")\n";
  out += "geometry: " + report.geometry + "\n";
  out += "params:";
  if (report.params.empty()) out += " none";
  for (const auto& [k, v] : report.params) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %s=%.17g", k.c_str(), v);
    out += buf;
  }
  out += "\nseed: " + std::to_string(report.seed) + "  samples: " + std::to_string(report.samples) + "\n";
  out += "conventions:\n";
  for (const auto& [k, v] : report.conventions) out += "  " + k + ": " + v + "\n";
  out += "records:\n";
  for (const auto& r : report.records) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-12s ", upper(to_string(r.verdict)).c_str());
    out += buf;
    out += r.check + "  claim=" + r.claim_ref + "  max=" + sci(r.max_residual) + "  tol=" + sci(r.tolerance) +
           "  at=" + point_text(r.argmax_point) + "\n";
    if (!r.note.empty()) out += "               note: " + r.note + "\n";
  }
  const Summary s = report.summary();
  out += "summary: " + std::to_string(s.total()) + " records, " + std::to_string(s.pass) + " pass, " +
         std::to_string(s.fail) + " fail, " + std::to_string(s.refused) + " refused, " +
         std::to_string(s.inapplicable) + " inapplicable, " + std::to_string(s.fault) + " fault\n";
  return out;
}

}  // namespace curvlab
