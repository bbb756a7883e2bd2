#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qseries/errors.hpp"
#include "qseries/verify.hpp"

namespace qseries {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::kConfigError, msg); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_real(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && end == s.data() + s.size();
}

// ---- config -------------------------------------------------------------

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_complex_literal(j.get<std::string>());
    } catch (const Error& e) {
      config_error(where + ": " + e.what());
    }
  }
  config_error(where + ": expected a number or an \"re,im\" string");
}

ParamValue param_from_json(const std::string& key, const Json& j) {
  if (key == "equation" || key == "function") {
    if (!j.is_string()) config_error("parameter '" + key + "' must be a string");
    return ParamValue::of(j.get<std::string>());
  }
  if (j.is_array()) {
    std::vector<Complex> v;
    for (const auto& e : j) v.push_back(complex_from_json(e, "parameter '" + key + "'"));
    return ParamValue::of(std::move(v));
  }
  return ParamValue::of(complex_from_json(j, "parameter '" + key + "'"));
}

double positive(const Json& j, const std::string& what) {
  if (!j.is_number() || !(j.get<double>() > 0.0)) config_error(what + " must be a positive number");
  return j.get<double>();
}

// ---- writer -------------------------------------------------------------

std::string real_text(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_text(Complex v) {
  return "[" + real_text(v.real()) + ", " + real_text(v.imag()) + "]";
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

std::string value_text(const ParamValue& v) {
  switch (v.kind) {
    case ParamValue::Kind::kScalar: return complex_text(v.scalar);
    case ParamValue::Kind::kText: return quoted(v.text);
    case ParamValue::Kind::kList: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.list.size(); ++i) {
        if (i) out += ", ";
        out += complex_text(v.list[i]);
      }
      return out + "]";
    }
  }
  return "null";
}

std::string json_report(const SweepReport& r) {
  std::ostringstream os;
  const SweepSummary s = summarize(r.records);
  os << "{\n"
     << "  \"identity\": " << quoted(r.identity) << ",\n"
     << "  \"seed\": " << r.seed << ",\n"
     << "  \"tolerance\": " << real_text(r.tolerance) << ",\n"
     << "  \"precision_bits\": " << r.precision_bits << ",\n"
     << "  \"summary\": {\"pass\": " << s.pass << ", \"skip\": " << s.skip
     << ", \"fail\": " << s.fail << ", \"max_rel_residual\": " << real_text(s.max_rel_residual)
     << "},\n"
     << "  \"records\": [";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const PointRecord& p = r.records[i];
    os << (i ? ",\n" : "\n") << "    {\"index\": " << p.index << ", \"check\": " << quoted(p.check)
       << ",\n     \"inputs\": {";
    for (std::size_t k = 0; k < p.inputs.size(); ++k) {
      os << (k ? ", " : "") << quoted(p.inputs[k].first) << ": " << value_text(p.inputs[k].second);
    }
    os << "},\n     \"lhs\": " << complex_text(p.lhs) << ", \"rhs\": " << complex_text(p.rhs)
       << ",\n     \"abs_residual\": " << real_text(p.abs_residual)
       << ", \"rel_residual\": " << real_text(p.rel_residual)
       << ", \"tolerance\": " << real_text(p.tolerance)
       << ",\n     \"lhs_converged\": " << (p.lhs_converged ? "true" : "false")
       << ", \"rhs_converged\": " << (p.rhs_converged ? "true" : "false")
       << ", \"lhs_terms\": " << p.lhs_terms << ", \"rhs_terms\": " << p.rhs_terms
       << ",\n     \"outcome\": " << quoted(std::string(to_string(p.outcome)))
       << ", \"reason\": " << quoted(p.reason) << "}";
  }
  os << (r.records.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_inputs(const ParamTuple& inputs) {
  std::string out;
  for (const auto& [k, v] : inputs) {
    if (!out.empty()) out += ';';
    out += k + '=';
    switch (v.kind) {
      case ParamValue::Kind::kScalar:
        out += csv_real(v.scalar.real()) + ' ' + csv_real(v.scalar.imag()) + 'i';
        break;
      case ParamValue::Kind::kText: out += v.text; break;
      case ParamValue::Kind::kList:
        for (std::size_t i = 0; i < v.list.size(); ++i) {
          out += (i ? "|" : "") + csv_real(v.list[i].real()) + ' ' + csv_real(v.list[i].imag()) + 'i';
        }
        break;
    }
  }
  return out;
}

std::string csv_report(const SweepReport& r) {
  std::ostringstream os;
  os << "identity,index,check,inputs,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,"
        "tolerance,lhs_converged,rhs_converged,lhs_terms,rhs_terms,outcome,reason\n";
  for (const PointRecord& p : r.records) {
    os << r.identity << ',' << p.index << ',' << csv_field(p.check) << ','
       << csv_field(csv_inputs(p.inputs)) << ',' << csv_real(p.lhs.real()) << ','
       << csv_real(p.lhs.imag()) << ',' << csv_real(p.rhs.real()) << ',' << csv_real(p.rhs.imag())
       << ',' << csv_real(p.abs_residual) << ',' << csv_real(p.rel_residual) << ','
       << csv_real(p.tolerance) << ',' << (p.lhs_converged ? 1 : 0) << ','
       << (p.rhs_converged ? 1 : 0) << ',' << p.lhs_terms << ',' << p.rhs_terms << ','
       << to_string(p.outcome) << ',' << csv_field(p.reason) << '\n';
  }
  return os.str();
}

// ---- reader -------------------------------------------------------------

double real_from(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return NAN;
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
  }
  config_error("report: expected a number");
}

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) config_error("report: expected [re, im]");
  return {real_from(j[0]), real_from(j[1])};
}

bool is_complex_pair(const Json& j) {
  return j.is_array() && j.size() == 2 && !j[0].is_array() && !j[1].is_array();
}

Outcome outcome_from(const std::string& s) {
  if (s == "pass") return Outcome::kPass;
  if (s == "skip") return Outcome::kSkip;
  if (s == "fail") return Outcome::kFail;
  config_error("report: unknown outcome '" + s + "'");
}

}  // namespace

Complex parse_complex_literal(std::string_view text) {
  double re = 0.0, im = 0.0;
  const auto comma = text.find(',');
  bool ok;
  if (comma == std::string_view::npos) {
    ok = parse_real(text, re);
  } else {
    ok = parse_real(text.substr(0, comma), re) && parse_real(text.substr(comma + 1), im);
  }
  if (!ok || !std::isfinite(re) || !std::isfinite(im)) {
    config_error("malformed complex literal '" + std::string(text) + "' (expected re or \"re,im\")");
  }
  return {re, im};
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("config is not valid json: ") + e.what());
  }
  if (!j.is_object()) config_error("config must be a json object");
  static const char* const known[] = {"identity", "tolerance", "seed",  "precision",
                                      "random",   "grid",      "check_tolerances"};
  for (const auto& [key, value] : j.items()) {
    bool found = false;
    for (const char* k : known) found = found || key == k;
    if (!found) config_error("unknown config key '" + key + "'");
  }
  if (!j.contains("identity") || !j["identity"].is_string()) config_error("config needs \"identity\"");
  SweepConfig cfg;
  cfg.identity = identity_from_string(j["identity"].get<std::string>());
  if (j.contains("tolerance")) cfg.tolerance = positive(j["tolerance"], "tolerance");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) config_error("seed must be a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("precision")) {
    if (!j["precision"].is_number_integer()) config_error("precision must be 53 or 113");
    cfg.precision_bits = j["precision"].get<int>();
    if (cfg.precision_bits != QContext::kDoubleBits && cfg.precision_bits != QContext::kQuadBits) {
      config_error("precision must be 53 or 113");
    }
  }
  if (j.contains("random")) {
    const Json& r = j["random"];
    if (!r.is_object()) config_error("random must be an object");
    if (r.contains("count")) {
      if (!r["count"].is_number_unsigned()) config_error("random.count must be a non-negative integer");
      cfg.random.count = r["count"].get<int>();
    }
    if (r.contains("r_min")) cfg.random.r_min = positive(r["r_min"], "random.r_min");
    if (r.contains("r_max")) cfg.random.r_max = positive(r["r_max"], "random.r_max");
    if (cfg.random.r_max < cfg.random.r_min) config_error("random.r_max must be >= r_min");
  }
  if (j.contains("check_tolerances")) {
    const Json& c = j["check_tolerances"];
    if (!c.is_object()) config_error("check_tolerances must be an object");
    for (const auto& [key, value] : c.items()) {
      cfg.check_tolerances.emplace_back(key, positive(value, "check_tolerances." + key));
    }
  }
  if (!j.contains("grid") || !j["grid"].is_array()) config_error("config needs a \"grid\" array");
  for (const auto& entry : j["grid"]) {
    if (!entry.is_object()) config_error("grid entries must be objects");
    ParamTuple t;
    for (const auto& [key, value] : entry.items()) t.emplace_back(key, param_from_json(key, value));
    cfg.parameter_grid.push_back(std::move(t));
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str());
}

std::string format_report(const SweepReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? json_report(report) : csv_report(report);
}

void write_report(const SweepReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot open '" + path + "' for writing");
  out << format_report(report, format);
  out.flush();
  if (!out) throw Error(ErrorKind::kIoError, "failed writing '" + path + "'");
}

SweepReport parse_json_report(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
    SweepReport r;
    r.identity = j.at("identity").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tolerance = real_from(j.at("tolerance"));
    r.precision_bits = j.at("precision_bits").get<int>();
    const Json& s = j.at("summary");
    r.summary.pass = s.at("pass").get<std::size_t>();
    r.summary.skip = s.at("skip").get<std::size_t>();
    r.summary.fail = s.at("fail").get<std::size_t>();
    r.summary.max_rel_residual = real_from(s.at("max_rel_residual"));
    for (const auto& e : j.at("records")) {
      PointRecord p;
      p.index = e.at("index").get<std::size_t>();
      p.check = e.at("check").get<std::string>();
      for (const auto& [key, value] : e.at("inputs").items()) {
        if (value.is_string()) {
          p.inputs.emplace_back(key, ParamValue::of(value.get<std::string>()));
        } else if (is_complex_pair(value)) {
          p.inputs.emplace_back(key, ParamValue::of(complex_from(value)));
        } else {
          std::vector<Complex> v;
          for (const auto& c : value) v.push_back(complex_from(c));
          p.inputs.emplace_back(key, ParamValue::of(std::move(v)));
        }
      }
      p.lhs = complex_from(e.at("lhs"));
      p.rhs = complex_from(e.at("rhs"));
      p.abs_residual = real_from(e.at("abs_residual"));
      p.rel_residual = real_from(e.at("rel_residual"));
      p.tolerance = real_from(e.at("tolerance"));
      p.lhs_converged = e.at("lhs_converged").get<bool>();
      p.rhs_converged = e.at("rhs_converged").get<bool>();
      p.lhs_terms = e.at("lhs_terms").get<long>();
      p.rhs_terms = e.at("rhs_terms").get<long>();
      p.outcome = outcome_from(e.at("outcome").get<std::string>());
      p.reason = e.at("reason").get<std::string>();
      r.records.push_back(std::move(p));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qseries
