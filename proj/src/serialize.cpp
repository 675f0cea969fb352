#include "powermean/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace powermean {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string number_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_double(v[i]);
  }
  return out + "]";
}

std::string string_array(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += quoted(v[i]);
  }
  return out + "]";
}

// strict double parse of a whole token
bool parse_number(const std::string& tok, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(tok, &pos);
    while (pos < tok.size() &&
           (tok[pos] == ' ' || tok[pos] == '\t' || tok[pos] == '\r'))
      ++pos;
    return pos == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

WeightedSample parse_sample_text(const std::string& text,
                                 const std::string& origin) {
  std::vector<double> values, weights;
  std::vector<std::string> errors;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    double value = 0.0, weight = 0.0;
    if (comma == std::string::npos ||
        !parse_number(trim(line.substr(0, comma)), value) ||
        !parse_number(trim(line.substr(comma + 1)), weight)) {
      errors.push_back("line " + std::to_string(lineno) +
                       ": expected 'value,weight'");
      continue;
    }
    values.push_back(value);
    weights.push_back(weight);
  }
  if (!errors.empty()) {
    std::string msg = origin + ": parse errors:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
  try {
    return WeightedSample(std::move(values), std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
}

WeightedSample parse_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sample_text(buf.str(), path);
}

std::string region_map_csv(const RegionMapSpec& spec,
                           const std::vector<RegionCell>& cells) {
  (void)spec;
  std::string out = "r,s,rhs,lhs,citation_rhs,citation_lhs\n";
  for (const RegionCell& cell : cells) {
    out += format_double(cell.r);
    out += ",";
    out += format_double(cell.s);
    if (cell.degenerate) {
      out += ",degenerate,degenerate,,\n";
    } else {
      out += ",";
      out += to_string(cell.rhs.verdict);
      out += ",";
      out += to_string(cell.lhs.verdict);
      out += ",";
      out += cell.rhs.citation;
      out += ",";
      out += cell.lhs.citation;
      out += "\n";
    }
  }
  return out;
}

std::string classification_json(const ExponentPair& exps,
                                const Classification& rhs,
                                const Classification& lhs) {
  std::string out = "{";
  out += "\"r\":" + format_double(exps.r);
  out += ",\"s\":" + format_double(exps.s);
  out += ",\"rhs\":" + quoted(to_string(rhs.verdict));
  out += ",\"rhs_citation\":" + quoted(rhs.citation);
  out += ",\"rhs_detail\":" + quoted(rhs.detail);
  out += ",\"lhs\":" + quoted(to_string(lhs.verdict));
  out += ",\"lhs_citation\":" + quoted(lhs.citation);
  out += ",\"lhs_detail\":" + quoted(lhs.detail);
  out += ",\"lhs_passed_necessary\":" + string_array(lhs.passed_necessary);
  return out + "}";
}

std::string bound_check_json(const BoundCheck& check, bool lhs_ok,
                             bool rhs_ok) {
  std::string out = "{";
  out += "\"lower\":" + format_double(check.lower);
  out += ",\"gap\":" + format_double(check.gap);
  out += ",\"upper\":";
  out += check.upper_defined ? format_double(check.upper) : "null";
  out += ",\"lhs_residual\":" + format_double(check.lhs_residual);
  out += ",\"rhs_residual\":";
  out += check.upper_defined ? format_double(check.rhs_residual) : "null";
  out += ",\"upper_defined\":";
  out += check.upper_defined ? "true" : "false";
  out += ",\"lhs\":" + quoted(lhs_ok ? "satisfied" : "violated");
  out += ",\"rhs\":";
  if (!check.upper_defined)
    out += quoted("undefined");
  else
    out += quoted(rhs_ok ? "satisfied" : "violated");
  return out + "}";
}

std::string bound_check_text(const BoundCheck& check, bool lhs_ok,
                             bool rhs_ok) {
  std::string out;
  out += "lower=" + format_double(check.lower) + "\n";
  out += "gap=" + format_double(check.gap) + "\n";
  out += "upper=";
  out += check.upper_defined ? format_double(check.upper) : "undefined";
  out += "\n";
  out += "lhs_residual=" + format_double(check.lhs_residual) + "\n";
  out += "rhs_residual=";
  out += check.upper_defined ? format_double(check.rhs_residual) : "undefined";
  out += "\n";
  out += std::string("lhs: ") + (lhs_ok ? "satisfied" : "violated") + "\n";
  if (!check.upper_defined)
    out += "rhs: undefined\n";
  else
    out += std::string("rhs: ") + (rhs_ok ? "satisfied" : "violated") + "\n";
  return out;
}

std::string certificate_json(const Certificate& cert) {
  std::string out = "{";
  out += "\"side\":" + quoted(to_string(cert.side));
  out += ",\"r\":" + format_double(cert.exps.r);
  out += ",\"s\":" + format_double(cert.exps.s);
  out += ",\"values\":" + number_array(cert.sample.values());
  out += ",\"weights\":" + number_array(cert.sample.weights());
  out += ",\"residual\":" + format_double(cert.residual);
  out += ",\"provenance\":" + quoted(to_string(cert.provenance));
  return out + "}";
}

Certificate certificate_from_json(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  const std::string side_str = j.at("side").get<std::string>();
  Side side;
  if (side_str == "rhs")
    side = Side::RHS;
  else if (side_str == "lhs")
    side = Side::LHS;
  else
    throw std::runtime_error("certificate: side must be 'rhs' or 'lhs'");
  const std::string prov_str = j.at("provenance").get<std::string>();
  Provenance prov;
  if (prov_str == "grid")
    prov = Provenance::Grid;
  else if (prov_str == "refine")
    prov = Provenance::Refine;
  else if (prov_str == "limit-seed")
    prov = Provenance::LimitSeed;
  else
    throw std::runtime_error("certificate: unknown provenance");
  ExponentPair exps(j.at("r").get<double>(), j.at("s").get<double>());
  WeightedSample sample(j.at("values").get<std::vector<double>>(),
                        j.at("weights").get<std::vector<double>>());
  return Certificate{side, exps, std::move(sample),
                     j.at("residual").get<double>(), prov};
}

}  // namespace powermean
