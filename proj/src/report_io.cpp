#include <sstream>

#include "semicurve/io.hpp"

namespace semicurve::io {

namespace {

std::vector<int> int_list(const Json& j, const char* key) {
  if (!j.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// Quotes a CSV field when it holds a comma or a quote.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string flag(bool b) { return b ? "true" : "false"; }

Json to_json(const verify::Record& r) {
  Json j;
  j["generators"] = r.generators;
  j["genus"] = r.genus;
  j["W_S"] = r.weight_s;
  j["W_K"] = r.weight_k;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace

Json to_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.minimal_generators();
  j["gaps"] = s.gaps();
  return j;
}

NumericalSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("semigroup must be a JSON object");
  if (j.contains("generators")) {
    const auto gens = int_list(j["generators"], "generators");
    return from_generators(gens);
  }
  if (j.contains("gaps")) {
    const auto gaps = int_list(j["gaps"], "gaps");
    return from_gaps(gaps);
  }
  throw InputError("semigroup needs \"generators\" or \"gaps\"");
}

Json to_json(const WeightReport& r) {
  Json j;
  j["generators"] = r.generators;
  j["g"] = r.genus;
  j["g_K"] = r.genus_k;
  j["c"] = r.conductor;
  j["W_S"] = r.weight_s;
  j["W_K"] = r.weight_k;
  j["symmetric"] = r.symmetric;
  j["hyperelliptic"] = r.hyperelliptic;
  j["bielliptic"] = r.bielliptic;
  j["kappa"] = r.kappa;
  j["tech_hyp"] = r.technical_hypothesis ? Json(*r.technical_hypothesis) : Json(nullptr);
  return j;
}

std::string weight_csv_header() {
  return "# semicurve weight-report csv v" + std::to_string(kCsvVersion) +
         "\ngenerators,g,c,W_S,W_K,symmetric,hyperelliptic,bielliptic,kappa,tech_hyp\n";
}

std::string weight_csv_row(const WeightReport& r) {
  std::ostringstream os;
  os << field(join(r.generators, ' ')) << ',' << r.genus << ',' << r.conductor << ',' << r.weight_s << ','
     << r.weight_k << ',' << flag(r.symmetric) << ',' << flag(r.hyperelliptic) << ',' << flag(r.bielliptic)
     << ',' << join(r.kappa, ' ') << ',' << (r.technical_hypothesis ? flag(*r.technical_hypothesis) : "")
     << '\n';
  return os.str();
}

Json to_json(const verify::ScanReport& r, bool with_time) {
  Json j;
  j["statement"] = r.statement;
  j["genus_min"] = r.genus_min;
  j["genus_max"] = r.genus_max;
  if (r.kappa) j["kappa"] = *r.kappa;
  j["checked"] = r.checked;
  j["satisfied"] = r.satisfied;
  j["violated"] = r.violated;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
  j["rows"] = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["genus"] = row.genus;
    if (!row.label.empty()) jr["label"] = row.label;
    jr["checked"] = row.checked;
    jr["satisfied"] = row.satisfied;
    jr["violated"] = row.violated;
    if (row.observed) jr["observed"] = *row.observed;
    if (row.expected) jr["expected"] = *row.expected;
    if (!row.achievers.empty()) {
      jr["achievers"] = Json::array();
      for (const auto& a : row.achievers) jr["achievers"].push_back(to_json(a));
    }
    if (!row.counts.empty()) {
      Json c = Json::object();
      for (const auto& [k, v] : row.counts) c[k] = v;
      jr["counts"] = std::move(c);
    }
    jr["status"] = verify::to_string(row.status);
    j["rows"].push_back(std::move(jr));
  }
  if (!r.facts.empty()) {
    Json f = Json::object();
    for (const auto& [k, v] : r.facts) f[k] = v;
    j["facts"] = std::move(f);
  }
  if (with_time) j["seconds"] = r.seconds;
  return j;
}

std::string to_csv(const verify::ScanReport& r) {
  std::ostringstream os;
  os << "# semicurve scan csv v" << kCsvVersion << " statement=" << r.statement;
  if (r.kappa) os << " kappa=" << *r.kappa;
  os << " checked=" << r.checked << " violated=" << r.violated << '\n';
  os << "genus,label,checked,satisfied,violated,observed,expected,status,achievers,counts\n";
  for (const auto& row : r.rows) {
    std::string achievers;
    for (const auto& a : row.achievers) {
      if (!achievers.empty()) achievers += ' ';
      achievers += "<" + join(a.generators, ',') + ">";
    }
    std::string counts;
    for (const auto& [k, v] : row.counts) {
      if (!counts.empty()) counts += ';';
      counts += k + "=" + std::to_string(v);
    }
    os << row.genus << ',' << row.label << ',' << row.checked << ',' << row.satisfied << ',' << row.violated
       << ',' << (row.observed ? std::to_string(*row.observed) : "") << ','
       << (row.expected ? std::to_string(*row.expected) : "") << ',' << verify::to_string(row.status) << ','
       << field(achievers) << ',' << field(counts) << '\n';
  }
  return os.str();
}

}  // namespace semicurve::io
