#include <cctype>
#include <fstream>
#include <sstream>

#include "semicurve/io.hpp"

namespace semicurve::io {

namespace {

Poly poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_array()) throw InputError("each entry of \"f\" must be a coefficient array or a polynomial string");
  std::vector<std::string> coeffs;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      coeffs.push_back(x.dump());
    } else if (x.is_string()) {
      coeffs.push_back(x.get<std::string>());
    } else if (x.is_number_float()) {
      throw InputError("floating-point coefficient " + x.dump() + "; write it as \"p/q\"");
    } else {
      throw InputError("bad coefficient " + x.dump());
    }
  }
  return poly_from_strings(coeffs);
}

// TOML strings use '...' or "..."; comments run from # to end of line. We
// rewrite the value of `f` into JSON and hand it to the JSON reader.
std::string toml_value_to_json(std::string_view v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const char ch = v[i];
    if (ch == '"' || ch == '\'') {
      const std::size_t end = v.find(ch, i + 1);
      if (end == std::string_view::npos) throw InputError("unterminated string in TOML");
      out += '"';
      out += v.substr(i + 1, end - i - 1);
      out += '"';
      i = end;
    } else if (ch == '#') {
      while (i < v.size() && v[i] != '\n') ++i;
    } else {
      out += ch;
    }
  }
  // trailing commas are legal in TOML arrays
  std::string cleaned;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == ',') {
      std::size_t k = i + 1;
      while (k < out.size() && std::isspace(static_cast<unsigned char>(out[k]))) ++k;
      if (k < out.size() && out[k] == ']') continue;
    }
    cleaned += out[i];
  }
  return cleaned;
}

}  // namespace

CurveParametrization curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("f")) throw InputError("curve file needs a key \"f\"");
  const Json& f = j["f"];
  if (!f.is_array()) throw InputError("\"f\" must be an array");
  std::vector<Poly> coords;
  for (const auto& e : f) coords.push_back(poly_from_json(e));
  return CurveParametrization(std::move(coords));
}

CurveParametrization curve_from_toml(std::string_view text) {
  // Find `f =` at the start of a line, outside comments.
  std::size_t pos = 0;
  std::optional<std::size_t> value;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] == 'f') {
      const std::size_t eq = line.find_first_not_of(" \t", first + 1);
      if (eq != std::string_view::npos && line[eq] == '=') {
        value = pos + eq + 1;
        break;
      }
    }
    pos = end + 1;
  }
  if (!value) throw InputError("curve file needs a key \"f\"");
  // The array may span lines; take text up to the bracket that closes it.
  std::string_view rest = text.substr(*value);
  int depth = 0;
  bool quoted = false;
  char quote = 0;
  std::size_t stop = std::string_view::npos;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const char ch = rest[i];
    if (quoted) {
      if (ch == quote) quoted = false;
    } else if (ch == '"' || ch == '\'') {
      quoted = true;
      quote = ch;
    } else if (ch == '#') {
      while (i < rest.size() && rest[i] != '\n') ++i;
    } else if (ch == '[') {
      ++depth;
    } else if (ch == ']') {
      if (--depth == 0) {
        stop = i + 1;
        break;
      }
    }
  }
  if (stop == std::string_view::npos) throw InputError("unbalanced brackets in TOML value of f");
  Json j;
  try {
    j["f"] = Json::parse(toml_value_to_json(rest.substr(0, stop)));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed TOML array: ") + e.what());
  }
  return curve_from_json(j);
}

CurveParametrization read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.extension() == ".toml") return curve_from_toml(text);
  try {
    return curve_from_json(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const Poly& p) { return p.to_string(); }

Json to_json(const Pencil& p) {
  Json j;
  j["f"] = to_json(p.f);
  j["h"] = to_json(p.h);
  j["valuation"] = p.valuation;
  j["extra_values"] = p.extra_values;
  j["degree"] = p.degree;
  j["base_point"] = to_string(p.base_point);
  return j;
}

Json to_json(const GonalityBounds& b) {
  Json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["exact"] = b.exact();
  j["witness"] = b.witness ? to_json(*b.witness) : Json(nullptr);
  j["witness_source"] = b.witness_source;
  j["candidates_tried"] = b.candidates_tried;
  return j;
}

Json to_json(const HyperellipticAnswer& a) {
  Json j;
  j["verdict"] = to_string(a.verdict);
  j["witness_h"] = a.witness ? to_json(*a.witness) : Json(nullptr);
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

Json to_json(const ScrollWitness& w) {
  Json j;
  j["codimension"] = w.codimension;
  j["u_basis"] = Json::array();
  for (const auto& u : w.u_basis) j["u_basis"].push_back(to_json(u));
  j["minors_vanish"] = w.minors_vanish;
  j["linear"] = w.layout.has_value();
  if (w.layout) {
    Json rows = Json::array();
    for (const auto& row : w.layout->rows) {
      Json r = Json::array();
      for (const auto& form : row) {
        Json l = Json::array();
        for (const auto& q : form) l.push_back(to_string(q));
        r.push_back(std::move(l));
      }
      rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

Json to_json(const LinearSeriesReport& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["degree"] = r.degree;
  j["degree_at_p"] = r.degree_at_p;
  j["base_point_free"] = r.base_point_free;
  j["map_coords"] = Json::array();
  for (const auto& p : r.map_coords) j["map_coords"].push_back(to_json(p));
  j["map_degree"] = r.map.degree;
  j["map_samples_agree"] = r.map.samples_agree;
  return j;
}

Json analyze(const Curve& c, const AnalysisOptions& opt) {
  const NumericalSemigroup& s = c.local.semigroup();
  Json j;
  j["curve"] = Json::array();
  for (const auto& f : c.param.coords()) j["curve"].push_back(to_json(f));
  j["degree"] = c.param.degree();
  j["truncation_order"] = c.local.order();
  j["semigroup"] = to_json(s);
  j["genus"] = s.genus();
  j["conductor"] = s.conductor();
  j["multiplicity"] = s.multiplicity();
  j["weights"] = to_json(weight_report(s));
  j["k_set_gaps"] = k_set(s).gaps();
  j["pole_orders"] = differential_pole_orders(s);

  Json cls;
  cls["symmetric"] = is_symmetric(s);
  cls["hyperelliptic_singularity"] = is_hyperelliptic(s);
  cls["bielliptic_singularity"] = is_bielliptic(s);
  cls["kappa"] = detect_kappa(s);
  cls["hyperelliptic_curve"] = to_json(is_hyperelliptic_curve(c));
  if (is_bielliptic(s) && c.param.coords().size() >= 3) {
    try {
      const LinearSeriesReport g83 = g83_default(c, opt.seed);
      cls["g83"] = to_json(g83);
      // a bielliptic curve maps 2:1 by its g^3_8
      cls["bielliptic_curve"] = g83.degree == 8 && g83.map.degree == 2;
    } catch (const InputError& e) {
      cls["g83"] = Json{{"error", e.what()}};
    }
  }
  j["classification"] = std::move(cls);

  GonalityOptions gopt;
  gopt.seed = opt.seed;
  j["gonality"] = to_json(gonality_bounds(c, gopt));
  if (auto nr = non_removable_pencil(c)) {
    Json p = to_json(nr->pencil);
    p["r"] = nr->r;
    p["s"] = nr->s;
    p["formula_degree"] = nr->formula_degree;
    j["non_removable_pencil"] = std::move(p);
  }
  try {
    j["scroll"] = to_json(scroll_codimension(c));
  } catch (const InputError& e) {
    j["scroll"] = Json{{"error", e.what()}};
  }
  return j;
}

}  // namespace semicurve::io
