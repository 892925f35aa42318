#include "hqmap/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hqmap {

namespace {

using nlohmann::ordered_json;

Cplx parse_pair(const ordered_json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DocumentError("field '" + field + "' must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CoefficientList parse_coefficients(const ordered_json& doc, const std::string& field) {
  CoefficientList coeffs;
  if (!doc.contains(field)) return coeffs;
  const ordered_json& arr = doc.at(field);
  if (!arr.is_array()) {
    throw DocumentError("field '" + field + "' must be an array of [n, re, im]");
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const ordered_json& t = arr[i];
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number() || !t[2].is_number()) {
      throw DocumentError("field '" + field + "[" + std::to_string(i) +
                          "]' must be [n, re, im] with integer n");
    }
    coeffs.push_back({t[0].get<int>(), {t[1].get<double>(), t[2].get<double>()}});
  }
  return coeffs;
}

ordered_json pair_json(Cplx v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json coefficients_json(const CoefficientList& coeffs) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : coeffs) {
    arr.push_back(ordered_json::array({c.n, c.value.real(), c.value.imag()}));
  }
  return arr;
}

}  // namespace

MapDocument parse_document(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw DocumentError("field 'kind' must be \"interior\" or \"exterior\"");
  }
  const std::string kind = doc.at("kind").get<std::string>();

  MapDocument out{InteriorMap{}, std::nullopt, std::nullopt};
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw DocumentError("field 'label' must be a string");
    out.label = doc.at("label").get<std::string>();
  }
  if (doc.contains("order")) {
    if (!doc.at("order").is_number()) throw DocumentError("field 'order' must be a number");
    const double order = doc.at("order").get<double>();
    if (!(order > 0.0 && order < 1.0)) {
      throw DocumentError("field 'order' must lie in (0, 1)");
    }
    out.order = order;
  }

  CoefficientList a = parse_coefficients(doc, "a");
  CoefficientList b = parse_coefficients(doc, "b");
  try {
    if (kind == "interior") {
      out.map = InteriorMap(std::move(a), std::move(b));
    } else if (kind == "exterior") {
      if (!doc.contains("alpha")) {
        throw DocumentError("exterior document requires field 'alpha'");
      }
      const Cplx alpha = parse_pair(doc.at("alpha"), "alpha");
      const Cplx beta =
          doc.contains("beta") ? parse_pair(doc.at("beta"), "beta") : Cplx(0.0);
      const Cplx log_coeff = doc.contains("A") ? parse_pair(doc.at("A"), "A") : Cplx(0.0);
      out.map = ExteriorMap(alpha, beta, std::move(a), std::move(b), log_coeff);
    } else {
      throw DocumentError("field 'kind' must be \"interior\" or \"exterior\"");
    }
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
  return out;
}

MapDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

std::string serialize_document(const MapDocument& doc) {
  ordered_json j;
  j["kind"] = doc.is_interior() ? "interior" : "exterior";
  if (doc.label) j["label"] = *doc.label;
  if (doc.order) j["order"] = *doc.order;
  if (doc.is_interior()) {
    const InteriorMap& f = doc.interior();
    j["a"] = coefficients_json(f.a());
    j["b"] = coefficients_json(f.b());
  } else {
    const ExteriorMap& f = doc.exterior();
    j["alpha"] = pair_json(f.alpha());
    j["beta"] = pair_json(f.beta());
    j["A"] = pair_json(f.log_coeff());
    j["a"] = coefficients_json(f.a());
    j["b"] = coefficients_json(f.b());
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace hqmap
