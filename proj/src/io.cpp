#include "alphakit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace alphakit {
namespace {

using nlohmann::json;

Complex complex_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParseError("expected a number or a [re, im] pair");
}

int index_from_key(const std::string& key) {
  int k = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  if (!key.empty() && key.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("coefficient key '" + key + "' is not an integer");
  }
  return k;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

BoundaryFunction boundary_from_json(const json& j) {
  const auto& type = require(j, "type");
  if (!type.is_string()) throw ParseError("'type' must be a string");
  const std::string t = type.get<std::string>();
  try {
    std::optional<BoundaryFunction> b;
    if (t == "step") {
      const auto& arcs = require(j, "arcs");
      if (!arcs.is_array()) throw ParseError("'arcs' must be an array");
      std::vector<StepArc> out;
      for (const auto& a : arcs) {
        const auto& phi = require(a, "phi");
        const auto& theta = require(a, "theta");
        if (!phi.is_number() || !theta.is_number()) throw ParseError("arc fields must be numbers");
        out.push_back({phi.get<double>(), theta.get<double>()});
      }
      b = BoundaryFunction::step(std::move(out));
    } else if (t == "trigpoly") {
      const auto& coeffs = require(j, "coeffs");
      if (!coeffs.is_object()) throw ParseError("'coeffs' must be an object");
      std::map<int, Complex> out;
      for (const auto& [key, v] : coeffs.items()) out[index_from_key(key)] = complex_from_json(v);
      b = BoundaryFunction::trig_poly(std::move(out));
    } else if (t == "sampled") {
      const auto& values = require(j, "values");
      if (!values.is_array()) throw ParseError("'values' must be an array");
      std::vector<Complex> out;
      for (const auto& v : values) out.push_back(complex_from_json(v));
      b = BoundaryFunction::sampled(std::move(out));
    } else {
      throw ParseError("unknown boundary type '" + t + "'");
    }
    if (j.contains("admissible")) {
      if (!j["admissible"].is_boolean()) throw ParseError("'admissible' must be a boolean");
      b->set_admissible_flag(j["admissible"].get<bool>());
    }
    return std::move(*b);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::ordered_json boundary_to_json(const BoundaryFunction& b) {
  nlohmann::ordered_json j;
  if (const auto* s = b.as_step()) {
    j["type"] = "step";
    j["arcs"] = nlohmann::ordered_json::array();
    for (const auto& a : s->arcs) j["arcs"].push_back({{"phi", a.phi_start}, {"theta", a.theta}});
  } else if (const auto* p = b.as_trig_poly()) {
    j["type"] = "trigpoly";
    j["coeffs"] = nlohmann::ordered_json::object();
    for (const auto& [m, c] : p->coeffs) j["coeffs"][std::to_string(m)] = {c.real(), c.imag()};
  } else {
    j["type"] = "sampled";
    j["values"] = nlohmann::ordered_json::array();
    for (const auto& v : b.as_sampled()->values) j["values"].push_back({v.real(), v.imag()});
  }
  if (b.admissible_flag()) j["admissible"] = *b.admissible_flag();
  return j;
}

CoefficientSpectrum spectrum_from_json(const json& j, std::optional<double> fallback_alpha) {
  if (!j.is_object()) throw ParseError("spectrum must be a JSON object");
  double alpha = 0.0;
  if (j.contains("alpha")) {
    if (!j["alpha"].is_number()) throw ParseError("'alpha' must be a number");
    alpha = j["alpha"].get<double>();
  } else if (fallback_alpha) {
    alpha = *fallback_alpha;
  } else {
    throw ParseError("spectrum has no 'alpha'");
  }
  const auto& coeffs = require(j, "coeffs");
  if (!coeffs.is_object()) throw ParseError("'coeffs' must be an object");
  std::vector<std::pair<int, Complex>> entries;
  int truncation = 0;
  for (const auto& [key, v] : coeffs.items()) {
    const int k = index_from_key(key);
    entries.emplace_back(k, complex_from_json(v));
    truncation = std::max(truncation, std::abs(k));
  }
  if (j.contains("K")) {
    if (!j["K"].is_number_integer() || j["K"].get<int>() < truncation) {
      throw ParseError("'K' must be an integer covering every coefficient index");
    }
    truncation = j["K"].get<int>();
  }
  std::optional<AlphaParameter> a;
  try {
    a.emplace(alpha);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  CoefficientSpectrum s(*a, truncation);
  try {
    for (const auto& [k, c] : entries) s.set(k, c);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return s;
}

nlohmann::ordered_json spectrum_to_json(const CoefficientSpectrum& s) {
  nlohmann::ordered_json j;
  j["alpha"] = s.alpha().value();
  j["K"] = s.truncation();
  j["coeffs"] = nlohmann::ordered_json::object();
  for (int k = -s.truncation(); k <= s.truncation(); ++k) {
    j["coeffs"][std::to_string(k)] = {s[k].real(), s[k].imag()};
  }
  return j;
}

MapInput parse_map_input(const std::string& text, std::optional<double> fallback_alpha) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("type")) return boundary_from_json(j);
  return spectrum_from_json(j, fallback_alpha);
}

}  // namespace alphakit
