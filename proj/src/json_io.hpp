#pragma once

// Internal JSON helpers shared by the serialization code paths.

#include <json.hpp>

#include "lacsu11/errors.hpp"
#include "lacsu11/trig_poly.hpp"

namespace lacsu11::detail {

inline nlohmann::json poly_to_json_obj(const TrigPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({t.freq, t.coeff.real(), t.coeff.imag()});
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

inline TrigPoly poly_from_json_obj(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ValidationError("trig poly JSON: expected {\"terms\": [...]}");
  }
  std::vector<TrigPoly::Term> terms;
  for (const auto& e : j["terms"]) {
    if (!e.is_array() || e.size() != 3) {
      throw ValidationError("trig poly JSON: term must be [n, re, im]");
    }
    terms.push_back({e[0].get<std::int64_t>(),
                     Complex{e[1].get<double>(), e[2].get<double>()}});
  }
  return TrigPoly::from_terms(std::move(terms));
}

}  // namespace lacsu11::detail
