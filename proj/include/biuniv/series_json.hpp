#pragma once

#include <json.hpp>

#include "biuniv/series.hpp"

namespace biuniv {

// Wire format: {"order": N, "coeffs": [[re, im], ...]}.
// Double mode stores numbers; exact mode stores rationals as "p/q" strings.

inline nlohmann::json to_json(const DSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = 0; n <= s.order(); ++n)
    coeffs.push_back({s[n].real(), s[n].imag()});
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline nlohmann::json to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int n = 0; n <= s.order(); ++n)
    coeffs.push_back({rat_to_string(s[n].re), rat_to_string(s[n].im)});
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline DSeries dseries_from_json(const nlohmann::json& j) {
  const auto& cj = j.at("coeffs");
  std::vector<std::complex<double>> c;
  c.reserve(cj.size());
  for (const auto& e : cj) {
    auto get = [](const nlohmann::json& v) -> double {
      if (v.is_string()) return rat_to_double(rat_from_string(v.get<std::string>()));
      return v.get<double>();
    };
    c.emplace_back(get(e.at(0)), get(e.at(1)));
  }
  if (c.empty()) throw std::invalid_argument("series JSON: empty coeffs");
  int order = j.value("order", static_cast<int>(c.size()) - 1);
  if (order != static_cast<int>(c.size()) - 1)
    throw std::invalid_argument("series JSON: order does not match coeffs length");
  return DSeries(std::move(c));
}

inline QSeries qseries_from_json(const nlohmann::json& j) {
  const auto& cj = j.at("coeffs");
  std::vector<RatC> c;
  c.reserve(cj.size());
  for (const auto& e : cj) {
    auto get = [](const nlohmann::json& v) -> Rat {
      if (v.is_string()) return rat_from_string(v.get<std::string>());
      return rat_from_double(v.get<double>());
    };
    c.emplace_back(get(e.at(0)), get(e.at(1)));
  }
  if (c.empty()) throw std::invalid_argument("series JSON: empty coeffs");
  int order = j.value("order", static_cast<int>(c.size()) - 1);
  if (order != static_cast<int>(c.size()) - 1)
    throw std::invalid_argument("series JSON: order does not match coeffs length");
  return QSeries(std::move(c));
}

}  // namespace biuniv
