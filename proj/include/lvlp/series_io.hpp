#pragma once

#include <string>

#include <json.hpp>

#include "lvlp/engine.hpp"
#include "lvlp/expression.hpp"

namespace lvlp {

/// {"alpha", "gauge", "orders": [{"n", "omega", "xi", "eta", "gauge_constants"}]}
/// where xi/eta list [harmonic, "sin"|"cos", coefficient] triples and every
/// coefficient is an exact string in the element format.
template <class C>
nlohmann::json series_to_json(const PerturbationSeries<C>& series) {
  using nlohmann::json;
  auto terms = [](const TrigPoly<C>& p) {
    json out = json::array();
    for (const auto& [j, c] : p.cosines()) out.push_back(json::array({j, "cos", to_string(c)}));
    for (const auto& [j, c] : p.sines()) out.push_back(json::array({j, "sin", to_string(c)}));
    return out;
  };
  json orders = json::array();
  for (const auto& o : series.orders) {
    orders.push_back({{"n", o.n},
                      {"omega", to_string(o.omega)},
                      {"xi", terms(o.xi)},
                      {"eta", terms(o.eta)},
                      {"gauge_constants", json::array({to_string(o.gauge_constants.first),
                                                       to_string(o.gauge_constants.second)})}});
  }
  return {{"alpha", series.alpha_label}, {"gauge", to_string(series.gauge)}, {"orders", orders}};
}

/// Inverse of series_to_json; `one` supplies the ring (and its alpha).
/// Throws AlgebraError on malformed documents.
template <class C>
PerturbationSeries<C> series_from_json(const nlohmann::json& doc, const C& one) {
  try {
    PerturbationSeries<C> s;
    s.alpha_label = doc.at("alpha").get<std::string>();
    s.gauge = parse_gauge(doc.at("gauge").get<std::string>());
    s.one = one;
    const phase_ring_t<C> phase_one = lift_to_phase(one);
    auto terms = [&](const nlohmann::json& arr) {
      TrigPoly<C> p;
      for (const auto& t : arr) {
        const int j = t.at(0).get<int>();
        const std::string kind = t.at(1).get<std::string>();
        C c = parse_element(t.at(2).get<std::string>(), one);
        if (kind == "sin") {
          p.add_sin(j, c);
        } else if (kind == "cos") {
          p.add_cos(j, c);
        } else {
          throw AlgebraError("unknown term kind '" + kind + "'");
        }
      }
      return p;
    };
    for (const auto& o : doc.at("orders")) {
      OrderSolution<C> os;
      os.n = o.at("n").get<std::size_t>();
      if (os.n != s.orders.size()) throw AlgebraError("orders must be listed consecutively from 0");
      os.omega = parse_element(o.at("omega").get<std::string>(), one);
      os.xi = terms(o.at("xi"));
      os.eta = terms(o.at("eta"));
      const auto& gc = o.at("gauge_constants");
      os.gauge_constants = {parse_element(gc.at(0).get<std::string>(), phase_one),
                            parse_element(gc.at(1).get<std::string>(), phase_one)};
      s.orders.push_back(std::move(os));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("malformed series document: ") + e.what());
  }
}

}  // namespace lvlp
