#pragma once

#include <json.hpp>

#include "supertypical/blocks.hpp"
#include "supertypical/central_characters.hpp"
#include "supertypical/equivalence.hpp"
#include "supertypical/mates.hpp"
#include "supertypical/weyl.hpp"

// JSON views of every report the CLI emits. Keys are inserted in a fixed
// order and containers are already sorted, so serialization is byte-stable.
namespace supertypical {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) a.push_back(c.str());
  return a;
}

// Weights as object keys: comma-joined rational strings.
inline std::string weight_key(const Weight& w) {
  std::string s;
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += w.coords[i].str();
  }
  return s;
}

inline Json to_json(const WeightFunction& f) {
  Json a = Json::array();
  for (const auto& [w, m] : f.entries())
    a.push_back(Json{{"weight", to_json(w)}, {"multiplicity", m}});
  return a;
}

inline Json to_json(const WeylElement& w) {
  Json word = Json::array();
  for (int i : w.word) word.push_back(i);
  return word;
}

inline Json to_json(const Classification& c) {
  Json v = Json::array();
  for (const auto& b : c.vanishing_odd_roots) v.push_back(to_json(b));
  return Json{{"kind", kind_name(c.kind)},
              {"vanishing_roots", v},
              {"generic", c.generic_weakly_atypical},
              {"T_value", c.T_value.str()},
              {"Q_value", c.Q_value.str()}};
}

inline Json to_json(const CentralCharacter& chi) {
  return Json{{"ambient", ambient_name(chi.ambient)},
              {"shift", to_json(chi.shift)},
              {"rep", to_json(chi.rep)}};
}

inline Json to_json(const GradedVermaFlag& f) {
  Json entries = Json::array();
  for (const auto& [key, mult] : f.entries)
    entries.push_back(Json{{"weight", to_json(key.first)},
                           {"parity", key.second},
                           {"multiplicity", mult}});
  return Json{{"ambient", ambient_name(f.ambient)}, {"entries", entries}};
}

inline Json to_json(const std::map<CentralCharacter, GradedVermaFlag>& blocks) {
  Json out = Json::object();
  for (const auto& [chi, part] : blocks) {
    Json b = to_json(part);
    b["character"] = to_json(chi);
    out[weight_key(chi.rep)] = b;
  }
  return out;
}

inline Json to_json(const std::vector<SupportLine>& report) {
  Json out = Json::array();
  for (const auto& line : report) {
    Json parities = Json::array();
    for (int p : line.parities) parities.push_back(p);
    out.push_back(Json{{"character", to_json(line.chi)},
                       {"multiplicity", line.multiplicity},
                       {"parities", parities}});
  }
  return out;
}

inline Json to_json(const MateReport& r) {
  Json gammas = Json::array();
  for (const auto& g : r.matched_gammas) gammas.push_back(to_json(g));
  Json out{{"lambda", to_json(r.lambda)},
           {"chi", to_json(r.chi)},
           {"matched_gammas", gammas},
           {"is_mate", r.is_mate},
           {"orbit_verified", r.orbit_verified}};
  if (r.graded_split)
    out["graded_split"] = Json{{"even", to_json(r.graded_split->first)},
                               {"odd", to_json(r.graded_split->second)}};
  return out;
}

inline Json to_json(const PerfectMateReport& r, bool verbose) {
  Json out{{"lambda", to_json(r.lambda)},
           {"chi", to_json(r.chi)},
           {"elements_checked", r.per_w.size()},
           {"stab_inclusion_rho0", r.incl_rho0},
           {"stab_inclusion_rho0_minus_sigma_l", r.incl_rho0_minus_sigma_l},
           {"is_perfect", r.is_perfect}};
  if (verbose) {
    Json detail = Json::array();
    for (const auto& line : r.per_w)
      detail.push_back(Json{{"word", to_json(line.w)},
                            {"x_w_size", line.xw_size},
                            {"disjoint", line.disjoint}});
    out["per_w"] = detail;
  }
  return out;
}

inline Json to_json(const RoundTripReport& r) {
  return Json{{"input", to_json(r.input)},
              {"forward", to_json(r.forward)},
              {"back", to_json(r.back)},
              {"equal", r.equal}};
}

inline Json orbit_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

}  // namespace supertypical
