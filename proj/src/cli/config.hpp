#pragma once

#include <json.hpp>

#include <string>

#include "repkit/engine.hpp"

namespace cli {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Assembles an engine configuration from the JSON payload:
// {"field": "Q"|"F7"|{"p":7}, "q": "2", "U": ["1","2","4"], "b": "exp"|
//  "one_plus"|{"coeffs":[...]}, "d": "one"|"exp", "kappa": "-1/2",
//  "reds": [{"theta":"0","Q":"1"}], "n": 3, "order": 5, "sigma": 1}
repkit::EngineCfg engine_from_json(const nlohmann::json& j);

repkit::EngineCfg load_config(const std::string& path);

ringkit::Rational parse_rational(const nlohmann::json& v);

// Diagram JSON: {"family": "...", "bottom": {...}, "top": {...},
//  "events": [{"kind":"SS","i":1}, {"kind":"SQ","i":2,"e":-1}, ...]}
diagramkit::Diagram diagram_from_json(const nlohmann::json& j, const repkit::EngineCfg& cfg);

paramkit::Loading loading_from_json(const nlohmann::json& j, const ringkit::Field& f);

}  // namespace cli
