#include "cli/config.hpp"

#include <fstream>

namespace cli {

using nlohmann::json;
using paramkit::Rational;
using ringkit::Field;
using ringkit::Scalar;

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ConfigError("expected a rational as string or integer");
  std::string s = v.get<std::string>();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(ringkit::BigInt(s));
    return Rational(ringkit::BigInt(s.substr(0, slash)), ringkit::BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ConfigError("malformed rational: " + s);
  }
}

namespace {

Field parse_field(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "Q" || s == "rational") return Field::rationals();
    if (s.size() > 1 && s[0] == 'F') return Field::prime(std::stol(s.substr(1)));
    throw ConfigError("unknown field: " + s);
  }
  if (v.is_object() && v.contains("p")) return Field::prime(v["p"].get<long>());
  if (v.is_number_integer()) {
    long p = v.get<long>();
    return p == 0 ? Field::rationals() : Field::prime(p);
  }
  throw ConfigError("malformed field spec");
}

Scalar parse_scalar(const Field& f, const json& v) {
  if (v.is_number_integer()) return Scalar(f, v.get<long>());
  if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
  throw ConfigError("expected a scalar as string or integer");
}

}  // namespace

paramkit::Loading loading_from_json(const json& j, const Field& f) {
  paramkit::Loading l;
  for (const auto& p : j.at("positions")) l.positions.push_back(parse_rational(p));
  if (j.contains("labels"))
    for (const auto& s : j.at("labels")) l.labels.push_back(parse_scalar(f, s));
  l.validate();
  return l;
}

repkit::EngineCfg engine_from_json(const json& j) {
  repkit::EngineCfg cfg;
  try {
    Field f = parse_field(j.at("field"));
    Scalar q = parse_scalar(f, j.at("q"));
    std::vector<Scalar> U;
    for (const auto& u : j.at("U")) U.push_back(parse_scalar(f, u));
    cfg.graph = paramkit::make_param_graph(f, q, U);

    if (j.contains("b")) {
      const auto& b = j["b"];
      if (b.is_string()) {
        std::string s = b.get<std::string>();
        if (s == "exp")
          cfg.series.kind = paramkit::SeriesChoice::Kind::Exp;
        else if (s == "one_plus")
          cfg.series.kind = paramkit::SeriesChoice::Kind::OnePlus;
        else
          throw ConfigError("unknown b: " + s);
      } else if (b.is_object() && b.contains("coeffs")) {
        cfg.series.kind = paramkit::SeriesChoice::Kind::Custom;
        for (const auto& c : b["coeffs"]) cfg.series.custom.push_back(parse_scalar(f, c));
      } else {
        throw ConfigError("malformed b");
      }
    }
    if (j.contains("d")) {
      std::string d = j["d"].get<std::string>();
      if (d == "one")
        cfg.series.d = paramkit::DChoice::One;
      else if (d == "exp")
        cfg.series.d = paramkit::DChoice::Exp;
      else
        throw ConfigError("unknown d: " + d);
    }
    cfg.series.validate(f);

    if (j.contains("kappa")) cfg.kappa.kappa = parse_rational(j["kappa"]);
    if (cfg.kappa.kappa == 0) throw ConfigError("kappa must be nonzero");

    if (j.contains("reds")) {
      int zi = 1;
      for (const auto& r : j["reds"]) {
        paramkit::RedEntry e;
        e.theta = parse_rational(r.at("theta"));
        e.Q = parse_scalar(f, r.at("Q"));
        e.z_index = r.contains("z") ? r["z"].get<int>() : zi;
        ++zi;
        if (cfg.graph.index_of(e.Q) < 0) throw ConfigError("red label outside the spectrum");
        cfg.reds.entries.push_back(e);
      }
      std::sort(cfg.reds.entries.begin(), cfg.reds.entries.end(),
                [](const paramkit::RedEntry& a, const paramkit::RedEntry& b) {
                  return a.theta < b.theta;
                });
      cfg.reds.validate();
    }

    cfg.ctx.n = j.value("n", 2);
    cfg.ctx.ell = int(cfg.reds.entries.size());
    cfg.ctx.cutoff = j.value("order", 4);
    if (cfg.ctx.n < 1 || cfg.ctx.cutoff < 0) throw ConfigError("invalid n or order");
    if (cfg.ctx.nvars() > 16 || cfg.ctx.cutoff > 15)
      throw ConfigError("n/order outside supported packing limits");

    cfg.sigma = j.value("sigma", 1);
    if (cfg.sigma != 1 && cfg.sigma != -1) throw ConfigError("sigma must be +-1");
    cfg.deform = j.value("deform", true);
    cfg.reverse_edges = j.value("reverse_edges", true);
    if (j.contains("base")) cfg.base = loading_from_json(j["base"], f);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return cfg;
}

repkit::EngineCfg load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return engine_from_json(j);
}

diagramkit::Diagram diagram_from_json(const json& j, const repkit::EngineCfg& cfg) {
  diagramkit::Diagram d;
  auto fam = diagramkit::family_from_name(j.at("family").get<std::string>());
  if (!fam) throw ConfigError("unknown family in diagram");
  d.family = *fam;
  d.bottom = loading_from_json(j.at("bottom"), cfg.graph.field);
  d.top = loading_from_json(j.at("top"), cfg.graph.field);
  for (const auto& ev : j.at("events")) {
    std::string kind = ev.at("kind").get<std::string>();
    if (kind == "SS")
      d.events.push_back(diagramkit::Event::cross(ev.at("i").get<int>()));
    else if (kind == "SG")
      d.events.push_back(diagramkit::Event::ghost(ev.at("i").get<int>(), ev.at("j").get<int>(),
                                                  ev.value("dir", 1)));
    else if (kind == "SR")
      d.events.push_back(diagramkit::Event::red(ev.at("i").get<int>(), ev.at("j").get<int>(),
                                                ev.value("dir", 1)));
    else if (kind == "DOT")
      d.events.push_back(diagramkit::Event::dot(ev.at("i").get<int>()));
    else if (kind == "SQ")
      d.events.push_back(diagramkit::Event::square(ev.at("i").get<int>(), ev.value("e", 1)));
    else
      throw ConfigError("unknown event kind: " + kind);
  }
  try {
    d.validate(cfg.reds);
  } catch (const diagramkit::BadDiagram& e) {
    throw ConfigError(std::string("invalid diagram: ") + e.what());
  }
  return d;
}

}  // namespace cli
