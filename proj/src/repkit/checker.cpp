#include "repkit/checker.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace repkit {

using diagramkit::hecke_side;
using diagramkit::RelationInstance;
using nlohmann::json;

std::string RelationReport::json() const {
  ::nlohmann::json j{{"id", id},
                     {"context", context},
                     {"status", pass ? "PASS" : "FAIL"},
                     {"certifiedDegree", certified_degree},
                     {"probeCount", probe_count}};
  if (!pass) j["counterexample"] = counterexample;
  if (degree) j["degree"] = *degree;
  j["homogeneous"] = homogeneous;
  return j.dump();
}

bool SuiteReport::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const RelationReport& r) { return r.pass; });
}

int SuiteReport::fail_count() const {
  int c = 0;
  for (const auto& r : records)
    if (!r.pass) ++c;
  return c;
}

std::string SuiteReport::summary_json() const {
  json j{{"summary", true},
         {"relations", records.size()},
         {"failures", fail_count()},
         {"status", all_pass() ? "PASS" : "FAIL"}};
  return j.dump();
}

namespace {

const paramkit::Loading* instance_bottom(const RelationInstance& inst) {
  if (!inst.lhs.terms.empty()) return &inst.lhs.terms.front().second.bottom;
  if (!inst.rhs.terms.empty()) return &inst.rhs.terms.front().second.bottom;
  return nullptr;
}

int vec_cert(const Engine::XVec& v, int cutoff) {
  int c = TruncSeries::EXACT;
  for (const auto& [l, p] : v) c = std::min(c, p.cert());
  return std::min(c, cutoff);
}

int vec_cert(const Engine::YVec& v, int cutoff) {
  int c = TruncSeries::EXACT;
  for (const auto& [l, p] : v) c = std::min(c, p.cert());
  return std::min(c, cutoff);
}

// true when every component of a - b vanishes to the given degree
template <typename Vec, typename Zero>
bool vec_equal(const Vec& a, const Vec& b, int deg, const Zero& zero) {
  auto check = [&](const Vec& x, const Vec& y) {
    for (const auto& [l, val] : x) {
      using V = std::decay_t<decltype(val)>;
      auto it = y.find(l);
      if (it == y.end()) {
        if (!V::equal_to_degree(val, zero, deg)) return false;
      } else if (!V::equal_to_degree(val, it->second, deg)) {
        return false;
      }
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

}  // namespace

RelationReport check_relation(const Engine& eng, const RelationInstance& inst,
                              const SuiteOptions& opt) {
  RelationReport rep;
  rep.id = inst.id;
  rep.context = inst.context;
  rep.certified_degree = eng.ctx().cutoff;
  const auto* bottom = instance_bottom(inst);
  if (!bottom) {
    rep.pass = true;
    return rep;
  }

  if (!hecke_side(eng.cfg().family)) {
    try {
      auto dc = eng.dcfg();
      std::optional<int> dl, dr;
      if (!inst.lhs.terms.empty()) dl = diagramkit::grading(dc, inst.lhs);
      if (!inst.rhs.terms.empty()) dr = diagramkit::grading(dc, inst.rhs);
      rep.degree = dl ? dl : dr;
      rep.homogeneous = !dl || !dr || *dl == *dr;
    } catch (const diagramkit::NotHomogeneous&) {
      rep.homogeneous = false;
    }
  }

  rep.pass = true;
  if (hecke_side(eng.cfg().family)) {
    XPoly zero(eng.ctx(), eng.field());
    auto probes = eng.x_probes(opt.probe_box);
    rep.probe_count = int(probes.size());
    for (const auto& p : probes) {
      Engine::XVec v{{*bottom, p}};
      auto L = eng.apply(inst.lhs, v);
      auto R = eng.apply(inst.rhs, v);
      int cert = std::min(vec_cert(L, eng.ctx().cutoff), vec_cert(R, eng.ctx().cutoff));
      rep.certified_degree = std::min(rep.certified_degree, cert);
      if (!vec_equal(L, R, cert, zero)) {
        rep.pass = false;
        rep.counterexample = "probe " + p.str();
        break;
      }
    }
  } else {
    TruncSeries zero(eng.ctx(), eng.field());
    int deg = opt.probe_degree >= 0 ? opt.probe_degree : std::max(0, eng.ctx().cutoff - 2);
    auto probes = eng.y_probes(deg);
    rep.probe_count = int(probes.size());
    for (const auto& p : probes) {
      Engine::YVec v{{*bottom, p}};
      auto L = eng.apply(inst.lhs, v);
      auto R = eng.apply(inst.rhs, v);
      int cert = std::min(vec_cert(L, eng.ctx().cutoff), vec_cert(R, eng.ctx().cutoff));
      rep.certified_degree = std::min(rep.certified_degree, cert);
      if (!vec_equal(L, R, cert, zero)) {
        rep.pass = false;
        rep.counterexample = "probe " + p.str();
        break;
      }
    }
  }
  return rep;
}

SuiteReport run_suite(const Engine& eng, const SuiteOptions& opt) {
  auto instances = diagramkit::relation_registry(eng.registry_cfg(opt.mutation),
                                                 eng.cfg().family);
  SuiteReport out;
  out.records.resize(instances.size());
  int workers = std::max(1, opt.workers);
  if (workers == 1) {
    for (size_t i = 0; i < instances.size(); ++i)
      out.records[i] = check_relation(eng, instances[i], opt);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= instances.size()) break;
        out.records[i] = check_relation(eng, instances[i], opt);
      }
    });
  for (auto& t : pool) t.join();
  return out;
}

namespace {

RelationReport op_check(const std::string& id, const std::string& context,
                        const std::vector<XPoly>& probes,
                        const std::function<XPoly(const XPoly&)>& lhs,
                        const std::function<XPoly(const XPoly&)>& rhs, int cutoff) {
  RelationReport rep;
  rep.id = id;
  rep.context = context;
  rep.probe_count = int(probes.size());
  rep.certified_degree = cutoff;
  rep.pass = true;
  for (const auto& p : probes) {
    XPoly L = lhs(p);
    XPoly R = rhs(p);
    int cert = std::min({L.cert(), R.cert(), cutoff});
    rep.certified_degree = std::min(rep.certified_degree, cert);
    if (!XPoly::equal_to_degree(L, R, cert)) {
      rep.pass = false;
      rep.counterexample = "probe " + p.str();
      break;
    }
  }
  return rep;
}

}  // namespace

SuiteReport check_dictionary_type_o(const EngineCfg& base_cfg, const SuiteOptions& opt) {
  SuiteReport out;
  EngineCfg ocfg = base_cfg;
  ocfg.family = Family::HeckeOPlus;
  Engine eng(ocfg);
  auto probes = eng.x_probes(opt.probe_box);
  const int n = eng.ctx().n;
  TruncSeries one = TruncSeries::constant(eng.ctx(), Scalar(eng.field(), 1));
  TruncSeries qq = eng.qq();

  for (int sign : {-1, +1}) {
    std::string rep = sign < 0 ? "rep=signed" : "rep=unsigned";
    auto T = [&](int r, const XPoly& F) { return eng.hecke_T(r, sign, F); };
    for (int r = 1; r < n; ++r) {
      auto c = [&](const XPoly& F) { return T(r, F) + F; };
      out.records.push_back(op_check(
          "dict-quadratic-Tplus1", rep + " r=" + std::to_string(r), probes,
          [&](const XPoly& F) { return c(c(F)); },
          [&](const XPoly& F) { return c(F).scaled(one + qq); }, eng.ctx().cutoff));
      auto cq = [&](const XPoly& F) { return T(r, F) - F.scaled(qq); };
      out.records.push_back(op_check(
          "dict-quadratic-Tminusq", rep + " r=" + std::to_string(r), probes,
          [&](const XPoly& F) { return cq(cq(F)); },
          [&](const XPoly& F) { return cq(F).scaled(-(one + qq)); }, eng.ctx().cutoff));
    }
    for (int r = 1; r + 1 < n; ++r) {
      auto braid = [&](auto&& cr, auto&& cs, const XPoly& F) {
        return cr(cs(cr(F))) - cs(cr(cs(F)));
      };
      auto c1 = [&](const XPoly& F) { return T(r, F) + F; };
      auto c2 = [&](const XPoly& F) { return T(r + 1, F) + F; };
      out.records.push_back(op_check(
          "dict-braid-Tplus1", rep + " r=" + std::to_string(r), probes,
          [&](const XPoly& F) { return braid(c1, c2, F); },
          [&](const XPoly& F) { return (T(r, F) - T(r + 1, F)).scaled(qq); },
          eng.ctx().cutoff));
      auto d1 = [&](const XPoly& F) { return T(r, F) - F.scaled(qq); };
      auto d2 = [&](const XPoly& F) { return T(r + 1, F) - F.scaled(qq); };
      out.records.push_back(op_check(
          "dict-braid-Tminusq", rep + " r=" + std::to_string(r), probes,
          [&](const XPoly& F) { return braid(d1, d2, F); },
          [&](const XPoly& F) { return (T(r, F) - T(r + 1, F)).scaled(qq); },
          eng.ctx().cutoff));
    }
  }

  // WAHA composite crossing vs the Hecke dictionary, both kappa signs
  for (int ks : {-1, +1}) {
    EngineCfg wcfg = base_cfg;
    wcfg.family = Family::Waha;
    wcfg.kappa.kappa = paramkit::Rational(ks, 2);
    wcfg.base = {};
    Engine weng(wcfg);
    auto dc = weng.dcfg();
    std::string kctx = ks < 0 ? "kappa<0" : "kappa>0";
    for (int r = 1; r < n; ++r) {
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = i + 1;
      std::swap(w[r - 1], w[r]);
      diagramkit::Diagram comp = diagramkit::d_w(dc, w, weng.cfg().base);
      auto composite = [&](const XPoly& F) {
        Engine::XVec v{{weng.cfg().base, F}};
        auto res = weng.apply(comp, v);
        auto it = res.find(comp.top);
        return it == res.end() ? XPoly(weng.ctx(), weng.field()) : it->second;
      };
      auto dict = [&](const XPoly& F) {
        return ks < 0 ? weng.hecke_T(r, -1, F) + F : weng.hecke_T(r, +1, F) - F.scaled(qq);
      };
      out.records.push_back(op_check("dict-waha-composite",
                                     kctx + " r=" + std::to_string(r), probes, composite, dict,
                                     weng.ctx().cutoff));
      TruncSeries quad = ks < 0 ? one + qq : -(one + qq);
      out.records.push_back(op_check(
          ks < 0 ? "dict-waha-Hecke-2" : "dict-waha-qHecke-2", kctx + " r=" + std::to_string(r),
          probes, [&](const XPoly& F) { return composite(composite(F)); },
          [&](const XPoly& F) { return composite(F).scaled(quad); }, weng.ctx().cutoff));
    }
  }
  return out;
}

int basis_rank(const Engine& eng, const std::vector<diagramkit::BasisDiagram>& basis,
               const std::vector<XPoly>& probes) {
  // flatten each diagram's probe evaluations into one exact row
  std::map<std::string, int> columns;
  std::vector<std::map<int, Scalar>> rows;
  for (const auto& bd : basis) {
    std::map<int, Scalar> row;
    for (size_t pi = 0; pi < probes.size(); ++pi) {
      Engine::XVec v{{bd.diagram.bottom, probes[pi]}};
      auto res = eng.apply(bd.diagram, v);
      for (const auto& [load, poly] : res)
        for (const auto& [xe, coeff] : poly.terms())
          for (const auto& [key, sc] : coeff.terms()) {
            std::string col = std::to_string(pi) + "|";
            for (int x : xe) col += std::to_string(x) + ",";
            col += "|" + std::to_string(key);
            auto [it, inserted] = columns.try_emplace(col, int(columns.size()));
            row[it->second] = sc;
          }
    }
    rows.push_back(std::move(row));
  }
  // exact Gaussian elimination with a pivot per leading column
  int rank = 0;
  std::map<int, std::map<int, Scalar>> pivots;
  for (auto row : rows) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto pit = pivots.find(lead);
      if (pit == pivots.end()) {
        Scalar inv = row.begin()->second.inverse();
        for (auto& [c, val] : row) val *= inv;
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      Scalar factor = row.begin()->second;
      for (const auto& [c, val] : pit->second) {
        Scalar delta = val * factor;
        auto [jt, inserted] = row.try_emplace(c, -delta);
        if (!inserted) {
          jt->second -= delta;
          if (jt->second.is_zero()) row.erase(jt);
        }
      }
    }
  }
  return rank;
}

}  // namespace repkit
