#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "cli/config.hpp"
#include "isokit/iso.hpp"
#include "repkit/checker.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
  std::string config_path;
  std::string family;
  std::string out_path;
  int n = 0;
  int order = 0;
  int probe_box = 2;
  int workers = 1;
  int mutate = -1;
};

std::ostream& open_out(const CommonOpts& o, std::ofstream& file) {
  if (o.out_path.empty()) return std::cout;
  file.open(o.out_path);
  if (!file) throw cli::ConfigError("cannot open output: " + o.out_path);
  return file;
}

repkit::EngineCfg make_cfg(const CommonOpts& o) {
  repkit::EngineCfg cfg = cli::load_config(o.config_path);
  if (o.n > 0) cfg.ctx.n = o.n;
  if (o.order > 0) cfg.ctx.cutoff = o.order;
  return cfg;
}

int run_relations(const CommonOpts& o) {
  repkit::EngineCfg cfg = make_cfg(o);
  auto fam = diagramkit::family_from_name(o.family);
  if (!fam) throw cli::ConfigError("unknown family: " + o.family);
  cfg.family = *fam;
  repkit::Engine eng(cfg);
  repkit::SuiteOptions opt;
  opt.probe_box = o.probe_box;
  opt.workers = o.workers;
  opt.mutation = o.mutate;
  auto suite = repkit::run_suite(eng, opt);
  std::ofstream file;
  auto& out = open_out(o, file);
  for (const auto& r : suite.records) out << r.json() << "\n";
  out << suite.summary_json() << "\n";
  return suite.all_pass() ? kExitPass : kExitFail;
}

int run_iso(const CommonOpts& o) {
  repkit::EngineCfg cfg = make_cfg(o);
  diagramkit::Family fam;
  if (o.family == "o")
    fam = diagramkit::Family::Klr;
  else if (o.family == "w")
    fam = diagramkit::Family::Wklr;
  else if (o.family == "f")
    fam = diagramkit::Family::TLambda;
  else if (o.family == "wf")
    fam = diagramkit::Family::WfKlr;
  else
    throw cli::ConfigError("iso family must be one of o|w|f|wf");
  cfg.family = fam;
  cfg.deform = cfg.series.deformed();

  std::ofstream file;
  auto& out = open_out(o, file);
  bool pass = true;
  auto rep = isokit::check_intertwine(cfg);
  for (const auto& r : rep.records)
    out << r.json(diagramkit::family_name(fam), cfg.sigma) << "\n";
  pass = pass && rep.all_pass();

  if (diagramkit::has_reds(fam)) {
    for (const auto& u : cfg.graph.U) {
      auto cy = isokit::cyclo_correspondence(cfg, u);
      for (const auto& r : cy.records)
        out << r.json(diagramkit::family_name(fam), cfg.sigma) << "\n";
      for (const auto& r : cy.records) pass = pass && r.pass;
    }
    repkit::EngineCfg hcfg = cfg;
    hcfg.family = fam == diagramkit::Family::TLambda ? diagramkit::Family::FHecke
                                                     : diagramkit::Family::WfHecke;
    auto viol = isokit::violating_generator_check(hcfg);
    for (const auto& r : viol.records)
      out << r.json(diagramkit::family_name(hcfg.family), cfg.sigma) << "\n";
    pass = pass && viol.all_pass();
  }
  nlohmann::json summary{{"summary", true}, {"status", pass ? "PASS" : "FAIL"}};
  out << summary.dump() << "\n";
  return pass ? kExitPass : kExitFail;
}

int run_basis(const CommonOpts& o, int expbox) {
  repkit::EngineCfg cfg = make_cfg(o);
  cfg.family = diagramkit::Family::Waha;
  repkit::Engine eng(cfg);
  auto basis = diagramkit::enumerate_basis(eng.dcfg(), eng.cfg().base, expbox);
  auto probes = eng.x_probes(o.probe_box);
  int rank = repkit::basis_rank(eng, basis, probes);
  std::ofstream file;
  auto& out = open_out(o, file);
  nlohmann::json j{{"diagrams", basis.size()},
                   {"rank", rank},
                   {"status", rank == int(basis.size()) ? "PASS" : "FAIL"}};
  out << j.dump() << "\n";
  return rank == int(basis.size()) ? kExitPass : kExitFail;
}

int run_idempotents(const CommonOpts& o) {
  repkit::EngineCfg cfg = make_cfg(o);
  std::ofstream file;
  auto& out = open_out(o, file);
  bool pass = true;
  auto nil = isokit::nilhecke_idem_check(cfg, std::min(3, cfg.ctx.n));
  for (const auto& r : nil.records) out << r.json("waha", cfg.sigma) << "\n";
  pass = pass && nil.all_pass();
  std::vector<std::vector<int>> comps;
  if (cfg.ctx.n == 2) comps = {{2}, {1, 1}};
  if (cfg.ctx.n == 3) comps = {{3}, {2, 1}, {1, 2}, {1, 1, 1}};
  for (const auto& k : comps) {
    auto rep = isokit::symmetrizer_check(cfg, k);
    for (const auto& r : rep.records) out << r.json("hecke_o", cfg.sigma) << "\n";
    pass = pass && rep.all_pass();
  }
  nlohmann::json summary{{"summary", true}, {"status", pass ? "PASS" : "FAIL"}};
  out << summary.dump() << "\n";
  return pass ? kExitPass : kExitFail;
}

int run_apply(const CommonOpts& o, const std::string& diagram_path, const std::string& probe) {
  repkit::EngineCfg cfg = make_cfg(o);
  std::ifstream in(diagram_path);
  if (!in) throw cli::ConfigError("cannot open diagram: " + diagram_path);
  nlohmann::json dj;
  in >> dj;
  diagramkit::Diagram d = cli::diagram_from_json(dj, cfg);
  cfg.family = d.family;
  repkit::Engine eng(cfg);

  std::ofstream file;
  auto& out = open_out(o, file);
  if (diagramkit::hecke_side(d.family)) {
    // probe: comma-separated Laurent exponents of X_1..X_n
    std::vector<int> exps;
    std::stringstream ss(probe);
    std::string tok;
    while (std::getline(ss, tok, ',')) exps.push_back(std::stoi(tok));
    exps.resize(cfg.ctx.n, 0);
    auto one = ringkit::TruncSeries::constant(cfg.ctx, ringkit::Scalar(cfg.graph.field, 1));
    auto p = ringkit::XPoly::monomial(cfg.ctx, exps, one);
    auto res = eng.apply(d, repkit::Engine::XVec{{d.bottom, p}});
    for (const auto& [l, val] : res) out << val.str() << "\n";
    if (res.empty()) out << "0\n";
  } else {
    std::vector<int> exps;
    std::stringstream ss(probe);
    std::string tok;
    while (std::getline(ss, tok, ',')) exps.push_back(std::stoi(tok));
    exps.resize(cfg.ctx.n, 0);
    auto p = ringkit::TruncSeries::constant(cfg.ctx, ringkit::Scalar(cfg.graph.field, 1));
    for (int i = 0; i < cfg.ctx.n; ++i)
      for (int k = 0; k < exps[i]; ++k)
        p = p * ringkit::TruncSeries::var_y(cfg.ctx, cfg.graph.field, i + 1);
    auto res = eng.apply(d, repkit::Engine::YVec{{d.bottom, p}});
    for (const auto& [l, val] : res) out << val.str() << "\n";
    if (res.empty()) out << "0\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic verifier for diagrammatic Hecke/KLR algebra families"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string diagram_path, probe = "0";
  int expbox = 1;

  auto add_common = [&](CLI::App* sub, bool with_family) {
    sub->add_option("--config", o.config_path, "JSON parameter file")->required();
    if (with_family) sub->add_option("--family", o.family, "algebra family")->required();
    sub->add_option("--out", o.out_path, "report path (default stdout)");
    sub->add_option("--n", o.n, "strand count override");
    sub->add_option("--order", o.order, "truncation order override");
    sub->add_option("--probe-box", o.probe_box, "Laurent probe exponent box");
    sub->add_option("--workers", o.workers, "worker threads");
  };

  auto* rel = app.add_subcommand("relations", "check every presentation relation");
  add_common(rel, true);
  rel->add_option("--mutate", o.mutate, "seeded relation mutation (checker sanity)");

  auto* iso = app.add_subcommand("iso", "certify the Hecke/KLR isomorphism dictionaries");
  add_common(iso, true);

  auto* basis = app.add_subcommand("basis", "basis independence rank check");
  add_common(basis, false);
  basis->add_option("--expbox", expbox, "square exponent box");

  auto* idem = app.add_subcommand("idempotents", "nilHecke idempotents and symmetrizers");
  add_common(idem, false);

  auto* ap = app.add_subcommand("apply", "evaluate a diagram on a probe");
  add_common(ap, false);
  ap->add_option("--diagram", diagram_path, "diagram JSON file")->required();
  ap->add_option("--probe", probe, "probe exponents, comma separated");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rel->parsed()) return run_relations(o);
    if (iso->parsed()) return run_iso(o);
    if (basis->parsed()) return run_basis(o, expbox);
    if (idem->parsed()) return run_idempotents(o);
    if (ap->parsed()) return run_apply(o, diagram_path, probe);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitConfig;
}
