// Acceptance suite: every exit criterion at its stated size, one pass/fail
// line per criterion.  All comparisons are exact at the certified degree.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "isokit/iso.hpp"
#include "repkit/checker.hpp"

using namespace repkit;
using diagramkit::Family;
using isokit::IsoReport;
using paramkit::DChoice;
using paramkit::Loading;
using paramkit::Rational;
using paramkit::RedData;
using paramkit::RedEntry;
using paramkit::SeriesChoice;
using paramkit::Weighting;
using ringkit::Field;
using ringkit::Scalar;
using ringkit::TruncSeries;
using ringkit::VarCtx;
using ringkit::XPoly;

namespace {

const Field QQ = Field::rationals();

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void announce(int criterion, bool pass, double secs, double budget) {
  std::printf("criterion %d: %s (%.2fs, budget %.0fs)\n", criterion, pass ? "PASS" : "FAIL",
              secs, budget);
  std::fflush(stdout);
}

EngineCfg rational_cycle(Family fam, int n, int cutoff) {
  EngineCfg cfg;
  cfg.family = fam;
  cfg.graph =
      paramkit::make_param_graph(QQ, Scalar(QQ, 2), {Scalar(QQ, 1), Scalar(QQ, 2), Scalar(QQ, 4)});
  cfg.ctx = VarCtx{n, 0, cutoff};
  cfg.kappa.kappa = Rational(-1, 2);
  return cfg;
}

EngineCfg f7_cycle(Family fam, int n, int cutoff) {
  Field F7 = Field::prime(7);
  EngineCfg cfg;
  cfg.family = fam;
  cfg.graph = paramkit::make_param_graph(
      F7, Scalar(F7, 2), {Scalar(F7, 1), Scalar(F7, 2), Scalar(F7, 4)});
  cfg.ctx = VarCtx{n, 0, cutoff};
  cfg.kappa.kappa = Rational(-1, 2);
  return cfg;
}

EngineCfg minus_one(Family fam, int n, int cutoff) {
  EngineCfg cfg;
  cfg.family = fam;
  cfg.graph = paramkit::make_param_graph(QQ, Scalar(QQ, -1), {Scalar(QQ, 1), Scalar(QQ, -1)});
  cfg.ctx = VarCtx{n, 0, cutoff};
  cfg.kappa.kappa = Rational(-1, 2);
  return cfg;
}

EngineCfg with_series(EngineCfg cfg, SeriesChoice::Kind b, DChoice d) {
  cfg.series.kind = b;
  cfg.series.d = d;
  cfg.deform = (d == DChoice::Exp);
  return cfg;
}

EngineCfg with_red(EngineCfg cfg, std::vector<std::pair<Rational, long>> reds) {
  int zi = 1;
  for (auto& [theta, qlab] : reds)
    cfg.reds.entries.push_back(RedEntry{theta, Scalar(cfg.graph.field, qlab), zi++});
  cfg.reds.validate();
  cfg.ctx.ell = int(cfg.reds.entries.size());
  return cfg;
}

bool all_pass(const SuiteReport& rep, std::string* why = nullptr) {
  for (const auto& r : rep.records)
    if (!r.pass) {
      if (why) *why = r.id + " [" + r.context + "]";
      return false;
    }
  return true;
}

bool all_pass(const IsoReport& rep, std::string* why = nullptr) {
  for (const auto& r : rep.records)
    if (!r.pass) {
      if (why) *why = r.generator + " [" + r.context + "]";
      return false;
    }
  return true;
}

TruncSeries random_series(const VarCtx& c, std::mt19937& rng) {
  TruncSeries s(c, QQ);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> pick(0, 4);
  std::vector<uint64_t> keys{0};
  for (int v = 0; v < c.nvars(); ++v) {
    std::vector<uint64_t> next;
    for (uint64_t k : keys)
      for (int e = 0; TruncSeries::key_degree(k) + e <= c.cutoff && e <= 3; ++e)
        next.push_back(k + TruncSeries::pack_one(v, e));
    keys = next;
  }
  for (uint64_t k : keys)
    if (pick(rng) == 0) s.add_term(k, Scalar(QQ, coeff(rng)));
  return s;
}

}  // namespace

TEST_CASE("criterion 1: Demazure kernel, braid and twisted Leibnitz") {
  Stopwatch sw;
  VarCtx c{3, 0, 6};
  std::mt19937 rng(2026);
  bool ok = true;
  TruncSeries zero(c, QQ);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    auto f = random_series(c, rng);
    auto g = random_series(c, rng);
    for (int r : {1, 2}) {
      auto dd = f.demazure(r).demazure(r);
      ok = ok && TruncSeries::equal_to_degree(dd, zero, std::min(dd.cert(), c.cutoff));
      auto lhs = (f * g).demazure(r);
      auto rhs = f.demazure(r) * g.swapped_y(r) + f * g.demazure(r);
      ok = ok && TruncSeries::equal_to_degree(lhs, rhs,
                                              std::min({lhs.cert(), rhs.cert(), c.cutoff}));
    }
    auto b1 = f.demazure(1).demazure(2).demazure(1);
    auto b2 = f.demazure(2).demazure(1).demazure(2);
    ok = ok && TruncSeries::equal_to_degree(b1, b2, std::min({b1.cert(), b2.cert(), c.cutoff}));
  }
  double secs = sw.seconds();
  announce(1, ok && secs < 10, secs, 10);
  CHECK(ok);
  CHECK(secs < 10);
}

TEST_CASE("criterion 2: type O relation suites over three parameter fields") {
  Stopwatch sw;
  bool ok = true;
  std::string why;
  SuiteOptions opt;
  opt.probe_box = 2;
  for (auto make : {rational_cycle, f7_cycle, minus_one}) {
    for (auto fam : {Family::HeckeOPlus, Family::HeckeOMinus}) {
      for (int sign : {-1, +1}) {
        auto cfg = make(fam, 3, 5);
        cfg.rep_sign = sign;
        ok = ok && all_pass(run_suite(Engine(cfg), opt), &why);
      }
    }
    ok = ok && all_pass(run_suite(Engine(make(Family::Klr, 3, 5)), {}), &why);
  }
  double secs = sw.seconds();
  announce(2, ok && secs < 120, secs, 120);
  INFO(why);
  CHECK(ok);
  CHECK(secs < 120);
}

TEST_CASE("criterion 3: dictionary checks for both crossing conventions") {
  Stopwatch sw;
  std::string why;
  auto rep = check_dictionary_type_o(rational_cycle(Family::HeckeOPlus, 3, 4), SuiteOptions{2});
  bool ok = all_pass(rep, &why);
  double secs = sw.seconds();
  announce(3, ok && secs < 60, secs, 60);
  INFO(why);
  CHECK(ok);
  CHECK(secs < 60);
}

TEST_CASE("criterion 4: type W suites, basis rank, idempotents, symmetrizers") {
  Stopwatch sw;
  bool ok = true;
  std::string why;
  SuiteOptions opt;
  opt.probe_box = 2;
  for (int ks : {-1, +1}) {
    auto wa = rational_cycle(Family::Waha, 3, 4);
    wa.kappa.kappa = Rational(ks, 2);
    ok = ok && all_pass(run_suite(Engine(wa), opt), &why);
    auto wk = rational_cycle(Family::Wklr, 3, 4);
    wk.kappa.kappa = Rational(ks, 2);
    ok = ok && all_pass(run_suite(Engine(wk), {}), &why);
  }

  auto bcfg = rational_cycle(Family::Waha, 2, 3);
  Engine beng(bcfg);
  auto basis = diagramkit::enumerate_basis(beng.dcfg(), beng.cfg().base, 1);
  int rank = basis_rank(beng, basis, beng.x_probes(2));
  ok = ok && basis.size() == 18 && rank == 18;
  if (rank != 18) why = "basis rank " + std::to_string(rank);

  ok = ok && all_pass(isokit::nilhecke_idem_check(rational_cycle(Family::Waha, 3, 4), 3), &why);

  auto o2 = rational_cycle(Family::HeckeOPlus, 2, 3);
  auto o3 = rational_cycle(Family::HeckeOPlus, 3, 3);
  ok = ok && all_pass(isokit::symmetrizer_check(o2, {2}), &why);
  ok = ok && all_pass(isokit::symmetrizer_check(o3, {2, 1}), &why);
  ok = ok && all_pass(isokit::symmetrizer_check(o3, {3}), &why);

  double secs = sw.seconds();
  announce(4, ok && secs < 180, secs, 180);
  INFO(why);
  CHECK(ok);
  CHECK(secs < 180);
}

TEST_CASE("criterion 5: type O intertwining at n = 3, N = 5") {
  Stopwatch sw;
  bool ok = true;
  std::string why;
  for (auto [b, d] : std::vector<std::pair<SeriesChoice::Kind, DChoice>>{
           {SeriesChoice::Kind::OnePlus, DChoice::One},
           {SeriesChoice::Kind::Exp, DChoice::One},
           {SeriesChoice::Kind::Exp, DChoice::Exp}}) {
    auto cfg = with_series(rational_cycle(Family::Klr, 3, 5), b, d);
    ok = ok && all_pass(isokit::check_intertwine(cfg), &why);
  }
  double secs = sw.seconds();
  announce(5, ok && secs < 120, secs, 120);
  INFO(why);
  CHECK(ok);
  CHECK(secs < 120);
}

TEST_CASE("criterion 6: intertwining for types W, F and WF") {
  Stopwatch sw;
  bool ok = true;
  std::string why;
  for (int ks : {-1, +1}) {
    auto w = with_series(rational_cycle(Family::Wklr, 3, 4), SeriesChoice::Kind::Exp,
                         DChoice::Exp);
    w.kappa.kappa = Rational(ks, 2);
    ok = ok && all_pass(isokit::check_intertwine(w), &why);
  }
  auto f1 = with_red(with_series(rational_cycle(Family::TLambda, 3, 4),
                                 SeriesChoice::Kind::Exp, DChoice::Exp),
                     {{Rational(0), 1}});
  ok = ok && all_pass(isokit::check_intertwine(f1), &why);
  auto f2 = with_red(with_series(rational_cycle(Family::TLambda, 2, 4),
                                 SeriesChoice::Kind::Exp, DChoice::Exp),
                     {{Rational(0), 1}, {Rational(3), 2}});
  ok = ok && all_pass(isokit::check_intertwine(f2), &why);
  for (int ks : {-1, +1}) {
    auto wf = with_red(with_series(rational_cycle(Family::WfKlr, 2, 4),
                                   SeriesChoice::Kind::Exp, DChoice::Exp),
                       {{Rational(0), 1}, {Rational(0), 2}});
    wf.kappa.kappa = Rational(ks, 2);
    ok = ok && all_pass(isokit::check_intertwine(wf), &why);
  }
  double secs = sw.seconds();
  announce(6, ok && secs < 300, secs, 300);
  INFO(why);
  CHECK(ok);
  CHECK(secs < 300);
}

TEST_CASE("criterion 7: deformed cyclotomic correspondence, one sign only") {
  Stopwatch sw;
  bool ok = true;
  for (auto reds : std::vector<std::vector<std::pair<Rational, long>>>{
           {{Rational(0), 1}},
           {{Rational(0), 1}, {Rational(3), 2}},
           {{Rational(0), 2}, {Rational(0), 2}}}) {
    auto cfg = with_red(with_series(rational_cycle(Family::TLambda, 1, 4),
                                    SeriesChoice::Kind::Exp, DChoice::Exp),
                        reds);
    for (const auto& u : cfg.graph.U) {
      auto res = isokit::cyclo_correspondence(cfg, u);
      ok = ok && res.unit_certified && res.other_sign_fails;
    }
  }
  double secs = sw.seconds();
  announce(7, ok && secs < 30, secs, 30);
  CHECK(ok);
  CHECK(secs < 30);
}

TEST_CASE("criterion 8: violating generator and steadiness classification") {
  Stopwatch sw;
  bool ok = true;
  std::string why;
  auto f1 = with_red(rational_cycle(Family::FHecke, 1, 3), {{Rational(0), 1}});
  ok = ok && all_pass(isokit::violating_generator_check(f1), &why);
  auto f2 = with_red(rational_cycle(Family::WfHecke, 2, 3),
                     {{Rational(0), 1}, {Rational(3), 2}});
  ok = ok && all_pass(isokit::violating_generator_check(f2), &why);

  // the steady/unsteady fixtures
  Weighting half{Rational(1, 2)};
  RedData red4{{RedEntry{Rational(4), Scalar(QQ, 1), 1}}};
  RedData red1{{RedEntry{Rational(1), Scalar(QQ, 1), 1}}};
  ok = ok && paramkit::unsteady(Loading{{Rational(0), Rational(5)}, {}}, red4, half);
  ok = ok && !paramkit::unsteady(Loading{{Rational(3), Rational(5)}, {}}, red1, half);
  ok = ok && paramkit::unsteady(Loading{{Rational(-3), Rational(5)}, {}}, red4, half);

  double secs = sw.seconds();
  announce(8, ok && secs < 10, secs, 10);
  INFO(why);
  CHECK(ok);
  CHECK(secs < 10);
}

TEST_CASE("criterion 9: every seeded mutation fails with a localized witness") {
  Stopwatch sw;
  bool ok = true;
  std::string why;
  for (int m = 0; m < diagramkit::kMutationCount; ++m) {
    auto [fam, id] = diagramkit::mutation_target(m);
    EngineCfg cfg;
    switch (fam) {
      case Family::WfHecke:
        cfg = with_red(rational_cycle(fam, 2, 4), {{Rational(0), 1}, {Rational(3), 2}});
        break;
      case Family::TLambda:
        cfg = with_red(rational_cycle(fam, 2, 4), {{Rational(0), 1}});
        break;
      default:
        cfg = rational_cycle(fam, 3, 4);
    }
    SuiteOptions opt;
    opt.probe_box = 1;
    opt.mutation = m;
    auto rep = run_suite(Engine(cfg), opt);
    bool failed_somewhere = false;
    bool localized = true;
    for (const auto& r : rep.records) {
      if (!r.pass) {
        failed_somewhere = true;
        if (r.id != id) localized = false;
        if (r.counterexample.empty()) localized = false;
      }
    }
    if (!(failed_somewhere && localized)) {
      ok = false;
      why = "mutation " + std::to_string(m) + " on " + id;
    }
    // the unmutated suite stays green
    SuiteOptions clean = opt;
    clean.mutation = -1;
    ok = ok && all_pass(run_suite(Engine(cfg), clean), &why);
  }
  double secs = sw.seconds();
  announce(9, ok && secs < 120, secs, 120);
  INFO(why);
  CHECK(ok);
  CHECK(secs < 120);
}
