#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isokit/iso.hpp"

using namespace isokit;
using diagramkit::Family;
using paramkit::DChoice;
using paramkit::Rational;
using paramkit::SeriesChoice;
using ringkit::Field;
using ringkit::Scalar;
using ringkit::TruncSeries;
using ringkit::VarCtx;
using ringkit::XPoly;

namespace {

const Field Q = Field::rationals();

EngineCfg base_cfg(Family fam, int n, int cutoff) {
  EngineCfg cfg;
  cfg.family = fam;
  cfg.graph =
      paramkit::make_param_graph(Q, Scalar(Q, 2), {Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 4)});
  cfg.ctx = VarCtx{n, 0, cutoff};
  cfg.kappa.kappa = Rational(-1, 2);
  cfg.deform = false;
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
    cfg.reds.entries.push_back(paramkit::RedEntry{theta, Scalar(cfg.graph.field, qlab), zi++});
  cfg.reds.validate();
  cfg.ctx.ell = int(cfg.reds.entries.size());
  return cfg;
}

void expect_all(const IsoReport& rep) {
  for (const auto& r : rep.records) {
    INFO(r.generator, " [", r.context, "] ", r.note);
    CHECK(r.pass);
  }
}

}  // namespace

TEST_CASE("A-coefficients take the displayed constant terms and are units") {
  auto cfg = with_series(base_cfg(Family::Klr, 2, 4), SeriesChoice::Kind::OnePlus, DChoice::One);
  Iso iso(cfg);

  // generic pair: constant (v_r - q v_{r+1}) / (v_{r+1} - v_r)
  auto gen = iso.a_coeff(1, {Scalar(Q, 1), Scalar(Q, 4)});
  CHECK(gen.tag == ACoeffCase::Generic);
  CHECK(gen.value.constant_term() == Scalar::parse(Q, "-7/3"));

  // equal labels with b = 1 + t, d = 1: constant 1 - q
  auto eq = iso.a_coeff(1, {Scalar(Q, 2), Scalar(Q, 2)});
  CHECK(eq.tag == ACoeffCase::Equal);
  CHECK(eq.value.constant_term() == Scalar(Q, -1));

  // the q-edge case divides and stays a unit
  auto edge = iso.a_coeff(1, {Scalar(Q, 4), Scalar(Q, 2)});
  CHECK(edge.tag == ACoeffCase::QEdgeD1);
  CHECK(edge.value.is_unit());

  auto ecfg = with_series(base_cfg(Family::Klr, 2, 4), SeriesChoice::Kind::Exp, DChoice::Exp);
  Iso iexp(ecfg);
  auto edge2 = iexp.a_coeff(1, {Scalar(Q, 4), Scalar(Q, 2)});
  CHECK(edge2.tag == ACoeffCase::QEdgeDExp);
  CHECK(edge2.value.is_unit());
}

TEST_CASE("gamma_p realizes monomials and has a two-sided inverse") {
  auto cfg = with_series(base_cfg(Family::Klr, 1, 2), SeriesChoice::Kind::OnePlus, DChoice::One);
  Iso iso(cfg);
  std::vector<Scalar> u{Scalar(Q, 1)};

  auto one = TruncSeries::constant(cfg.ctx, Scalar(Q, 1));
  CHECK(iso.gamma_p(XPoly::one(cfg.ctx, Q), u) == one);
  auto y1 = TruncSeries::var_y(cfg.ctx, Q, 1);
  CHECK(iso.gamma_p(XPoly::var(cfg.ctx, Q, 1), u) == one + y1);
  CHECK(iso.gamma_p(XPoly::var(cfg.ctx, Q, 1, -1), u) == one - y1 + y1 * y1);

  expect_all(gamma_p_roundtrip(cfg));
  expect_all(gamma_p_roundtrip(
      with_series(base_cfg(Family::Klr, 2, 4), SeriesChoice::Kind::Exp, DChoice::Exp)));
}

TEST_CASE("type O intertwining passes for every allowed series choice") {
  for (auto [b, d] : std::vector<std::pair<SeriesChoice::Kind, DChoice>>{
           {SeriesChoice::Kind::OnePlus, DChoice::One},
           {SeriesChoice::Kind::Exp, DChoice::One},
           {SeriesChoice::Kind::Exp, DChoice::Exp}}) {
    auto cfg = with_series(base_cfg(Family::Klr, 2, 4), b, d);
    expect_all(check_intertwine(cfg));
  }
}

TEST_CASE("type W intertwining passes for both kappa signs") {
  for (int ks : {-1, +1}) {
    auto cfg =
        with_series(base_cfg(Family::Wklr, 2, 4), SeriesChoice::Kind::Exp, DChoice::Exp);
    cfg.kappa.kappa = Rational(ks, 2);
    expect_all(check_intertwine(cfg));
  }
}

TEST_CASE("types F and WF intertwine with red lines present") {
  auto f = with_red(
      with_series(base_cfg(Family::TLambda, 2, 4), SeriesChoice::Kind::Exp, DChoice::Exp),
      {{Rational(0), 1}});
  expect_all(check_intertwine(f));

  auto wf = with_red(
      with_series(base_cfg(Family::WfKlr, 2, 4), SeriesChoice::Kind::Exp, DChoice::Exp),
      {{Rational(0), 1}, {Rational(0), 2}});
  wf.kappa.kappa = Rational(-1, 2);
  expect_all(check_intertwine(wf));
}

TEST_CASE("cyclotomic polynomials correspond under exactly one sign") {
  auto cfg = with_red(
      with_series(base_cfg(Family::TLambda, 1, 3), SeriesChoice::Kind::Exp, DChoice::Exp),
      {{Rational(0), 1}});
  auto res = cyclo_correspondence(cfg, Scalar(Q, 1));
  CHECK(res.unit_certified);
  CHECK(res.other_sign_fails);
  CHECK(res.unit.constant_term() == Scalar(Q, 1));  // +Q_1

  auto res2 = cyclo_correspondence(cfg, Scalar(Q, 2));
  CHECK(res2.unit_certified);
  CHECK(res2.unit.constant_term() == Scalar(Q, 1));  // u1 - Q1 = 2 - 1

  // two lines, mixed labels
  auto cfg2 = with_red(
      with_series(base_cfg(Family::TLambda, 1, 3), SeriesChoice::Kind::Exp, DChoice::Exp),
      {{Rational(0), 1}, {Rational(3), 2}});
  for (long u : {1, 2, 4}) {
    auto r = cyclo_correspondence(cfg2, Scalar(Q, u));
    CHECK(r.unit_certified);
    CHECK(r.other_sign_fails);
  }
}

TEST_CASE("the pull-left diagram generates the violating ideal") {
  auto cfg = with_red(base_cfg(Family::FHecke, 1, 3), {{Rational(0), 1}});
  expect_all(violating_generator_check(cfg));

  auto wf = with_red(base_cfg(Family::WfHecke, 2, 3), {{Rational(0), 1}, {Rational(3), 2}});
  expect_all(violating_generator_check(wf));
}

TEST_CASE("nilHecke idempotents square to themselves") {
  auto cfg = base_cfg(Family::Waha, 3, 4);
  expect_all(nilhecke_idem_check(cfg, 3));
}

TEST_CASE("symmetrizers absorb their Young subgroup") {
  auto cfg = base_cfg(Family::HeckeOPlus, 2, 3);
  expect_all(symmetrizer_check(cfg, {2}));
  expect_all(symmetrizer_check(cfg, {1, 1}));
  auto cfg3 = base_cfg(Family::HeckeOPlus, 3, 3);
  expect_all(symmetrizer_check(cfg3, {2, 1}));
  expect_all(symmetrizer_check(cfg3, {3}));
}
