#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagramkit/diagram.hpp"
#include "diagramkit/registry.hpp"
#include "paramkit/params.hpp"

using namespace diagramkit;
using paramkit::Loading;
using paramkit::Rational;
using paramkit::RedData;
using paramkit::RedEntry;
using paramkit::Weighting;
using ringkit::Field;
using ringkit::Scalar;
using ringkit::VarCtx;

namespace {

const Field Q = Field::rationals();
Scalar sc(long v) { return Scalar(Q, v); }

paramkit::ParamGraph cycle7() {
  Field F7 = Field::prime(7);
  return paramkit::make_param_graph(F7, Scalar(F7, 2),
                                    {Scalar(F7, 1), Scalar(F7, 2), Scalar(F7, 4)});
}

Loading base3() {
  Loading l;
  l.positions = {Rational(1), Rational(2), Rational(3)};
  return l;
}

}  // namespace

TEST_CASE("composition concatenates or returns zero") {
  DiagramCfg cfg{Family::HeckeOPlus, nullptr, VarCtx{3, 0, 3}, Weighting{}, RedData{}};
  Loading B = base3();
  Diagram id = identity_diagram(cfg, B);
  Diagram c{Family::HeckeOPlus, B, B, {Event::cross(1)}};

  auto comp = compose(id, c);
  REQUIRE(comp);
  CHECK(comp->events.size() == 1);

  auto cc = compose(c, c);
  REQUIRE(cc);
  CHECK(cc->events.size() == 2);

  Loading other;
  other.positions = {Rational(1), Rational(2)};
  Diagram small{Family::HeckeOPlus, other, other, {}};
  CHECK_FALSE(compose(small, c).has_value());
  CHECK_THROWS_AS(compose(c, Diagram{Family::Waha, B, B, {}}), BadDiagram);
}

TEST_CASE("d_w realizes permutations with straight lines") {
  auto g = cycle7();
  DiagramCfg cfg{Family::HeckeOPlus, &g, VarCtx{3, 0, 3}, Weighting{}, RedData{}};
  Loading B = base3();

  Diagram id = d_w(cfg, {1, 2, 3}, B);
  CHECK(id.events.empty());

  Diagram s1 = d_w(cfg, {2, 1, 3}, B);
  REQUIRE(s1.events.size() == 1);
  CHECK(s1.events[0].kind == Event::Kind::StrandCross);
  CHECK(s1.events[0].i == 1);
  CHECK(s1.induced_permutation() == std::vector<int>{2, 1, 3});

  // WAHA: the crossing drags its two ghost crossings along
  DiagramCfg wcfg{Family::Waha, &g, VarCtx{2, 0, 3}, Weighting{Rational(-1, 2)}, RedData{}};
  Loading B2;
  B2.positions = {Rational(0), Rational(2)};
  Diagram ws = d_w(wcfg, {2, 1}, B2);
  REQUIRE(ws.events.size() == 3);
  CHECK(ws.events[0].kind == Event::Kind::StrandGhost);
  CHECK(ws.events[1].kind == Event::Kind::StrandCross);
  CHECK(ws.events[2].kind == Event::Kind::StrandGhost);

  // replay validation: every geometry-built word validates against bottom/top
  for (const auto& w : all_permutations(3)) {
    Diagram dw = d_w(cfg, w, B);
    CHECK(dw.induced_permutation() == w);
    CHECK_NOTHROW(dw.validate(RedData{}));
  }

  // D_w composed with D_{w^{-1}} has the identity's boundary
  Diagram fwd = d_w(cfg, {2, 3, 1}, B);
  Diagram bwd = d_w(cfg, inverse_permutation({2, 3, 1}), fwd.top);
  auto loop = compose(bwd, fwd);
  REQUIRE(loop);
  CHECK(loop->bottom == B);
  CHECK(loop->top == B);
}

TEST_CASE("basis enumeration counts e_B D_w X^a") {
  auto g = cycle7();
  DiagramCfg cfg1{Family::Waha, &g, VarCtx{1, 0, 3}, Weighting{Rational(-1, 2)}, RedData{}};
  Loading B1;
  B1.positions = {Rational(0)};
  CHECK(enumerate_basis(cfg1, B1, 1).size() == 3);

  DiagramCfg cfg2{Family::Waha, &g, VarCtx{2, 0, 3}, Weighting{Rational(-1, 2)}, RedData{}};
  Loading B2;
  B2.positions = {Rational(0), Rational(2)};
  CHECK(enumerate_basis(cfg2, B2, 0).size() == 2);
  CHECK(enumerate_basis(cfg2, B2, 1).size() == 18);
}

TEST_CASE("grading of KLR-side diagrams") {
  auto g = cycle7();
  Field F7 = g.field;
  VarCtx ctx{2, 0, 4};
  DiagramCfg cfg{Family::Klr, &g, ctx, Weighting{}, RedData{}};

  Loading B;
  B.positions = {Rational(1), Rational(2)};
  B.labels = {Scalar(F7, 1), Scalar(F7, 1)};
  Diagram dot{Family::Klr, B, B, {Event::dot(1)}};
  CHECK(grading(cfg, dot) == 2);

  Diagram cross{Family::Klr, B, B, {Event::cross(1)}};
  CHECK(grading(cfg, cross) == -2);  // equal labels

  Loading Be = B;
  Be.labels = {Scalar(F7, 1), Scalar(F7, 2)};
  Diagram crosse{Family::Klr, Be, Be.permuted({2, 1}), {Event::cross(1)}};
  CHECK(grading(cfg, crosse) == 1);  // single edge

  // q = -1: a doubled edge gives degree 2
  auto gm = paramkit::make_param_graph(Q, sc(-1), {sc(1), sc(-1)});
  DiagramCfg mcfg{Family::Klr, &gm, ctx, Weighting{}, RedData{}};
  Loading Bm;
  Bm.positions = {Rational(1), Rational(2)};
  Bm.labels = {sc(1), sc(-1)};
  Diagram crossm{Family::Klr, Bm, Bm.permuted({2, 1}), {Event::cross(1)}};
  CHECK(grading(mcfg, crossm) == 2);

  CHECK_THROWS(grading(cfg, Diagram{Family::HeckeOPlus, B, B, {}}));
}

TEST_CASE("registries carry the advertised schema counts") {
  auto g = cycle7();
  paramkit::Weighting kappa{Rational(-1, 2)};
  RedData reds;
  ringkit::TruncSeries qq =
      ringkit::TruncSeries::constant(VarCtx{3, 0, 4}, Scalar(g.field, 2));
  Loading base;
  base.positions = {Rational(10), Rational(12), Rational(14)};

  RegistryCfg rc{DiagramCfg{Family::HeckeOPlus, &g, VarCtx{3, 0, 4}, kappa, reds},
                 g.field, qq, {}, true, true, base, -1};

  auto plus = relation_registry(rc, Family::HeckeOPlus);
  std::set<std::string> ids;
  for (const auto& r : plus) ids.insert(r.id);
  CHECK(ids == std::set<std::string>{"Hecke-1", "Hecke-2", "Hecke-triple"});

  rc.dcfg.family = Family::Waha;
  auto waha = relation_registry(rc, Family::Waha);
  ids.clear();
  for (const auto& r : waha) ids.insert(r.id);
  CHECK(ids == std::set<std::string>{"nilHecke-2", "NilHecke3", "green-ghost-bigon1",
                                     "green-ghost-bigon2", "eq:triple-point-1",
                                     "eq:triple-point-2"});

  rc.dcfg.family = Family::Klr;
  auto klr = relation_registry(rc, Family::Klr);
  ids.clear();
  for (const auto& r : klr) ids.insert(r.id);
  CHECK(ids == std::set<std::string>{"first-QH", "nilHecke-1", "black-bigon", "triple-dumb"});
}
