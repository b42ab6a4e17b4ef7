#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "paramkit/geometry.hpp"
#include "paramkit/params.hpp"

using namespace paramkit;
using ringkit::Field;
using ringkit::Scalar;

namespace {
const Field Q = Field::rationals();
Scalar sc(long v) { return Scalar(Q, v); }
}  // namespace

TEST_CASE("spectrum graph edges and the order of q") {
  Field F7 = Field::prime(7);
  auto g = make_param_graph(F7, Scalar(F7, 2), {Scalar(F7, 1), Scalar(F7, 2), Scalar(F7, 4)});
  CHECK(g.order_of_q == 3);
  REQUIRE(g.edges.size() == 3);
  CHECK(g.has_edge(Scalar(F7, 1), Scalar(F7, 2)));
  CHECK(g.has_edge(Scalar(F7, 2), Scalar(F7, 4)));
  CHECK(g.has_edge(Scalar(F7, 4), Scalar(F7, 1)));

  auto h = make_param_graph(Q, sc(2), {sc(1), sc(3)});
  CHECK(h.order_of_q == 0);
  CHECK(h.edges.empty());

  auto m = make_param_graph(Q, sc(-1), {sc(1), sc(-1)});
  CHECK(m.order_of_q == 2);
  CHECK(m.edges.size() == 2);

  CHECK_THROWS_AS(make_param_graph(Q, sc(1), {sc(1)}), InvalidQ);
  CHECK_THROWS_AS(make_param_graph(Q, sc(2), {sc(1), sc(1)}), DuplicateSpectrum);
  CHECK_THROWS_AS(make_param_graph(Q, sc(2), {sc(0)}), DuplicateSpectrum);
}

TEST_CASE("sequence swaps") {
  std::vector<Scalar> u{sc(1), sc(2), sc(4)};
  auto v = seq_swap(u, 1);
  CHECK(v[0] == sc(2));
  CHECK(v[1] == sc(1));
  CHECK(seq_swap(v, 1) == u);
  std::vector<Scalar> w{sc(5), sc(5), sc(7)};
  CHECK(seq_swap(w, 1) == w);
  CHECK_THROWS(seq_swap(u, 3));
}

TEST_CASE("steadiness matches the classified examples") {
  Weighting half{Rational(1, 2)};
  RedData red4{{RedEntry{Rational(4), sc(1), 1}}};
  RedData red1{{RedEntry{Rational(1), sc(1), 1}}};

  Loading a{{Rational(0), Rational(5)}, {}};
  CHECK(unsteady(a, red4, half));

  Loading b{{Rational(3), Rational(5)}, {}};
  CHECK_FALSE(unsteady(b, red1, half));

  Loading c{{Rational(-3), Rational(5)}, {}};
  CHECK(unsteady(c, red4, half));

  // invariance under global translation
  Loading a2{{Rational(100), Rational(105)}, {}};
  RedData red104{{RedEntry{Rational(104), sc(1), 1}}};
  CHECK(unsteady(a2, red104, half));

  // appending a far-right strand preserves both classifications here
  Loading b2 = b;
  b2.positions.push_back(Rational(50));
  CHECK_FALSE(unsteady(b2, red1, half));
  Loading a3 = a;
  a3.positions.push_back(Rational(50));
  CHECK(unsteady(a3, red4, half));
}

TEST_CASE("straight-line geometry produces ordered crossing events") {
  GeoOptions plain;
  std::vector<Rational> bot{Rational(0), Rational(1)};
  CHECK(geometry_events(bot, bot, {1, 2}, plain).empty());

  auto evs = geometry_events(bot, bot, {2, 1}, plain);
  REQUIRE(evs.size() == 1);
  CHECK(evs[0].kind == GeoKind::StrandStrand);

  // two strands swapping with ghosts: ghost crossings straddle the crossing
  GeoOptions ghosts;
  ghosts.ghosts = true;
  ghosts.kappa = Rational(-1, 4);
  auto gev = geometry_events(bot, bot, {2, 1}, ghosts);
  REQUIRE(gev.size() == 3);
  CHECK(gev[0].kind == GeoKind::StrandGhost);
  CHECK(gev[1].kind == GeoKind::StrandStrand);
  CHECK(gev[2].kind == GeoKind::StrandGhost);

  // one strand passing one red line
  GeoOptions red;
  red.reds = {Rational(1, 2)};
  std::vector<Rational> l{Rational(0)};
  std::vector<Rational> r{Rational(1)};
  auto rev = geometry_events(l, r, {1}, red);
  REQUIRE(rev.size() == 1);
  CHECK(rev[0].kind == GeoKind::StrandRed);
  CHECK(rev[0].dir == 1);

  // tangency: a crossing landing exactly on a red line
  GeoOptions tcase;
  tcase.reds = {Rational(1)};
  std::vector<Rational> meet{Rational(0), Rational(2)};
  CHECK_THROWS_AS(geometry_events(meet, meet, {2, 1}, tcase), Tangency);
}

TEST_CASE("event counts match a pairwise intersection oracle") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pos(-8, 8);
  GeoOptions opt;
  opt.ghosts = true;
  opt.kappa = Rational(-1, 3);
  opt.reds = {Rational(1, 7)};
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3;
    std::set<Rational> bset, tset;
    while (int(bset.size()) < n) bset.insert(Rational(pos(rng)));
    while (int(tset.size()) < n) tset.insert(Rational(pos(rng)) / 2);
    std::vector<Rational> bot(bset.begin(), bset.end()), top(tset.begin(), tset.end());
    std::vector<int> match{1, 2, 3};
    std::shuffle(match.begin(), match.end(), rng);
    std::vector<GeoEvent> evs;
    try {
      evs = geometry_events(bot, top, match, opt);
    } catch (const Tangency&) {
      continue;
    }
    // oracle: endpoint order changes, pair by pair
    auto strand = [&](int i, int t) { return t == 0 ? bot[i] : top[match[i] - 1]; };
    size_t expected = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i < j && (strand(i, 0) < strand(j, 0)) != (strand(i, 1) < strand(j, 1)))
          ++expected;  // strand-strand
        if (i != j) {
          auto gb = strand(j, 0) + *opt.kappa;
          auto gt = strand(j, 1) + *opt.kappa;
          if ((strand(i, 0) < gb) != (strand(i, 1) < gt)) ++expected;  // strand-ghost
        }
      }
    for (int i = 0; i < n; ++i)
      if ((strand(i, 0) < opt.reds[0]) != (strand(i, 1) < opt.reds[0])) ++expected;
    CHECK(evs.size() == expected);
  }
}
