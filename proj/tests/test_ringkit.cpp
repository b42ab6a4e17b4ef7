#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringkit/scalar.hpp"
#include "ringkit/series.hpp"
#include "ringkit/xpoly.hpp"

using namespace ringkit;

namespace {

const Field Q = Field::rationals();

TruncSeries y(const VarCtx& c, int i) { return TruncSeries::var_y(c, Q, i); }
TruncSeries h(const VarCtx& c) { return TruncSeries::var_h(c, Q); }
TruncSeries z(const VarCtx& c, int j) { return TruncSeries::var_z(c, Q, j); }
TruncSeries one(const VarCtx& c) { return TruncSeries::constant(c, Scalar(Q, 1)); }

TruncSeries random_series(const VarCtx& c, std::mt19937& rng, bool unit) {
  TruncSeries s(c, Q);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> pick(0, 3);
  // sparse random polynomial over all monomials up to the cutoff
  std::vector<uint64_t> keys{0};
  for (int v = 0; v < c.nvars(); ++v) {
    std::vector<uint64_t> next;
    for (uint64_t k : keys)
      for (int e = 0; TruncSeries::key_degree(k) + e <= c.cutoff && e <= 3; ++e)
        next.push_back(k + TruncSeries::pack_one(v, e));
    keys = next;
  }
  for (uint64_t k : keys)
    if (pick(rng) == 0) s.add_term(k, Scalar(Q, coeff(rng)));
  if (unit && s.constant_term().is_zero()) s.add_term(0, Scalar(Q, 1));
  return s;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact in Q and F_p") {
  Scalar a = Scalar::parse(Q, "2/3");
  Scalar b = Scalar::parse(Q, "-1/6");
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK(a.inverse().str() == "3/2");

  Field F7 = Field::prime(7);
  Scalar x(F7, 3);
  CHECK((x * x).str() == "2");
  CHECK(x.inverse().str() == "5");
  CHECK(Scalar::parse(F7, "1/2").str() == "4");
  CHECK_THROWS_AS(Scalar(F7, 0).inverse(), NotAUnit);
}

TEST_CASE("series products truncate at the cutoff") {
  VarCtx c{1, 1, 2};
  auto s = (one(c) + y(c, 1)) * (one(c) - y(c, 1));
  CHECK(s == one(c) - y(c, 1) * y(c, 1));

  VarCtx c1{1, 1, 1};
  auto t = (one(c1) + y(c1, 1)) * (one(c1) + y(c1, 1));
  CHECK(t == one(c1) + y(c1, 1).scaled(Scalar(Q, 2)));

  CHECK((h(c1) * z(c1, 1)).is_zero());
}

TEST_CASE("inversion is a two-sided unit inverse") {
  VarCtx c{2, 0, 2};
  CHECK(one(c).inverse() == one(c));

  auto inv = (one(c) + y(c, 1)).inverse();
  CHECK(inv == one(c) - y(c, 1) + y(c, 1) * y(c, 1));
  CHECK_THROWS_AS(y(c, 1).inverse(), NotAUnit);

  std::mt19937 rng(7);
  VarCtx c4{3, 0, 4};
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_series(c4, rng, true);
    auto p = s * s.inverse();
    CHECK(TruncSeries::equal_to_degree(p, one(c4), c4.cutoff));
  }
}

TEST_CASE("exact division by linear forms certifies the quotient") {
  VarCtx c{2, 0, 4};
  LinForm L;
  L.terms.emplace_back(1, Scalar(Q, 1));
  L.terms.emplace_back(0, Scalar(Q, -1));  // y2 - y1

  auto num = y(c, 2) * y(c, 2) - y(c, 1) * y(c, 1);
  CHECK(num.div_linear(L) == y(c, 1) + y(c, 2));

  CHECK(TruncSeries(c, Q).div_linear(L).is_zero());
  CHECK_THROWS_AS((y(c, 1) + h(c)).div_linear(L), NotDivisible);
}

TEST_CASE("substitution composes truncated series") {
  VarCtx c{1, 1, 2};
  std::vector<Scalar> exp{Scalar(Q, 1), Scalar(Q, 1), Scalar::parse(Q, "1/2")};
  auto e = TruncSeries::subst(c, Q, exp, false, y(c, 1));
  CHECK(e == one(c) + y(c, 1) + (y(c, 1) * y(c, 1)).scaled(Scalar::parse(Q, "1/2")));

  std::vector<Scalar> oneplus{Scalar(Q, 1), Scalar(Q, 1)};
  auto f = TruncSeries::subst(c, Q, oneplus, true, y(c, 1) - z(c, 1));
  CHECK(f == one(c) + y(c, 1) - z(c, 1));

  VarCtx c1{1, 0, 1};
  auto g = TruncSeries::subst(c1, Q, exp, false, y(c1, 1) + h(c1));
  CHECK(g == one(c1) + y(c1, 1) + h(c1));

  CHECK_THROWS(TruncSeries::subst(c, Q, exp, false, one(c)));
}

TEST_CASE("symmetric group action permutes the y variables only") {
  VarCtx c{3, 1, 3};
  CHECK(y(c, 1).swapped_y(1) == y(c, 2));
  auto f = y(c, 1) * y(c, 3) + h(c) + z(c, 1);
  CHECK(f.permuted_y({1, 2, 3}) == f);
  // s1 then s2 sends y1 -> y2 -> y3... as the composite permutation 1->3
  auto g = y(c, 1) * y(c, 3);
  auto moved = g.swapped_y(1).swapped_y(2);
  CHECK(moved == y(c, 3) * y(c, 2));
}

TEST_CASE("demazure operators satisfy the nilCoxeter identities") {
  VarCtx c{2, 0, 4};
  // (f^{s} - f)/(y_{r+1} - y_r); on f = y1 it gives 1
  CHECK(y(c, 1).swapped_y(1) - y(c, 1) == y(c, 2) - y(c, 1));
  CHECK(y(c, 1).demazure(1) == one(c));

  CHECK((y(c, 1) * y(c, 2)).demazure(1).is_zero());
  CHECK((y(c, 1) * y(c, 1)).demazure(1) == y(c, 1) + y(c, 2));

  std::mt19937 rng(11);
  VarCtx c3{3, 0, 5};
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_series(c3, rng, false);
    auto g = random_series(c3, rng, false);
    // twisted Leibnitz
    auto lhs = (f * g).demazure(1);
    auto rhs = f.demazure(1) * g.swapped_y(1) + f * g.demazure(1);
    CHECK(TruncSeries::equal_to_degree(lhs, rhs, std::min(lhs.cert(), rhs.cert())));
    // squares vanish
    auto dd = f.demazure(1).demazure(1);
    CHECK(TruncSeries::equal_to_degree(dd, TruncSeries(c3, Q),
                                       std::min(dd.cert(), c3.cutoff - 2)));
    // braid identity
    auto b1 = f.demazure(1).demazure(2).demazure(1);
    auto b2 = f.demazure(2).demazure(1).demazure(2);
    CHECK(TruncSeries::equal_to_degree(b1, b2, c3.cutoff - 2));
  }
}

TEST_CASE("laurent polynomials divide exactly by X_{r+1} - X_r") {
  VarCtx c{2, 0, 3};
  auto X1 = XPoly::var(c, Q, 1);
  auto X2 = XPoly::var(c, Q, 2);
  auto den = X2 - X1;
  CHECK(den.exact_div(den) == XPoly::one(c, Q));
  CHECK((X2 * X2 - X1 * X1).exact_div(den) == X1 + X2);
  auto inv1 = XPoly::var(c, Q, 1, -1);
  auto inv2 = XPoly::var(c, Q, 2, -1);
  CHECK(X1 * inv2 * (X2 * inv1) == XPoly::one(c, Q));
  // antisymmetric Laurent numerators divide as well
  auto num = inv1 - inv2;
  auto quot = num.exact_div(den);
  CHECK(quot * den == num);
  CHECK_THROWS_AS(X1.exact_div(den), NotDivisible);
}

TEST_CASE("xp_eval_y realizes X_i as u_i b(y_i)") {
  VarCtx c{1, 0, 1};
  std::vector<Scalar> oneplus{Scalar(Q, 1), Scalar(Q, 1)};
  YEval ev(c, Q, {Scalar(Q, 2)}, oneplus, true);
  auto val = ev.eval(XPoly::var(c, Q, 1));
  CHECK(val == one(c).scaled(Scalar(Q, 2)) + y(c, 1).scaled(Scalar(Q, 2)));

  VarCtx c2{1, 0, 2};
  YEval ev2(c2, Q, {Scalar(Q, 1)}, oneplus, true);
  CHECK(ev2.eval(XPoly::var(c2, Q, 1, 0)) == one(c2));
  auto got = ev2.eval(XPoly::var(c2, Q, 1, -1));
  CHECK(got == one(c2) - y(c2, 1) + y(c2, 1) * y(c2, 1));

  // ring map on random pairs
  std::mt19937 rng(3);
  VarCtx c3{2, 0, 4};
  YEval ev3(c3, Q, {Scalar(Q, 2), Scalar(Q, 3)}, oneplus, true);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = XPoly::var(c3, Q, 1, e(rng)) + XPoly::var(c3, Q, 2, e(rng));
    auto g = XPoly::var(c3, Q, 1, e(rng)) - XPoly::var(c3, Q, 2, e(rng));
    auto lhs = ev3.eval(f * g);
    auto rhs = ev3.eval(f) * ev3.eval(g);
    CHECK(TruncSeries::equal_to_degree(lhs, rhs, c3.cutoff));
  }
}

TEST_CASE("ring axioms hold exactly on random triples") {
  std::mt19937 rng(23);
  VarCtx c{2, 1, 3};
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_series(c, rng, false);
    auto b = random_series(c, rng, false);
    auto d = random_series(c, rng, false);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a + b == b + a);
  }
}
