#pragma once

#include <map>
#include <vector>

#include "ringkit/series.hpp"

namespace ringkit {

// Laurent polynomial in X_1..X_n whose coefficients are truncated series in
// (h, z) only; the carrier of the uncompleted Hecke-side representations.
class XPoly {
 public:
  XPoly() = default;
  XPoly(const VarCtx& ctx, const Field& f) : ctx_(ctx), field_(f) {}

  static XPoly constant(const VarCtx& ctx, const Scalar& c);
  static XPoly one(const VarCtx& ctx, const Field& f) { return constant(ctx, Scalar(f, 1)); }
  static XPoly var(const VarCtx& ctx, const Field& f, int i, int exp = 1);  // X_i^exp
  static XPoly monomial(const VarCtx& ctx, const std::vector<int>& exps, const TruncSeries& coeff);

  const VarCtx& ctx() const { return ctx_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  int cert() const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly scaled(const TruncSeries& c) const;
  XPoly scaled(const Scalar& c) const;

  // permute the X variables by w (w[i-1] is the image of i)
  XPoly permuted(const std::vector<int>& w) const;
  XPoly swapped(int r) const;

  // Exact quotient; den must be X_{r+1} - X_r (with the numerator divisible,
  // e.g. antisymmetric under s_r) or a single-term unit monomial.
  XPoly exact_div(const XPoly& den) const;
  // (f^{s_r} - f) / (X_{r+1} - X_r)
  XPoly demazure(int r) const;

  bool operator==(const XPoly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
  bool operator!=(const XPoly& o) const { return !(*this == o); }
  static bool equal_to_degree(const XPoly& a, const XPoly& b, int d);

  const std::map<std::vector<int>, TruncSeries>& terms() const { return terms_; }
  void add_term(const std::vector<int>& exps, const TruncSeries& c);

  std::string str() const;

 private:
  VarCtx ctx_;
  Field field_;
  std::map<std::vector<int>, TruncSeries> terms_;  // X exponents -> coefficient
};

// Per-label substitution engine realizing X_i := u_i * b(y_i); expands a
// Laurent polynomial into the truncated series ring.  Negative exponents use
// that b(y_i) is a unit.
class YEval {
 public:
  YEval(const VarCtx& ctx, const Field& f, const std::vector<Scalar>& labels,
        const std::vector<Scalar>& b_coeffs, bool b_exact);

  // value of (u_i b(y_i))^e
  const TruncSeries& power(int i, int e) const;  // 1-based strand index
  TruncSeries eval(const XPoly& f) const;

 private:
  VarCtx ctx_;
  Field field_;
  std::vector<Scalar> labels_;
  mutable std::map<std::pair<int, int>, TruncSeries> cache_;
  std::vector<TruncSeries> base_;      // u_i b(y_i)
  std::vector<TruncSeries> base_inv_;  // (u_i b(y_i))^{-1}
};

}  // namespace ringkit
