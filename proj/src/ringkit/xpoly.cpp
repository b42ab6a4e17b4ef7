#include "ringkit/xpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ringkit {

XPoly XPoly::constant(const VarCtx& ctx, const Scalar& c) {
  XPoly p(ctx, c.field());
  if (!c.is_zero())
    p.terms_[std::vector<int>(ctx.n, 0)] = TruncSeries::constant(ctx, c);
  return p;
}

XPoly XPoly::var(const VarCtx& ctx, const Field& f, int i, int exp) {
  assert(i >= 1 && i <= ctx.n);
  XPoly p(ctx, f);
  std::vector<int> e(ctx.n, 0);
  e[i - 1] = exp;
  p.terms_[e] = TruncSeries::constant(ctx, Scalar(f, 1));
  return p;
}

XPoly XPoly::monomial(const VarCtx& ctx, const std::vector<int>& exps, const TruncSeries& coeff) {
  XPoly p(ctx, coeff.field());
  p.add_term(exps, coeff);
  return p;
}

int XPoly::cert() const {
  int c = TruncSeries::EXACT;
  for (const auto& [e, s] : terms_) c = std::min(c, s.cert());
  return c;
}

void XPoly::add_term(const std::vector<int>& exps, const TruncSeries& c) {
  assert(int(exps.size()) == ctx_.n);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XPoly XPoly::operator-() const {
  XPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (!(ctx_ == o.ctx_)) throw CtxMismatch();
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (!(ctx_ == o.ctx_)) throw CtxMismatch();
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (!(a.ctx_ == b.ctx_)) throw CtxMismatch();
  XPoly out(a.ctx_, a.field_);
  std::vector<int> e(a.ctx_.n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.ctx_.n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

XPoly XPoly::scaled(const TruncSeries& c) const {
  XPoly out(ctx_, field_);
  for (const auto& [e, s] : terms_) out.add_term(e, s * c);
  return out;
}

XPoly XPoly::scaled(const Scalar& c) const {
  XPoly out(ctx_, field_);
  for (const auto& [e, s] : terms_) out.add_term(e, s.scaled(c));
  return out;
}

XPoly XPoly::permuted(const std::vector<int>& w) const {
  assert(int(w.size()) == ctx_.n);
  XPoly out(ctx_, field_);
  std::vector<int> e(ctx_.n);
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < ctx_.n; ++i) e[w[i] - 1] = ea[i];
    out.add_term(e, c);
  }
  return out;
}

XPoly XPoly::swapped(int r) const {
  std::vector<int> w(ctx_.n);
  for (int i = 0; i < ctx_.n; ++i) w[i] = i + 1;
  std::swap(w[r - 1], w[r]);
  return permuted(w);
}

XPoly XPoly::exact_div(const XPoly& den) const {
  if (!(ctx_ == den.ctx_)) throw CtxMismatch();
  if (den.is_zero()) throw UnsupportedDenominator();

  if (den.terms_.size() == 1) {
    const auto& [de, dc] = *den.terms_.begin();
    if (!dc.is_unit()) throw UnsupportedDenominator();
    TruncSeries inv = dc.inverse();
    XPoly out(ctx_, field_);
    std::vector<int> e(ctx_.n);
    for (const auto& [ea, c] : terms_) {
      for (int i = 0; i < ctx_.n; ++i) e[i] = ea[i] - de[i];
      out.add_term(e, c * inv);
    }
    return out;
  }

  // recognize c*(X_{r+1} - X_r)
  if (den.terms_.size() == 2) {
    auto it = den.terms_.begin();
    const auto& [e1, c1] = *it;
    const auto& [e2, c2] = *std::next(it);
    int lo = -1, hi = -1;
    for (int i = 0; i < ctx_.n; ++i) {
      if (e1[i] != e2[i]) {
        if (lo < 0)
          lo = i;
        else if (hi < 0)
          hi = i;
        else
          throw UnsupportedDenominator();
      }
    }
    std::vector<int> base = e1;
    if (hi < 0 || c1 != -c2) throw UnsupportedDenominator();
    if (!(e1[lo] == e2[lo] + 1 && e2[hi] == e1[hi] + 1) &&
        !(e2[lo] == e1[lo] + 1 && e1[hi] == e2[hi] + 1))
      throw UnsupportedDenominator();
    // den = w * X^base * (X_hi - X_lo) for a unit series w
    TruncSeries w = (e2[hi] == e1[hi] + 1) ? c2 : c1;
    if (e2[hi] == e1[hi] + 1)
      base = e1, base[lo] -= 1;
    else
      base = e2, base[lo] -= 1;
    if (!w.is_unit()) throw UnsupportedDenominator();

    // shift numerator so X_hi powers are nonnegative, then divide by
    // (X_hi - X_lo) synthetically with coefficients Laurent in the rest
    int mshift = 0;
    for (const auto& [ea, c] : terms_) mshift = std::min(mshift, ea[hi]);
    int top = 0;
    std::map<int, XPoly> slices;
    for (const auto& [ea, c] : terms_) {
      std::vector<int> e = ea;
      int k = e[hi] - mshift;
      e[hi] = 0;
      top = std::max(top, k);
      auto [it2, ins] = slices.try_emplace(k, XPoly(ctx_, field_));
      it2->second.add_term(e, c);
    }
    auto slice = [&](int k) {
      auto f = slices.find(k);
      return f == slices.end() ? XPoly(ctx_, field_) : f->second;
    };
    XPoly xlo = var(ctx_, field_, lo + 1);
    std::vector<XPoly> q(std::max(top, 1), XPoly(ctx_, field_));
    XPoly carry(ctx_, field_);
    for (int k = top; k >= 1; --k) {
      q[k - 1] = slice(k) + carry;
      carry = xlo * q[k - 1];
    }
    XPoly rem = slice(0) + carry;
    if (!rem.is_zero()) throw NotDivisible();
    XPoly quot(ctx_, field_);
    for (int k = 0; k < top; ++k)
      for (const auto& [ea, c] : q[k].terms_) {
        std::vector<int> e = ea;
        e[hi] += k + mshift;
        for (int i = 0; i < ctx_.n; ++i) e[i] -= base[i];
        quot.add_term(e, c);
      }
    return quot.scaled(w.inverse());
  }
  throw UnsupportedDenominator();
}

XPoly XPoly::demazure(int r) const {
  assert(r >= 1 && r < ctx_.n);
  XPoly num = swapped(r) - *this;
  XPoly den = var(ctx_, field_, r + 1) - var(ctx_, field_, r);
  return num.exact_div(den);
}

bool XPoly::equal_to_degree(const XPoly& a, const XPoly& b, int d) {
  XPoly diff = a - b;
  for (const auto& [e, c] : diff.terms_)
    if (!TruncSeries::equal_to_degree(c, TruncSeries(c.ctx(), c.field()), d)) return false;
  return true;
}

std::string XPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]";
    for (int i = 0; i < ctx_.n; ++i) {
      if (e[i] == 0) continue;
      os << "*X" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

YEval::YEval(const VarCtx& ctx, const Field& f, const std::vector<Scalar>& labels,
             const std::vector<Scalar>& b_coeffs, bool b_exact)
    : ctx_(ctx), field_(f), labels_(labels) {
  assert(int(labels.size()) == ctx.n);
  for (int i = 1; i <= ctx_.n; ++i) {
    TruncSeries y = TruncSeries::var_y(ctx_, field_, i);
    TruncSeries b = TruncSeries::subst(ctx_, field_, b_coeffs, b_exact, y);
    TruncSeries base = b.scaled(labels_[i - 1]);
    base_.push_back(base);
    base_inv_.push_back(base.inverse());
  }
}

const TruncSeries& YEval::power(int i, int e) const {
  auto key = std::make_pair(i, e);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  TruncSeries v(ctx_, field_);
  if (e == 0)
    v = TruncSeries::constant(ctx_, Scalar(field_, 1));
  else if (e > 0)
    v = power(i, e - 1) * base_[i - 1];
  else
    v = power(i, e + 1) * base_inv_[i - 1];
  return cache_.emplace(key, std::move(v)).first->second;
}

TruncSeries YEval::eval(const XPoly& f) const {
  TruncSeries out(ctx_, field_);
  for (const auto& [e, c] : f.terms()) {
    TruncSeries t = c;
    for (int i = 0; i < ctx_.n; ++i)
      if (e[i] != 0) t = t * power(i + 1, e[i]);
    out += t;
  }
  return out;
}

}  // namespace ringkit
