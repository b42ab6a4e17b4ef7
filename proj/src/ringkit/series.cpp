#include "ringkit/series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ringkit {

void TruncSeries::check_limits() const {
  if (ctx_.nvars() > 16 || ctx_.cutoff > 15)
    throw std::invalid_argument("series limits: at most 16 variables and cutoff 15");
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (!(ctx_ == o.ctx_)) throw CtxMismatch();
  assert(field_ == o.field_);
}

int TruncSeries::key_degree(uint64_t key) {
  int d = 0;
  while (key) {
    d += int(key & 0xf);
    key >>= 4;
  }
  return d;
}

uint64_t TruncSeries::pack_one(int var_index, int exp) {
  return uint64_t(exp) << (4 * var_index);
}

TruncSeries TruncSeries::constant(const VarCtx& ctx, const Scalar& c) {
  TruncSeries s(ctx, c.field());
  if (!c.is_zero()) s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::var_y(const VarCtx& ctx, const Field& f, int i) {
  assert(i >= 1 && i <= ctx.n);
  TruncSeries s(ctx, f);
  if (ctx.cutoff >= 1) s.coeffs_[pack_one(i - 1, 1)] = Scalar(f, 1);
  return s;
}

TruncSeries TruncSeries::var_h(const VarCtx& ctx, const Field& f) {
  TruncSeries s(ctx, f);
  if (ctx.cutoff >= 1) s.coeffs_[pack_one(ctx.n, 1)] = Scalar(f, 1);
  return s;
}

TruncSeries TruncSeries::var_z(const VarCtx& ctx, const Field& f, int j) {
  assert(j >= 1 && j <= ctx.ell);
  TruncSeries s(ctx, f);
  if (ctx.cutoff >= 1) s.coeffs_[pack_one(ctx.n + j, 1)] = Scalar(f, 1);
  return s;
}

TruncSeries TruncSeries::with_cert(int c) const {
  TruncSeries s = *this;
  s.cert_ = c;
  return s;
}

Scalar TruncSeries::constant_term() const {
  auto it = coeffs_.find(0);
  return it == coeffs_.end() ? Scalar(field_, 0) : it->second;
}

Scalar TruncSeries::coefficient(const std::vector<int>& exps) const {
  assert(int(exps.size()) == ctx_.nvars());
  uint64_t key = 0;
  for (size_t i = 0; i < exps.size(); ++i) key |= pack_one(int(i), exps[i]);
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? Scalar(field_, 0) : it->second;
}

int TruncSeries::max_degree() const {
  int d = -1;
  for (const auto& [k, c] : coeffs_) d = std::max(d, key_degree(k));
  return d;
}

void TruncSeries::add_term(uint64_t key, const Scalar& c) {
  if (c.is_zero() || key_degree(key) > ctx_.cutoff) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& [k, c] : s.coeffs_) c = -c;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  cert_ = std::min(cert_, o.cert_);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
  cert_ = std::min(cert_, o.cert_);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b);
  TruncSeries out(a.ctx_, a.field_);
  bool truncated = false;
  for (const auto& [ka, ca] : a.coeffs_) {
    int da = TruncSeries::key_degree(ka);
    for (const auto& [kb, cb] : b.coeffs_) {
      if (da + TruncSeries::key_degree(kb) > a.ctx_.cutoff) {
        truncated = true;
        continue;
      }
      // nibble-wise addition never carries: both degrees are <= cutoff <= 15
      out.add_term(ka + kb, ca * cb);
    }
  }
  out.cert_ = std::min(a.cert_, b.cert_);
  if (truncated) out.cert_ = std::min(out.cert_, a.ctx_.cutoff);
  return out;
}

TruncSeries TruncSeries::scaled(const Scalar& c) const {
  TruncSeries out(ctx_, field_);
  out.cert_ = cert_;
  if (c.is_zero()) return out;
  out.coeffs_ = coeffs_;
  for (auto& [k, v] : out.coeffs_) v *= c;
  return out;
}

TruncSeries TruncSeries::inverse() const {
  Scalar c0 = constant_term();
  if (c0.is_zero()) throw NotAUnit();
  TruncSeries x = constant(ctx_, c0.inverse());
  TruncSeries two = constant(ctx_, Scalar(field_, 2));
  // Newton iteration x <- x(2 - a x), doubling correct degrees each pass
  for (int correct = 0; correct < ctx_.cutoff; correct = 2 * correct + 1)
    x = x * (two - (*this) * x);
  x.cert_ = std::min(cert_, ctx_.cutoff);
  return x;
}

TruncSeries TruncSeries::div_linear(const LinForm& L) const {
  if (L.terms.empty()) throw UnsupportedDenominator();
  const auto& [pivot, pivot_coeff] = L.terms.front();
  if (pivot_coeff.is_zero()) throw UnsupportedDenominator();

  // L = c*(x_p - M); synthetic division of *this by (x_p - M), then scale.
  TruncSeries M(ctx_, field_);
  for (size_t t = 1; t < L.terms.size(); ++t) {
    auto [v, c] = L.terms[t];
    M.add_term(pack_one(v, 1), -(c * pivot_coeff.inverse()));
  }

  // split into coefficients of powers of the pivot variable
  int top = 0;
  std::vector<TruncSeries> a(ctx_.cutoff + 1, TruncSeries(ctx_, field_));
  for (const auto& [k, c] : coeffs_) {
    int e = int((k >> (4 * pivot)) & 0xf);
    a[e].add_term(k - pack_one(pivot, e), c);
    top = std::max(top, e);
  }

  std::vector<TruncSeries> q(ctx_.cutoff + 1, TruncSeries(ctx_, field_));
  TruncSeries carry(ctx_, field_);
  for (int k = top; k >= 1; --k) {
    q[k - 1] = a[k] + carry;
    carry = M * q[k - 1];
  }
  TruncSeries quot(ctx_, field_);
  for (int k = 0; k < top; ++k)
    for (const auto& [kk, c] : q[k].coeffs_) quot.add_term(kk + pack_one(pivot, k), c);
  quot = quot.scaled(pivot_coeff.inverse());

  // remainder check at every certified degree of the numerator
  TruncSeries lin(ctx_, field_);
  for (const auto& [v, c] : L.terms) lin.add_term(pack_one(v, 1), c);
  TruncSeries rem = *this - quot * lin;
  int check_to = std::min(cert_, ctx_.cutoff);
  for (const auto& [k, c] : rem.coeffs_)
    if (key_degree(k) <= check_to) throw NotDivisible();

  quot.cert_ = cert_ >= EXACT ? EXACT : cert_ - 1;
  return quot;
}

TruncSeries TruncSeries::exact_div(const TruncSeries& den) const {
  check_compatible(den);
  if (den.is_zero()) throw UnsupportedDenominator();
  if (den.is_unit()) return *this * den.inverse();
  // unit multiple of a linear form: den = lin * w with w a unit
  LinForm lin;
  for (const auto& [k, c] : den.coeffs_) {
    if (key_degree(k) != 1) continue;
    int var = 0;
    for (uint64_t kk = k; !(kk & 0xf); kk >>= 4) ++var;
    lin.terms.emplace_back(var, c);
  }
  if (lin.terms.empty()) throw UnsupportedDenominator();
  TruncSeries linear(ctx_, field_);
  for (const auto& [v, c] : lin.terms) linear.add_term(pack_one(v, 1), c);
  TruncSeries w = den.div_linear(lin);  // throws NotDivisible if den isn't lin*unit
  if (!w.is_unit()) throw UnsupportedDenominator();
  return div_linear(lin) * w.inverse();
}

TruncSeries TruncSeries::subst(const VarCtx& ctx, const Field& f,
                               const std::vector<Scalar>& b, bool b_exact,
                               const TruncSeries& arg) {
  assert(arg.ctx() == ctx);
  if (!arg.constant_term().is_zero())
    throw std::invalid_argument("subst: argument must have zero constant term");
  int top = std::min<int>(int(b.size()) - 1, ctx.cutoff);
  TruncSeries out = constant(ctx, top >= 0 ? b[top] : Scalar(f, 0));
  for (int k = top - 1; k >= 0; --k) {
    out = out * arg;
    out += constant(ctx, b[k]);
  }
  int cert = std::min(arg.cert_, b_exact ? EXACT : ctx.cutoff);
  return out.with_cert(cert);
}

TruncSeries TruncSeries::permuted_y(const std::vector<int>& w) const {
  assert(int(w.size()) == ctx_.n);
  TruncSeries out(ctx_, field_);
  out.cert_ = cert_;
  for (const auto& [k, c] : coeffs_) {
    uint64_t nk = k & ~((uint64_t(1) << (4 * ctx_.n)) - 1);  // keep h, z part
    for (int i = 0; i < ctx_.n; ++i) {
      int e = int((k >> (4 * i)) & 0xf);
      nk |= pack_one(w[i] - 1, e);
    }
    out.coeffs_[nk] = c;
  }
  return out;
}

TruncSeries TruncSeries::swapped_y(int r) const {
  assert(r >= 1 && r < ctx_.n + 1);
  std::vector<int> w(ctx_.n);
  for (int i = 0; i < ctx_.n; ++i) w[i] = i + 1;
  std::swap(w[r - 1], w[r]);
  return permuted_y(w);
}

TruncSeries TruncSeries::demazure(int r) const {
  assert(r >= 1 && r <= ctx_.n - 1);
  TruncSeries num = swapped_y(r) - *this;
  LinForm L;
  L.terms.emplace_back(r, Scalar(field_, 1));        // y_{r+1}
  L.terms.emplace_back(r - 1, Scalar(field_, -1));   // -y_r
  return num.div_linear(L);
}

bool TruncSeries::equal_to_degree(const TruncSeries& a, const TruncSeries& b, int d) {
  TruncSeries diff = a - b;
  for (const auto& [k, c] : diff.coeffs_)
    if (key_degree(k) <= d) return false;
  return true;
}

std::string TruncSeries::monomial_str(uint64_t key) const {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < ctx_.nvars(); ++v) {
    int e = int((key >> (4 * v)) & 0xf);
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    if (v < ctx_.n)
      os << "y" << (v + 1);
    else if (v == ctx_.n)
      os << "h";
    else
      os << "z" << (v - ctx_.n);
    if (e > 1) os << "^" << e;
  }
  return first ? "1" : os.str();
}

std::string TruncSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k != 0) os << "*" << monomial_str(k);
  }
  return os.str();
}

}  // namespace ringkit
