#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringkit/scalar.hpp"

namespace ringkit {

// Variable context for truncated series: y_1..y_n, h, z_1..z_ell, all of
// weight 1 for the total-degree cutoff.
struct VarCtx {
  int n = 1;       // strand count
  int ell = 0;     // deformation variables z_1..z_ell
  int cutoff = 4;  // maximal retained total degree

  int nvars() const { return n + 1 + ell; }
  bool operator==(const VarCtx&) const = default;
};

class CtxMismatch : public std::runtime_error {
 public:
  CtxMismatch() : std::runtime_error("series context mismatch") {}
};

class NotDivisible : public std::runtime_error {
 public:
  NotDivisible() : std::runtime_error("exact division leaves a remainder") {}
};

class UnsupportedDenominator : public std::runtime_error {
 public:
  UnsupportedDenominator() : std::runtime_error("denominator is neither a unit nor a unit multiple of a supported linear form") {}
};

// A linear form with zero constant term, e.g. y_i - y_j + h.  Pairs of
// (variable index, coefficient); the first entry acts as division pivot.
struct LinForm {
  std::vector<std::pair<int, Scalar>> terms;
};

// Truncated multivariate formal power series over an exact field.
// Exponent vectors are packed 4 bits per variable (so cutoff <= 15 and
// nvars <= 16).  Coefficients of total degree <= cert() are exact; a
// series that is known in full (a stored polynomial, nothing dropped)
// reports cert() == EXACT.
class TruncSeries {
 public:
  static constexpr int EXACT = 1 << 20;

  TruncSeries() = default;
  TruncSeries(const VarCtx& ctx, const Field& f)
      : ctx_(ctx), field_(f), cert_(EXACT) {
    check_limits();
  }

  static TruncSeries constant(const VarCtx& ctx, const Scalar& c);
  static TruncSeries var_y(const VarCtx& ctx, const Field& f, int i);  // 1-based
  static TruncSeries var_h(const VarCtx& ctx, const Field& f);
  static TruncSeries var_z(const VarCtx& ctx, const Field& f, int j);  // 1-based

  const VarCtx& ctx() const { return ctx_; }
  const Field& field() const { return field_; }
  int cert() const { return cert_; }
  TruncSeries with_cert(int c) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const { return !constant_term().is_zero(); }
  Scalar constant_term() const;
  // coefficient of degree-zero..: generic accessor by exponent list (y exps,
  // then h, then z exps)
  Scalar coefficient(const std::vector<int>& exps) const;
  int max_degree() const;  // largest stored total degree, -1 if zero

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
  TruncSeries scaled(const Scalar& c) const;

  // Multiplicative inverse; requires a unit constant term.
  TruncSeries inverse() const;

  // Exact division.  The denominator must be a unit, or a unit multiple of
  // a linear form; in the latter case the quotient is certified one degree
  // lower and the remainder must vanish at every certified degree.
  TruncSeries exact_div(const TruncSeries& den) const;
  TruncSeries div_linear(const LinForm& L) const;

  // Composition b(arg) for a univariate series b given by coefficients
  // b[0..cutoff]; arg must have zero constant term.  b_exact marks b as a
  // complete polynomial rather than a truncation.
  static TruncSeries subst(const VarCtx& ctx, const Field& f,
                           const std::vector<Scalar>& b, bool b_exact,
                           const TruncSeries& arg);

  // Action of a permutation w of {1..n} on the y variables: y_i -> y_{w(i)}.
  TruncSeries permuted_y(const std::vector<int>& w) const;
  TruncSeries swapped_y(int r) const;  // transposition (r, r+1)

  // Demazure operator (f^{s_r} - f) / (y_{r+1} - y_r), 1 <= r <= n-1.
  TruncSeries demazure(int r) const;

  bool operator==(const TruncSeries& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }
  // true when a and b agree on every term of total degree <= d
  static bool equal_to_degree(const TruncSeries& a, const TruncSeries& b, int d);

  std::string str() const;

  // Raw term access, sorted by packed exponent key.
  const std::map<uint64_t, Scalar>& terms() const { return coeffs_; }
  void add_term(uint64_t key, const Scalar& c);

  static int key_degree(uint64_t key);
  static uint64_t pack_one(int var_index, int exp);
  std::string monomial_str(uint64_t key) const;

 private:
  void check_limits() const;
  void check_compatible(const TruncSeries& o) const;

  VarCtx ctx_;
  Field field_;
  std::map<uint64_t, Scalar> coeffs_;
  int cert_ = EXACT;
};

}  // namespace ringkit
