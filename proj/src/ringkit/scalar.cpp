#include "ringkit/scalar.hpp"

#include <cassert>

namespace ringkit {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t mod_pos(int64_t v, int64_t p) {
  int64_t r = v % p;
  return r < 0 ? r + p : r;
}

int64_t mod_inverse(int64_t a, int64_t p) {
  if (a == 0) throw NotAUnit();
  // extended Euclid
  int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int64_t quot = r / new_r;
    int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  assert(r == 1);
  return mod_pos(t, p);
}

}  // namespace

Field Field::prime(int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  return Field{p};
}

void Scalar::assign_int(long v) {
  if (p_ == 0)
    q_ = v;
  else
    r_ = mod_pos(v, p_);
}

Scalar Scalar::from_rational(const Field& f, const Rational& v) {
  Scalar s;
  s.p_ = f.characteristic;
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    BigInt num = numerator(v) % f.characteristic;
    BigInt den = denominator(v) % f.characteristic;
    int64_t n = mod_pos(num.convert_to<int64_t>(), f.characteristic);
    int64_t d = mod_pos(den.convert_to<int64_t>(), f.characteristic);
    if (d == 0) throw std::invalid_argument("denominator vanishes in F_p");
    s.r_ = mod_pos(n * mod_inverse(d, f.characteristic), f.characteristic);
  }
  return s;
}

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -s.q_;
  else
    s.r_ = s.r_ == 0 ? 0 : p_ - s.r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  assert(p_ == o.p_);
  if (p_ == 0)
    q_ += o.q_;
  else
    r_ = mod_pos(r_ + o.r_, p_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  assert(p_ == o.p_);
  if (p_ == 0)
    q_ -= o.q_;
  else
    r_ = mod_pos(r_ - o.r_, p_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  assert(p_ == o.p_);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = mod_pos(r_ * o.r_, p_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotAUnit();
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inverse(r_, p_);
  return s;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  Scalar acc(field(), 1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  assert(p_ == o.p_);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
  assert(p_ == o.p_);
  return p_ == 0 ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return from_rational(f, Rational(BigInt(s)));
  BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
  return from_rational(f, Rational(num, den));
}

}  // namespace ringkit
