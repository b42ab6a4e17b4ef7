#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringkit {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Coefficient field: the rationals, or a prime field F_p.
struct Field {
  // 0 means Q; otherwise a prime p.
  int64_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field prime(int64_t p);
};

class NotAUnit : public std::runtime_error {
 public:
  NotAUnit() : std::runtime_error("inversion of a non-unit") {}
};

// An exact field element.  Arithmetic between scalars of different fields
// is a programming error and asserts.
class Scalar {
 public:
  Scalar() : p_(0), q_(0), r_(0) {}
  Scalar(const Field& f, long v) : p_(f.characteristic), q_(0), r_(0) { assign_int(v); }
  static Scalar from_rational(const Field& f, const Rational& v);

  const Field field() const { return Field{p_}; }

  bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  // Throws NotAUnit on zero.
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order used for map keys and deterministic output.
  bool operator<(const Scalar& o) const;

  // "a/b" or "a" for rationals, a decimal residue for F_p.
  std::string str() const;
  static Scalar parse(const Field& f, const std::string& s);

  const Rational& rat() const { return q_; }
  int64_t residue() const { return r_; }

 private:
  void assign_int(long v);
  int64_t p_;    // 0 = rational
  Rational q_;   // value when p_ == 0
  int64_t r_;    // residue in [0, p) when p_ > 0
};

}  // namespace ringkit
