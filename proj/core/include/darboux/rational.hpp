#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

namespace darboux {

// Arbitrary-precision rational, always reduced to lowest terms with a
// positive denominator; zero is 0/1. Thin value wrapper over GMP's
// mpq_class, whose arithmetic keeps results canonical.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  static Rational from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  // Range-safe conversion: mantissa/exponent split survives values far
  // beyond double range (Wronskian coefficients can exceed 2^1024).
  long double to_long_double() const {
    signed long ne = 0, de = 0;
    double nm = mpz_get_d_2exp(&ne, v_.get_num().get_mpz_t());
    double dm = mpz_get_d_2exp(&de, v_.get_den().get_mpz_t());
    if (nm == 0.0) return 0.0L;
    return ldexpl(static_cast<long double>(nm) / static_cast<long double>(dm),
                  static_cast<int>(ne - de));
  }
  double to_double() const { return static_cast<double>(to_long_double()); }

  std::string str() const { return v_.get_str(); }

  // Larger of the numerator/denominator bit lengths.
  std::size_t bit_size() const {
    std::size_t nb = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    return nb > db ? nb : db;
  }

  const mpq_class& raw() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

inline Rational gcd(const Rational& a, const Rational& b) {
  // gcd over Q: gcd of numerators over lcm of denominators; used for
  // content extraction, always nonnegative.
  mpz_class gn, ld;
  mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(ld.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  if (ld == 0) return Rational(0);
  mpq_class q(gn, ld);
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace darboux
