#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

// Dense univariate polynomial over Q. Trailing coefficient is nonzero;
// the zero polynomial has an empty coefficient vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(const Rational& constant);

  static RatPoly monomial(int degree, const Rational& coeff = Rational(1));
  static RatPoly from_coeffs(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const Rational& s);
  friend RatPoly operator*(const Rational& s, const RatPoly& a) { return a * s; }
  bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

  RatPoly derivative() const;
  Rational eval(const Rational& x) const;
  long double eval(long double x) const;

  // Exact long division; returns false (quot untouched) when the
  // remainder is nonzero or den is zero.
  static bool divide_exact(const RatPoly& num, const RatPoly& den, RatPoly* quot);

  // gcd of all coefficients, nonnegative; zero for the zero polynomial.
  Rational content() const;
  std::size_t max_coeff_bits() const;

  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies var^i
};

}  // namespace darboux
