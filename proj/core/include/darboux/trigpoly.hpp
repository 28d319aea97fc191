#pragma once

#include <cstddef>
#include <string>

#include "darboux/ratpoly.hpp"

namespace darboux {

// Element of Q[c,s]/(s^2 + c^2 - 1) in the canonical split form
//
//   P(c) + s*Q(c)      with c = cos x, s = sin x.
//
// The ideal is principal in s, so every element reduces to this form and
// equality is component-wise. Multiplication folds s^2 back to 1 - c^2;
// d/dx uses dc/dx = -s, ds/dx = c. The ring is an integral domain
// (s^2 + c^2 - 1 is irreducible over Q), and exact division works through
// the conjugate P - s*Q and the norm P^2 - (1 - c^2) Q^2 in Q[c].
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(RatPoly even, RatPoly odd) : even_(std::move(even)), odd_(std::move(odd)) {}
  explicit TrigPoly(const Rational& constant) : even_(RatPoly(constant)) {}

  // sin(kx) = s*U_{k-1}(c), cos(kx) = T_k(c), via Chebyshev recurrences.
  static TrigPoly sin_kx(int k);
  static TrigPoly cos_kx(int k);

  const RatPoly& even_part() const { return even_; }
  const RatPoly& odd_part() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool operator==(const TrigPoly& o) const { return even_ == o.even_ && odd_ == o.odd_; }

  TrigPoly operator-() const { return TrigPoly(-even_, -odd_); }
  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const Rational& r) {
    return TrigPoly(a.even_ * r, a.odd_ * r);
  }
  friend TrigPoly operator*(const Rational& r, const TrigPoly& a) { return a * r; }

  TrigPoly derivative() const;
  TrigPoly conjugate() const { return TrigPoly(even_, -odd_); }
  RatPoly norm() const;

  long double eval(long double x) const;
  // Exact evaluation at a rational point of the circle; the caller is
  // responsible for c^2 + s^2 = 1 (e.g. (0,1) for x = pi/2, (3/5,4/5)).
  Rational eval_at(const Rational& c, const Rational& s) const;

  static bool divide_exact(const TrigPoly& num, const TrigPoly& den, TrigPoly* quot);

  Rational content() const;
  std::size_t max_coeff_bits() const;
  std::string str() const;

 private:
  RatPoly even_;  // polynomial in c
  RatPoly odd_;   // polynomial in c, multiplied by s
};

}  // namespace darboux
