#pragma once

#include <optional>
#include <string>

#include "darboux/ring_elem.hpp"

namespace darboux {

// Quotient of two ring elements. No automatic GCD reduction; equality
// tests cross-multiply exactly. Potentials, RS functions and transformed
// eigenstates all live here.
class RatioExpr {
 public:
  RatioExpr(RingElem num, RingElem den);
  static RatioExpr from(RingElem e);
  static RatioExpr zero(RingTag tag);

  const RingElem& num() const { return num_; }
  const RingElem& den() const { return den_; }
  RingTag tag() const { return num_.tag(); }
  bool is_zero() const { return num_.is_zero(); }

  RatioExpr operator-() const;
  friend RatioExpr operator+(const RatioExpr& a, const RatioExpr& b);
  friend RatioExpr operator-(const RatioExpr& a, const RatioExpr& b);
  friend RatioExpr operator*(const RatioExpr& a, const RatioExpr& b);
  friend RatioExpr operator*(const RatioExpr& a, const Rational& r);
  friend RatioExpr operator*(const Rational& r, const RatioExpr& a) { return a * r; }

  RatioExpr derivative() const;

  // Exact equality of the represented functions (cross-multiplied).
  bool equals(const RatioExpr& o) const;

  // q when num == q * den, i.e. the expression is the constant q.
  std::optional<Rational> rational_constant() const;

  // Divides out the denominator's rational content from both sides;
  // value-preserving, keeps coefficient growth in check.
  RatioExpr content_normalized() const;

  // Repeatedly cancels the exact factor f from both sides when possible.
  RatioExpr reduced_by(const RingElem& f) const;

  long double eval(long double x) const;
  std::string str() const;

 private:
  RingElem num_, den_;
};

bool ratio_equal(const RatioExpr& a, const RatioExpr& b);

}  // namespace darboux
