#include "darboux/ratio_expr.hpp"

#include <stdexcept>

namespace darboux {

RatioExpr::RatioExpr(RingElem num, RingElem den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_tag(num_, den_);
  if (den_.is_zero()) throw std::invalid_argument("RatioExpr: zero denominator");
}

RatioExpr RatioExpr::from(RingElem e) {
  RingTag t = e.tag();
  return RatioExpr(std::move(e), RingElem::one(t));
}

RatioExpr RatioExpr::zero(RingTag tag) {
  return RatioExpr(RingElem::zero(tag), RingElem::one(tag));
}

RatioExpr RatioExpr::operator-() const { return RatioExpr(-num_, den_); }

RatioExpr operator+(const RatioExpr& a, const RatioExpr& b) {
  return RatioExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatioExpr operator-(const RatioExpr& a, const RatioExpr& b) {
  return RatioExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatioExpr operator*(const RatioExpr& a, const RatioExpr& b) {
  return RatioExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RatioExpr operator*(const RatioExpr& a, const Rational& r) {
  return RatioExpr(a.num_ * r, a.den_);
}

RatioExpr RatioExpr::derivative() const {
  return RatioExpr(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

bool RatioExpr::equals(const RatioExpr& o) const {
  require_same_tag(num_, o.num_);
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::optional<Rational> RatioExpr::rational_constant() const {
  return RingElem::rational_ratio(num_, den_);
}

RatioExpr RatioExpr::content_normalized() const {
  Rational c = den_.content();
  if (c.is_zero() || c == Rational(1)) return *this;
  Rational inv = Rational(1) / c;
  return RatioExpr(num_ * inv, den_ * inv);
}

RatioExpr RatioExpr::reduced_by(const RingElem& f) const {
  if (f.is_zero() || f.is_constant()) return *this;  // units cancel to nothing
  RatioExpr r = *this;
  RingElem qn = r.num_, qd = r.den_;
  while (RingElem::divide_exact(r.num_, f, &qn) && RingElem::divide_exact(r.den_, f, &qd)) {
    r = RatioExpr(qn, qd);
  }
  return r;
}

long double RatioExpr::eval(long double x) const {
  return num_.eval(x) / den_.eval(x);
}

std::string RatioExpr::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

bool ratio_equal(const RatioExpr& a, const RatioExpr& b) { return a.equals(b); }

}  // namespace darboux
