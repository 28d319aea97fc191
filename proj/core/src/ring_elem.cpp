#include "darboux/ring_elem.hpp"

#include <stdexcept>

namespace darboux {

void require_same_tag(const RingElem& a, const RingElem& b) {
  if (a.tag() != b.tag())
    throw std::invalid_argument("RingElem: mixed ring tags");
}

RingElem RingElem::zero(RingTag tag) {
  return tag == RingTag::Poly ? RingElem(RatPoly()) : RingElem(TrigPoly());
}

RingElem RingElem::one(RingTag tag) {
  return tag == RingTag::Poly ? RingElem(RatPoly(Rational(1)))
                              : RingElem(TrigPoly(Rational(1)));
}

const RatPoly& RingElem::poly() const {
  if (tag() != RingTag::Poly) throw std::logic_error("RingElem: not a polynomial element");
  return std::get<RatPoly>(v_);
}

const TrigPoly& RingElem::trig() const {
  if (tag() != RingTag::Trig) throw std::logic_error("RingElem: not a trigonometric element");
  return std::get<TrigPoly>(v_);
}

bool RingElem::is_zero() const {
  return std::visit([](const auto& e) { return e.is_zero(); }, v_);
}

bool RingElem::is_constant() const {
  if (tag() == RingTag::Poly) return poly().degree() <= 0;
  return trig().even_part().degree() <= 0 && trig().odd_part().is_zero();
}

bool RingElem::operator==(const RingElem& o) const {
  if (tag() != o.tag()) return false;
  if (tag() == RingTag::Poly) return poly() == o.poly();
  return trig() == o.trig();
}

RingElem RingElem::operator-() const {
  return std::visit([](const auto& e) { return RingElem(-e); }, v_);
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_tag(a, b);
  if (a.tag() == RingTag::Poly) return RingElem(a.poly() + b.poly());
  return RingElem(a.trig() + b.trig());
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_tag(a, b);
  if (a.tag() == RingTag::Poly) return RingElem(a.poly() - b.poly());
  return RingElem(a.trig() - b.trig());
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_tag(a, b);
  if (a.tag() == RingTag::Poly) return RingElem(a.poly() * b.poly());
  return RingElem(a.trig() * b.trig());
}

RingElem operator*(const RingElem& a, const Rational& r) {
  return std::visit([&r](const auto& e) { return RingElem(e * r); }, a.v_);
}

RingElem RingElem::derivative() const {
  return std::visit([](const auto& e) { return RingElem(e.derivative()); }, v_);
}

long double RingElem::eval(long double x) const {
  return std::visit([x](const auto& e) { return e.eval(x); }, v_);
}

bool RingElem::divide_exact(const RingElem& num, const RingElem& den, RingElem* quot) {
  require_same_tag(num, den);
  if (num.tag() == RingTag::Poly) {
    RatPoly q;
    if (!RatPoly::divide_exact(num.poly(), den.poly(), &q)) return false;
    *quot = RingElem(std::move(q));
    return true;
  }
  TrigPoly q;
  if (!TrigPoly::divide_exact(num.trig(), den.trig(), &q)) return false;
  *quot = RingElem(std::move(q));
  return true;
}

std::optional<Rational> RingElem::rational_ratio(const RingElem& a, const RingElem& b) {
  require_same_tag(a, b);
  if (b.is_zero()) return std::nullopt;
  Rational q(0);
  if (b.tag() == RingTag::Poly) {
    const auto& bc = b.poly().coeffs();
    for (std::size_t i = 0; i < bc.size(); ++i) {
      if (!bc[i].is_zero()) {
        q = a.poly().coeff(static_cast<int>(i)) / bc[i];
        break;
      }
    }
  } else {
    const RatPoly* parts_b[2] = {&b.trig().even_part(), &b.trig().odd_part()};
    const RatPoly* parts_a[2] = {&a.trig().even_part(), &a.trig().odd_part()};
    bool found = false;
    for (int p = 0; p < 2 && !found; ++p) {
      const auto& bc = parts_b[p]->coeffs();
      for (std::size_t i = 0; i < bc.size(); ++i) {
        if (!bc[i].is_zero()) {
          q = parts_a[p]->coeff(static_cast<int>(i)) / bc[i];
          found = true;
          break;
        }
      }
    }
  }
  if ((a - b * q).is_zero()) return q;
  return std::nullopt;
}

Rational RingElem::content() const {
  return std::visit([](const auto& e) { return e.content(); }, v_);
}

std::size_t RingElem::max_coeff_bits() const {
  return std::visit([](const auto& e) { return e.max_coeff_bits(); }, v_);
}

std::string RingElem::str() const {
  if (tag() == RingTag::Poly) return poly().str();
  return trig().str();
}

}  // namespace darboux
