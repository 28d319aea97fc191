#include "darboux/seeds.hpp"

#include <stdexcept>

namespace darboux {

SeedSpec SeedSpec::sin_k(int k) {
  SeedSpec s{Kind::SinK, k, "sin(" + std::to_string(k) + "x)"};
  s.validate();
  return s;
}

SeedSpec SeedSpec::cos_k(int k) {
  SeedSpec s{Kind::CosK, k, "cos(" + std::to_string(k) + "x)"};
  s.validate();
  return s;
}

SeedSpec SeedSpec::power_odd(int exponent) {
  SeedSpec s{Kind::PowerOdd, exponent, "x^" + std::to_string(exponent)};
  s.validate();
  return s;
}

SeedSpec SeedSpec::k_deriv(int order) {
  SeedSpec s{Kind::KDerivColumn, order, "d^" + std::to_string(order) + "/dk^" + std::to_string(order)};
  s.validate();
  return s;
}

void SeedSpec::validate() const {
  switch (kind) {
    case Kind::SinK:
      if (k < 1) throw std::invalid_argument("SeedSpec: sin seed requires k >= 1");
      break;
    case Kind::CosK:
      if (k < 0) throw std::invalid_argument("SeedSpec: cos seed requires k >= 0");
      break;
    case Kind::PowerOdd:
      if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("SeedSpec: power seed requires an odd exponent >= 1");
      break;
    case Kind::KDerivColumn:
      if (k < 0 || k % 2 != 0)
        throw std::invalid_argument("SeedSpec: derivative column order must be even and >= 0");
      break;
  }
}

RingElem SeedSpec::realize() const {
  validate();
  switch (kind) {
    case Kind::SinK:
      return RingElem(TrigPoly::sin_kx(k));
    case Kind::CosK:
      return RingElem(TrigPoly::cos_kx(k));
    case Kind::PowerOdd:
      return RingElem(RatPoly::monomial(k));
    case Kind::KDerivColumn: {
      // (d^{2j}/dk^{2j} sin(kx)/k)|_{k=0} = (-1)^j x^{2j+1}/(2j+1)
      int j = k / 2;
      Rational coeff(j % 2 == 0 ? 1 : -1, 2 * j + 1);
      return RingElem(RatPoly::monomial(2 * j + 1, coeff));
    }
  }
  throw std::logic_error("SeedSpec: unreachable");
}

Rational SeedSpec::energy() const {
  switch (kind) {
    case Kind::SinK:
    case Kind::CosK:
      return Rational(static_cast<long>(k) * k);
    case Kind::PowerOdd:
    case Kind::KDerivColumn:
      return Rational(0);
  }
  throw std::logic_error("SeedSpec: unreachable");
}

std::string SeedSpec::text() const {
  switch (kind) {
    case Kind::SinK:
      return "sin(" + std::to_string(k) + "x)";
    case Kind::CosK:
      return "cos(" + std::to_string(k) + "x)";
    case Kind::PowerOdd:
      return "x^" + std::to_string(k);
    case Kind::KDerivColumn:
      return "dk^" + std::to_string(k);
  }
  return label;
}

}  // namespace darboux
