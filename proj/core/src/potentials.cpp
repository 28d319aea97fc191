#include "darboux/potentials.hpp"

#include <stdexcept>

namespace darboux {

RatioExpr tdpt_potential(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("tdpt_potential: negative parameter");
  // [m(m+1) c^2 + n(n+1) (1-c^2)] / [c^2 (1-c^2)]
  Rational mm(static_cast<long>(m) * (m + 1));
  Rational nn(static_cast<long>(n) * (n + 1));
  RatPoly c2 = RatPoly::monomial(2);
  RatPoly s2 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(-1)});
  RatPoly num = c2 * mm + s2 * nn;
  RatPoly den = c2 * s2;
  return RatioExpr(RingElem(TrigPoly(num, RatPoly())), RingElem(TrigPoly(den, RatPoly())));
}

RatioExpr bessel_potential(int m) {
  if (m < 0) throw std::invalid_argument("bessel_potential: negative parameter");
  Rational mm(static_cast<long>(m) * (m + 1));
  return RatioExpr(RingElem(RatPoly(mm)), RingElem(RatPoly::monomial(2)));
}

RatioExpr zero_potential(RingTag tag) { return RatioExpr::zero(tag); }

}  // namespace darboux
