#include "darboux/trigpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace darboux {

namespace {

// 1 - c^2
RatPoly one_minus_c2() {
  return RatPoly::from_coeffs({Rational(1), Rational(0), Rational(-1)});
}

// Chebyshev pair (T_k, U_{k-1}) by simultaneous recurrence.
RatPoly chebyshev_t(int k) {
  RatPoly prev(Rational(1));                     // T_0
  if (k == 0) return prev;
  RatPoly cur = RatPoly::monomial(1);            // T_1
  const RatPoly two_c = RatPoly::monomial(1, Rational(2));
  for (int i = 2; i <= k; ++i) {
    RatPoly next = two_c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly chebyshev_u(int k) {
  // U_k, k >= 0
  RatPoly prev(Rational(1));                     // U_0
  if (k == 0) return prev;
  RatPoly cur = RatPoly::monomial(1, Rational(2));  // U_1
  const RatPoly two_c = RatPoly::monomial(1, Rational(2));
  for (int i = 2; i <= k; ++i) {
    RatPoly next = two_c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TrigPoly TrigPoly::sin_kx(int k) {
  if (k < 1)
    throw std::invalid_argument("TrigPoly::sin_kx: k must be >= 1 (sin(0x) is the zero function)");
  return TrigPoly(RatPoly(), chebyshev_u(k - 1));
}

TrigPoly TrigPoly::cos_kx(int k) {
  if (k < 0) throw std::invalid_argument("TrigPoly::cos_kx: k must be >= 0");
  return TrigPoly(chebyshev_t(k), RatPoly());
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  // (P1 + s Q1)(P2 + s Q2) = P1P2 + (1-c^2) Q1Q2 + s (P1Q2 + Q1P2)
  RatPoly even = a.even_ * b.even_ + one_minus_c2() * (a.odd_ * b.odd_);
  RatPoly odd = a.even_ * b.odd_ + a.odd_ * b.even_;
  return TrigPoly(std::move(even), std::move(odd));
}

TrigPoly TrigPoly::derivative() const {
  // d/dx [P(c) + s Q(c)] = c Q(c) - (1-c^2) Q'(c) - s P'(c)
  RatPoly even = RatPoly::monomial(1) * odd_ - one_minus_c2() * odd_.derivative();
  RatPoly odd = -even_.derivative();
  return TrigPoly(std::move(even), std::move(odd));
}

RatPoly TrigPoly::norm() const {
  return even_ * even_ - one_minus_c2() * (odd_ * odd_);
}

long double TrigPoly::eval(long double x) const {
  long double c = cosl(x);
  long double s = sinl(x);
  return even_.eval(c) + s * odd_.eval(c);
}

Rational TrigPoly::eval_at(const Rational& c, const Rational& s) const {
  return even_.eval(c) + s * odd_.eval(c);
}

bool TrigPoly::divide_exact(const TrigPoly& num, const TrigPoly& den, TrigPoly* quot) {
  if (den.is_zero()) return false;
  if (num.is_zero()) {
    *quot = TrigPoly();
    return true;
  }
  // num/den = num * conj(den) / norm(den), with norm(den) in Q[c]; the
  // quotient is in the ring iff both split parts divide exactly.
  RatPoly n = den.norm();
  TrigPoly raw = num * den.conjugate();
  RatPoly qe, qo;
  if (!RatPoly::divide_exact(raw.even_, n, &qe)) return false;
  if (!RatPoly::divide_exact(raw.odd_, n, &qo)) return false;
  *quot = TrigPoly(std::move(qe), std::move(qo));
  return true;
}

Rational TrigPoly::content() const {
  return darboux::gcd(even_.content(), odd_.content());
}

std::size_t TrigPoly::max_coeff_bits() const {
  return std::max(even_.max_coeff_bits(), odd_.max_coeff_bits());
}

std::string TrigPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (!even_.is_zero()) {
    os << even_.str("c");
    if (!odd_.is_zero()) os << " + s*(" << odd_.str("c") << ")";
  } else {
    os << "s*(" << odd_.str("c") << ")";
  }
  return os.str();
}

}  // namespace darboux
