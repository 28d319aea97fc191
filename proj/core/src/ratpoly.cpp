#include "darboux/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace darboux {

namespace {
const Rational kZero(0);
}

RatPoly::RatPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

RatPoly RatPoly::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw std::invalid_argument("RatPoly: negative degree");
  RatPoly p;
  if (coeff.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, kZero);
  p.coeffs_.back() = coeff;
  return p;
}

RatPoly RatPoly::from_coeffs(std::vector<Rational> coeffs) {
  RatPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

RatPoly RatPoly::operator-() const {
  RatPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly::from_coeffs(std::move(out));
}

RatPoly operator*(const RatPoly& a, const Rational& s) {
  if (s.is_zero()) return RatPoly();
  RatPoly r(a);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly();
  std::vector<Rational> out(coeffs_.size() - 1, kZero);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return from_coeffs(std::move(out));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

long double RatPoly::eval(long double x) const {
  long double acc = 0.0L;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x + coeffs_[i].to_long_double();
  return acc;
}

bool RatPoly::divide_exact(const RatPoly& num, const RatPoly& den, RatPoly* quot) {
  if (den.is_zero()) return false;
  if (num.is_zero()) {
    *quot = RatPoly();
    return true;
  }
  if (num.degree() < den.degree()) return false;
  std::vector<Rational> rem = num.coeffs_;
  std::vector<Rational> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rational(0));
  const Rational& lead = den.leading();
  for (int d = num.degree(); d >= den.degree();) {
    Rational factor = rem[static_cast<std::size_t>(d)] / lead;
    int shift = d - den.degree();
    q[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= den.degree(); ++i)
      rem[static_cast<std::size_t>(shift + i)] -= factor * den.coeff(i);
    while (d >= 0 && rem[static_cast<std::size_t>(d)].is_zero()) --d;
    if (d < den.degree()) break;
  }
  for (const auto& c : rem)
    if (!c.is_zero()) return false;
  *quot = from_coeffs(std::move(q));
  return true;
}

Rational RatPoly::content() const {
  Rational g(0);
  for (const auto& c : coeffs_) g = darboux::gcd(g, c);
  return g;
}

std::size_t RatPoly::max_coeff_bits() const {
  std::size_t m = 0;
  for (const auto& c : coeffs_) m = std::max(m, c.bit_size());
  return m;
}

std::string RatPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1)) && i != 0;
    if (!unit) os << a.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace darboux
