#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "darboux/ratpoly.hpp"
#include "darboux/trigpoly.hpp"

namespace darboux {

enum class RingTag { Poly, Trig };

// Tagged union over the two coefficient rings in play: Q[x] for
// polynomial seed chains and Q[c,s]/(s^2+c^2-1) for trigonometric ones.
// Binary operations require matching tags and throw otherwise; every
// Wronskian computation works over a single tag.
class RingElem {
 public:
  RingElem() : v_(RatPoly()) {}
  RingElem(RatPoly p) : v_(std::move(p)) {}   // NOLINT(google-explicit-constructor)
  RingElem(TrigPoly t) : v_(std::move(t)) {}  // NOLINT(google-explicit-constructor)

  static RingElem zero(RingTag tag);
  static RingElem one(RingTag tag);

  RingTag tag() const { return std::holds_alternative<RatPoly>(v_) ? RingTag::Poly : RingTag::Trig; }
  const RatPoly& poly() const;
  const TrigPoly& trig() const;

  bool is_zero() const;
  bool is_constant() const;
  bool operator==(const RingElem& o) const;

  RingElem operator-() const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const Rational& r);
  friend RingElem operator*(const Rational& r, const RingElem& a) { return a * r; }

  RingElem derivative() const;
  long double eval(long double x) const;

  static bool divide_exact(const RingElem& num, const RingElem& den, RingElem* quot);

  // q with a == q*b when a is an exact rational multiple of b; nullopt
  // otherwise (including b == 0).
  static std::optional<Rational> rational_ratio(const RingElem& a, const RingElem& b);

  Rational content() const;
  std::size_t max_coeff_bits() const;
  std::string str() const;

 private:
  std::variant<RatPoly, TrigPoly> v_;
};

void require_same_tag(const RingElem& a, const RingElem& b);

}  // namespace darboux
