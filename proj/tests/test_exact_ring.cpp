#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "darboux/rational.hpp"
#include "darboux/ring_elem.hpp"
#include "support/test_util.hpp"

using namespace darboux;
using testutil::random_elem;
using testutil::random_rational;

TEST_CASE("rational canonical form") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational::from_string("-35/49") == Rational(-5, 7));
  CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(1, 3).to_long_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("ratpoly arithmetic and division") {
  RatPoly x3 = RatPoly::monomial(3);
  CHECK(x3.derivative() == RatPoly::monomial(2, Rational(3)));
  CHECK(RatPoly().degree() == -1);
  CHECK(RatPoly(Rational(5)).degree() == 0);

  RatPoly a = RatPoly::from_coeffs({Rational(1), Rational(2), Rational(1)});  // (x+1)^2
  RatPoly b = RatPoly::from_coeffs({Rational(1), Rational(1)});
  RatPoly q;
  REQUIRE(RatPoly::divide_exact(a, b, &q));
  CHECK(q == b);
  RatPoly c = RatPoly::from_coeffs({Rational(1), Rational(1), Rational(1)});
  CHECK_FALSE(RatPoly::divide_exact(c, b, &q));

  CHECK(RatPoly::monomial(6, Rational(16)).eval(Rational(1)) == Rational(16));
  CHECK(static_cast<double>(RatPoly::monomial(6, Rational(16)).eval(1.0L)) == 16.0);
}

TEST_CASE("trig_expand frozen examples") {
  TrigPoly s1 = TrigPoly::sin_kx(1);
  CHECK(s1.even_part().is_zero());
  CHECK(s1.odd_part() == RatPoly(Rational(1)));

  // sin 3x = 3s - 4s^3 = s (4c^2 - 1)
  TrigPoly s3 = TrigPoly::sin_kx(3);
  CHECK(s3.even_part().is_zero());
  CHECK(s3.odd_part() == RatPoly::from_coeffs({Rational(-1), Rational(0), Rational(4)}));

  TrigPoly c2 = TrigPoly::cos_kx(2);
  CHECK(c2.odd_part().is_zero());
  CHECK(c2.even_part() == RatPoly::from_coeffs({Rational(-1), Rational(0), Rational(2)}));

  CHECK_THROWS_AS(TrigPoly::sin_kx(0), std::invalid_argument);
  CHECK(TrigPoly::cos_kx(0) == TrigPoly(Rational(1)));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.01, M_PI - 0.01);
  for (int trial = 0; trial < 20; ++trial) {
    double x = xs(rng);
    CHECK(std::abs(static_cast<double>(s3.eval(x)) - std::sin(3 * x)) < 1e-12);
  }
}

TEST_CASE("trig expansion matches library sine for k <= 12") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> xs(1e-3, M_PI - 1e-3);
  for (int k = 1; k <= 12; ++k) {
    TrigPoly sk = TrigPoly::sin_kx(k);
    TrigPoly ck = TrigPoly::cos_kx(k);
    for (int trial = 0; trial < 100; ++trial) {
      double x = xs(rng);
      CHECK(std::abs(static_cast<double>(sk.eval(x)) - std::sin(k * x)) < 1e-12);
      CHECK(std::abs(static_cast<double>(ck.eval(x)) - std::cos(k * x)) < 1e-12);
    }
  }
}

TEST_CASE("ring derivative frozen examples") {
  RingElem s{TrigPoly::sin_kx(1)};
  CHECK(s.derivative() == RingElem(TrigPoly::cos_kx(1)));
  RingElem x3{RatPoly::monomial(3)};
  CHECK(x3.derivative() == RingElem(RatPoly::monomial(2, Rational(3))));
  // (sin 3x)' = 3 cos 3x
  RingElem s3{TrigPoly::sin_kx(3)};
  CHECK(s3.derivative() == RingElem(TrigPoly::cos_kx(3) * Rational(3)));
}

TEST_CASE("ring_eval bridge") {
  RingElem s{TrigPoly::sin_kx(1)};
  CHECK(std::abs(static_cast<double>(s.eval(M_PI / 2)) - 1.0) < 1e-14);
  RingElem p{RatPoly::monomial(6, Rational(16))};
  CHECK(static_cast<double>(p.eval(1.0L)) == 16.0);
  RingElem s3{TrigPoly::sin_kx(3)};
  CHECK(std::abs(static_cast<double>(s3.eval(0.7)) - std::sin(2.1)) < 1e-14);
}

TEST_CASE("derivative is linear and satisfies the product rule") {
  std::mt19937 rng(23);
  for (RingTag tag : {RingTag::Poly, RingTag::Trig}) {
    for (int trial = 0; trial < 200; ++trial) {
      RingElem f = random_elem(rng, tag);
      RingElem g = random_elem(rng, tag);
      Rational a = random_rational(rng);
      Rational b = random_rational(rng);
      CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
      CHECK((f * a + g * b).derivative() == f.derivative() * a + g.derivative() * b);
    }
  }
}

TEST_CASE("pythagoras and canonical form") {
  TrigPoly s = TrigPoly::sin_kx(1);
  TrigPoly s2 = s * s;
  CHECK(s2.odd_part().is_zero());
  CHECK(s2.even_part() == RatPoly::from_coeffs({Rational(1), Rational(0), Rational(-1)}));

  // canonical invariants survive arbitrary arithmetic: trailing
  // coefficients nonzero, re-normalization is the identity
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    TrigPoly t = testutil::random_trigpoly(rng) * testutil::random_trigpoly(rng);
    if (!t.even_part().is_zero()) CHECK_FALSE(t.even_part().leading().is_zero());
    if (!t.odd_part().is_zero()) CHECK_FALSE(t.odd_part().leading().is_zero());
    CHECK(RatPoly::from_coeffs(t.even_part().coeffs()) == t.even_part());
    CHECK(RatPoly::from_coeffs(t.odd_part().coeffs()) == t.odd_part());
  }
}

TEST_CASE("mixed ring tags rejected") {
  RingElem a{RatPoly::monomial(1)};
  RingElem b{TrigPoly::sin_kx(1)};
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("exact division in both rings") {
  std::mt19937 rng(43);
  for (RingTag tag : {RingTag::Poly, RingTag::Trig}) {
    for (int trial = 0; trial < 100; ++trial) {
      RingElem a = random_elem(rng, tag, 3);
      RingElem b = testutil::random_nonzero_elem(rng, tag, 3);
      RingElem prod = a * b;
      RingElem q;
      REQUIRE(RingElem::divide_exact(prod, b, &q));
      CHECK(q == a);
    }
  }
  // indivisible case
  RingElem q;
  CHECK_FALSE(RingElem::divide_exact(RingElem(TrigPoly::sin_kx(1)),
                                     RingElem(TrigPoly::cos_kx(1)), &q));
}

TEST_CASE("rational_ratio recovers exact scales") {
  std::mt19937 rng(53);
  for (RingTag tag : {RingTag::Poly, RingTag::Trig}) {
    for (int trial = 0; trial < 100; ++trial) {
      RingElem b = testutil::random_nonzero_elem(rng, tag);
      Rational q = testutil::random_nonzero_rational(rng);
      auto found = RingElem::rational_ratio(b * q, b);
      REQUIRE(found.has_value());
      CHECK(*found == q);
    }
  }
  RingElem s{TrigPoly::sin_kx(1)}, c{TrigPoly::cos_kx(1)};
  CHECK_FALSE(RingElem::rational_ratio(s, c).has_value());
}
