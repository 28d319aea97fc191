#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "darboux/bessel.hpp"
#include "darboux/chain.hpp"
#include "darboux/potentials.hpp"
#include "support/test_util.hpp"

using namespace darboux;

namespace {

double closed_j1(double z) { return std::sin(z) / (z * z) - std::cos(z) / z; }
double closed_j2(double z) {
  return (3.0 / (z * z * z) - 1.0 / z) * std::sin(z) - 3.0 * std::cos(z) / (z * z);
}
double closed_j3(double z) {
  return (15.0 / (z * z * z) - 6.0 / z) * std::sin(z) / z -
         (15.0 / (z * z) - 1.0) * std::cos(z) / z;
}

}  // namespace

TEST_CASE("confluent seed columns") {
  auto m1 = confluent_seed_columns(1);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0] == RatPoly::monomial(1));

  auto m2 = confluent_seed_columns(2);
  REQUIRE(m2.size() == 2);
  CHECK(m2[1] == RatPoly::monomial(3, Rational(-1, 3)));

  auto m3 = confluent_seed_columns(3);
  REQUIRE(m3.size() == 3);
  CHECK(m3[2] == RatPoly::monomial(5, Rational(1, 5)));
}

TEST_CASE("bessel chain potential by both routes") {
  BesselChainResult r1 = bessel_chain_potential(1);
  CHECK(r1.ok());
  CHECK(r1.potential.equals(bessel_potential(1)));  // 2/x^2

  BesselChainResult r2 = bessel_chain_potential(2);
  CHECK(r2.ok());
  CHECK(r2.potential.equals(bessel_potential(2)));  // 6/x^2

  BesselChainResult r4 = bessel_chain_potential(4);
  CHECK(r4.ok());
  CHECK(r4.potential.equals(bessel_potential(4)));  // 20/x^2

  BesselChainResult r0 = bessel_chain_potential(0);
  CHECK(r0.ok());
  CHECK(r0.potential.is_zero());
}

TEST_CASE("odd power closed form matches the engine") {
  for (int m = 1; m <= 8; ++m) {
    std::vector<RingElem> cols;
    for (int j = 0; j < m; ++j) cols.emplace_back(RatPoly::monomial(2 * j + 1));
    CHECK(wronskian(std::span<const RingElem>(cols)) ==
          RingElem(odd_power_wronskian_closed_form(m)));
  }
}

TEST_CASE("x^{m+1} is the zero-energy state of the m-th chain potential") {
  for (int m = 1; m <= 6; ++m) {
    auto e = eigen_energy(bessel_potential(m), RingElem(RatPoly::monomial(m + 1)));
    REQUIRE(e.has_value());
    CHECK(e->is_zero());
  }
}

TEST_CASE("spherical bessel oracle") {
  CHECK(std::abs(spherical_bessel(0, M_PI)) < 1e-14);
  CHECK(spherical_bessel(0, 0.0) == 1.0);
  CHECK(spherical_bessel(3, 0.0) == 0.0);
  CHECK(std::abs(spherical_bessel(1, 1.0) - closed_j1(1.0)) < 1e-14);
  for (double z : {0.5, 1.0, 5.0, 20.0, 45.0}) {
    CHECK(std::abs(spherical_bessel(2, z) - closed_j2(z)) <=
          1e-12 * (std::abs(closed_j2(z)) + 1e-15));
    CHECK(std::abs(spherical_bessel(3, z) - closed_j3(z)) <=
          1e-12 * (std::abs(closed_j3(z)) + 1e-15));
  }
}

TEST_CASE("wronskian route frozen values") {
  // m = 0 convention: plain sin(kx)/k
  CHECK(rayleigh_wronskian_state(0, 2.0, 0.7) == doctest::Approx(std::sin(1.4) / 2.0));
  // paper's first image state at k = 1, x = pi/2: (-sin x + x cos x)/x
  CHECK(rayleigh_wronskian_state(1, 1.0, M_PI / 2) == doctest::Approx(-2.0 / M_PI));
  // removable origin
  CHECK(rayleigh_wronskian_state(3, 1.0, 0.0) == 0.0);
}

TEST_CASE("operator route frozen values") {
  CHECK(rayleigh_operator_state(0, 2.0, 0.7) == doctest::Approx(std::sin(1.4) / 2.0));
  // single application of (x^-1 d/dx)/2: (x cos x - sin x)/(2x) * x^2 form
  double x = 1.3;
  double expected = x * x * (x * std::cos(x) - std::sin(x)) / (2.0 * x * x * x);
  CHECK(rayleigh_operator_state(1, 1.0, x) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("the two exact routes stay proportional pointwise") {
  for (int m : {1, 2, 3}) {
    for (double k : {0.5, 1.0, 2.7}) {
      double c0 = 0.0;
      for (int i = 0; i < 50; ++i) {
        double x = 0.2 + i * 0.15;
        double w = rayleigh_wronskian_state(m, k, x);
        double o = rayleigh_operator_state(m, k, x);
        if (std::abs(o) < 1e-12) continue;
        double ratio = w / o;
        if (c0 == 0.0) c0 = ratio;
        CHECK(ratio == doctest::Approx(c0).epsilon(1e-10));
      }
      // the constant is the 2^m mismatch between Eq-level normalizations
      CHECK(c0 == doctest::Approx(std::pow(2.0, m)).epsilon(1e-9));
    }
  }
}

TEST_CASE("states match the spherical bessel oracle up to a constant") {
  for (int m : {1, 2, 3}) {
    double k = 2.0;
    for (double x : {0.5, 1.0, 1.7, 2.9}) {
      double o = rayleigh_operator_state(m, k, x);
      double ref = x * spherical_bessel(m, k * x);
      double expect_const = std::pow(-k, m) / std::pow(2.0, m);
      CHECK(o == doctest::Approx(expect_const * ref).epsilon(1e-9));
    }
  }
  // (m=3, k=2, x=0.5): proportional to x j_3(1.0)
  double v = rayleigh_operator_state(3, 2.0, 0.5);
  double ref = 0.5 * closed_j3(1.0);
  CHECK(v / ref == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("numerator depends on x only through x^2 after the power split") {
  for (int m : {1, 2, 4}) {
    double k = 1.3;
    for (double x : {0.3, 0.7, 1.1}) {
      double qp = rayleigh_wronskian_state(m, k, x) / std::pow(x, m + 1);
      double qm = rayleigh_wronskian_state(m, k, -x) / std::pow(-x, m + 1);
      CHECK(qp == doctest::Approx(qm).epsilon(1e-10));
    }
  }
}

TEST_CASE("origin scaling exponent is m + 1") {
  for (int m : {1, 2, 5}) {
    double k = 1.0;
    double lx0 = std::log(1e-4), lx1 = std::log(1e-2);
    double ly0 = std::log(std::abs(rayleigh_operator_state(m, k, 1e-4)));
    double ly1 = std::log(std::abs(rayleigh_operator_state(m, k, 1e-2)));
    double slope = (ly1 - ly0) / (lx1 - lx0);
    CHECK(slope == doctest::Approx(m + 1).epsilon(0.05 / (m + 1)));
  }
}

TEST_CASE("five point stencil residual of the operator route") {
  const double h = 1e-3;
  for (int m : {1, 2, 4, 6}) {
    for (double k : {0.5, 1.0, 2.7}) {
      for (double x : {0.8, 1.9, 3.3}) {
        auto psi = [m, k](double t) { return rayleigh_operator_state(m, k, t); };
        double d2 = (-psi(x + 2 * h) + 16 * psi(x + h) - 30 * psi(x) + 16 * psi(x - h) -
                     psi(x - 2 * h)) /
                    (12 * h * h);
        double res = d2 + (k * k - m * (m + 1) / (x * x)) * psi(x);
        CHECK(std::abs(res) < 1e-6 * k * k * std::abs(psi(x)));
      }
    }
  }
}

TEST_CASE("csv emitter shape") {
  std::ostringstream os;
  write_bessel_comparison_csv(os, 2, 1.0, 5);
  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "x,wronskian_route,operator_route,bessel_oracle");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 5);
}
