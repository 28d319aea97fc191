#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "darboux/chain.hpp"
#include "darboux/potentials.hpp"
#include "support/test_util.hpp"

using namespace darboux;
using testutil::trig_monomial;

TEST_CASE("rs function") {
  // w_0 = -cot x for the sin x seed
  RatioExpr w0 = rs_function(RingElem(TrigPoly::sin_kx(1)));
  CHECK(w0.equals(RatioExpr(RingElem(TrigPoly::cos_kx(1) * Rational(-1)),
                            RingElem(TrigPoly::sin_kx(1)))));
  RatioExpr wx = rs_function(RingElem(RatPoly::monomial(1)));
  CHECK(wx.equals(RatioExpr(RingElem(RatPoly(Rational(-1))), RingElem(RatPoly::monomial(1)))));
  RatioExpr wx2 = rs_function(RingElem(RatPoly::monomial(2)));
  CHECK(wx2.equals(RatioExpr(RingElem(RatPoly(Rational(-2))), RingElem(RatPoly::monomial(1)))));
  CHECK_THROWS_AS(rs_function(RingElem(RatPoly())), std::invalid_argument);
}

TEST_CASE("eigen energy from the exact residual") {
  RatioExpr zero = zero_potential(RingTag::Trig);
  for (int k = 1; k <= 6; ++k) {
    auto e = eigen_energy(zero, RingElem(TrigPoly::sin_kx(k)));
    REQUIRE(e.has_value());
    CHECK(*e == Rational(static_cast<long>(k) * k));
  }
  // x^3 is not a zero-potential eigenfunction
  CHECK_FALSE(eigen_energy(zero_potential(RingTag::Poly), RingElem(RatPoly::monomial(3))).has_value());
  // ground state of V(m,n) sits at (m+n+2)^2
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= m; ++n) {
      auto e = eigen_energy(tdpt_potential(m, n), RingElem(trig_monomial(m + 1, n + 1)));
      REQUIRE(e.has_value());
      CHECK(*e == Rational(static_cast<long>(m + n + 2) * (m + n + 2)));
    }
}

TEST_CASE("single Darboux step from the free particle") {
  RatioExpr zero = zero_potential(RingTag::Trig);
  RingElem seed{TrigPoly::sin_kx(1)};

  SUBCASE("image of sin((l+1)x) is (l+1)cos((l+1)x) - cot x sin((l+1)x)") {
    for (int l = 1; l <= 4; ++l) {
      DbtStepResult r = dbt_apply(zero, seed, RingElem(TrigPoly::sin_kx(l + 1)));
      // s * (l+1) cos((l+1)x) - c * sin((l+1)x), over s
      TrigPoly num = TrigPoly::sin_kx(1) * TrigPoly::cos_kx(l + 1) * Rational(l + 1) -
                     TrigPoly::cos_kx(1) * TrigPoly::sin_kx(l + 1);
      CHECK(r.transformed_state.equals(RatioExpr(RingElem(num), RingElem(TrigPoly::sin_kx(1)))));
      CHECK(r.energy_shift_used == Rational(static_cast<long>(l + 1) * (l + 1) - 1));
      // new potential is the m=1 trigonometric barrier
      CHECK(r.new_potential.equals(tdpt_potential(1, 0)));
    }
  }

  SUBCASE("first two bound states of the barrier") {
    DbtStepResult r1 = dbt_apply(zero, seed, RingElem(TrigPoly::sin_kx(2)));
    auto q1 = RingElem::rational_ratio(r1.transformed_state.num(),
                                       RingElem(trig_monomial(2, 0)) * r1.transformed_state.den());
    REQUIRE(q1.has_value());  // transformed state is proportional to sin^2 x
    CHECK(*q1 == Rational(-2));

    DbtStepResult r2 = dbt_apply(zero, seed, RingElem(TrigPoly::sin_kx(3)));
    auto q2 = RingElem::rational_ratio(r2.transformed_state.num(),
                                       RingElem(trig_monomial(2, 1)) * r2.transformed_state.den());
    REQUIRE(q2.has_value());  // proportional to sin^2 x cos x
    CHECK(*q2 == Rational(-8));
  }

  SUBCASE("error paths") {
    CHECK_THROWS_WITH_AS(dbt_apply(zero, seed, RingElem(TrigPoly::sin_kx(1) * Rational(3))),
                         "dbt_apply: confluent step (equal energies) requires the confluent "
                         "Bessel machinery",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        dbt_apply(zero_potential(RingTag::Poly), RingElem(RatPoly::monomial(1)),
                  RingElem(RatPoly::monomial(3))),
        "dbt_apply: seed/target not eigenfunctions", std::invalid_argument);
  }
}

TEST_CASE("seed selection rule") {
  ChainSpec c10 = tdpt_seed_chain(1, 0);
  REQUIRE(c10.seeds.size() == 1);
  CHECK(c10.seeds[0] == SeedSpec::sin_k(1));
  CHECK(c10.target.hi == doctest::Approx(M_PI));

  ChainSpec c31 = tdpt_seed_chain(3, 1);
  REQUIRE(c31.seeds.size() == 3);
  CHECK(c31.seeds[0] == SeedSpec::sin_k(1));
  CHECK(c31.seeds[1] == SeedSpec::sin_k(2));
  CHECK(c31.seeds[2] == SeedSpec::sin_k(4));
  CHECK(c31.target.hi == doctest::Approx(M_PI / 2));

  ChainSpec c22 = tdpt_seed_chain(2, 2);
  REQUIRE(c22.seeds.size() == 2);
  CHECK(c22.seeds[0] == SeedSpec::sin_k(2));
  CHECK(c22.seeds[1] == SeedSpec::sin_k(4));
  CHECK(c22.degenerate_equal_params);

  CHECK_THROWS_AS(tdpt_seed_chain(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(tdpt_seed_chain(0, 0), std::invalid_argument);
}

TEST_CASE("wronskian representation certificates") {
  WronskianRepCertificate c10 = verify_tdpt_wronskian(1, 0);
  CHECK(c10.identity_verified);
  CHECK(c10.wronskian_canonical == "s*(1)");

  WronskianRepCertificate c21 = verify_tdpt_wronskian(2, 1);
  CHECK(c21.identity_verified);
  CHECK(c21.seeds == std::vector<std::string>{"sin(1x)", "sin(3x)"});

  WronskianRepCertificate c53 = verify_tdpt_wronskian(5, 3);
  CHECK(c53.identity_verified);
  CHECK(c53.seeds == std::vector<std::string>{"sin(1x)", "sin(2x)", "sin(4x)", "sin(6x)", "sin(8x)"});

  WronskianRepCertificate c22 = verify_tdpt_wronskian(2, 2);
  CHECK(c22.identity_verified);
  CHECK(c22.flags == std::vector<std::string>{"degenerate-equal-parameters"});
}

TEST_CASE("gm chain wronskian matches a floating oracle") {
  // (5,3): exact Wronskian against an FD-differentiated floating
  // determinant at 50 points.
  ChainSpec chain = tdpt_seed_chain(5, 3);
  std::vector<RingElem> cols;
  std::vector<std::function<long double(long double)>> fcols;
  int kmax = 1;
  for (const auto& s : chain.seeds) {
    cols.push_back(s.realize());
    int k = s.k;
    kmax = std::max(kmax, k);
    fcols.emplace_back([k](long double x) { return sinl(k * x); });
  }
  RingElem w = wronskian(std::span<const RingElem>(cols));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> xs(0.4, 2.6);
  long double h = 0.035L / kmax;
  for (int trial = 0; trial < 50; ++trial) {
    long double x = xs(rng);
    long double exact = w.eval(x);
    long double numeric = testutil::numeric_wronskian(fcols, x, h);
    CHECK(fabsl(numeric - exact) <= 1e-6L * (fabsl(exact) + 1e-30L));
  }
}

TEST_CASE("chain order only flips the wronskian sign") {
  ChainSpec chain = tdpt_seed_chain(3, 2);
  std::vector<RingElem> cols;
  for (const auto& s : chain.seeds) cols.push_back(s.realize());
  RingElem w = wronskian(std::span<const RingElem>(cols));
  std::mt19937 rng(61);
  std::vector<RingElem> perm = cols;
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    RingElem wp = wronskian(std::span<const RingElem>(perm));
    CHECK((wp == w || wp == -w));
    CHECK(potential_from_wronskian(wp).equals(potential_from_wronskian(w)));
  }
}

TEST_CASE("crum route equals the stepwise route") {
  SUBCASE("one step: target sin 2x lands on sin^2 x") {
    ChainSpec chain = tdpt_seed_chain(1, 0);
    CrumStepwiseComparison r = verify_crum_vs_stepwise(chain, SeedSpec::sin_k(2));
    CHECK(r.ok());
    CHECK(r.scale == Rational(1));  // one step: routes coincide exactly
  }
  SUBCASE("two steps: ground state of V(2,0) is sin^3 x") {
    ChainSpec chain = tdpt_seed_chain(2, 0);
    CrumStepwiseComparison r = verify_crum_vs_stepwise(chain, SeedSpec::sin_k(3));
    CHECK(r.ok());
    // and the Wronskian-route state itself is proportional to sin^3 x
    std::vector<RingElem> cols{RingElem(TrigPoly::sin_kx(1)), RingElem(TrigPoly::sin_kx(2)),
                               RingElem(TrigPoly::sin_kx(3))};
    RingElem w_full = wronskian(std::span<const RingElem>(cols));
    RingElem w_seeds = wronskian({cols[0], cols[1]});
    auto q = RingElem::rational_ratio(w_full, RingElem(trig_monomial(3, 0)) * w_seeds);
    CHECK(q.has_value());
  }
  SUBCASE("three steps with a gap seed list") {
    ChainSpec chain = tdpt_seed_chain(3, 1);  // sin x, sin 2x, sin 4x
    CrumStepwiseComparison r = verify_crum_vs_stepwise(chain, SeedSpec::sin_k(6));
    CHECK(r.ok());
    CHECK_FALSE(r.scale.is_zero());
  }
  SUBCASE("confluent and colliding targets are rejected") {
    ChainSpec chain = tdpt_seed_chain(2, 0);
    CHECK_THROWS_AS(verify_crum_vs_stepwise(chain, SeedSpec::sin_k(2)), std::invalid_argument);
    ChainSpec twice;
    twice.seeds = {SeedSpec::sin_k(1), SeedSpec::sin_k(1)};
    CHECK_THROWS_AS(verify_crum_vs_stepwise(twice, SeedSpec::sin_k(3)), std::invalid_argument);
  }
}

TEST_CASE("shape invariance certificates") {
  ShapeInvarianceCertificate c10 = verify_shape_invariance(1, 0);
  CHECK(c10.ok());
  CHECK(c10.partner_m == 2);
  CHECK(c10.partner_n == 0);
  CHECK(c10.shift_constant == Rational(0));
  CHECK(c10.ground_energy == Rational(4));

  ShapeInvarianceCertificate c11 = verify_shape_invariance(1, 1);
  CHECK(c11.ok());
  CHECK(c11.partner_m == 2);
  CHECK(c11.partner_n == 2);
  CHECK(c11.ground_energy == Rational(16));

  ShapeInvarianceCertificate c32 = verify_shape_invariance(3, 2);
  CHECK(c32.ok());
  CHECK(c32.ground_energy == Rational(49));
  CHECK(c32.partner_ground_energy == Rational(81));

  ShapeInvarianceCertificate c02 = verify_shape_invariance(0, 2);
  CHECK(c02.ok());
  CHECK(c02.partner_m == 0);
  CHECK(c02.partner_n == 3);

  CHECK_THROWS_AS(verify_shape_invariance(0, 0), std::invalid_argument);
}

TEST_CASE("filtered spectrum predictions") {
  SUBCASE("(1,0): every level above the seed survives") {
    auto levels = predict_filtered_spectrum(tdpt_seed_chain(1, 0), 6);
    REQUIRE(levels.size() == 5);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      CHECK(levels[i].k == static_cast<int>(i) + 2);
      CHECK(levels[i].energy == (static_cast<long>(i) + 2) * (static_cast<long>(i) + 2));
    }
  }
  SUBCASE("(1,1): the sin 2x step is singular at pi/2, even levels survive") {
    auto levels = predict_filtered_spectrum(tdpt_seed_chain(1, 1), 8);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].energy == 16);
    CHECK(levels[1].energy == 36);
    CHECK(levels[2].energy == 64);
  }
  SUBCASE("(2,1): survivors are the odd levels above the chain") {
    auto levels = predict_filtered_spectrum(tdpt_seed_chain(2, 1), 9);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].energy == 25);
    CHECK(levels[1].energy == 49);
    CHECK(levels[2].energy == 81);
  }
  SUBCASE("survivors always sit at (m+n+2+2j)^2") {
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= m; ++n) {
        auto levels = predict_filtered_spectrum(tdpt_seed_chain(m, n), m + n + 8);
        REQUIRE(levels.size() >= 3);
        for (int j = 0; j < 3; ++j) {
          long k = m + n + 2 + 2 * j;
          CHECK(levels[static_cast<std::size_t>(j)].energy == k * k);
        }
      }
  }
  SUBCASE("a seed with off-center nodes is rejected") {
    ChainSpec chain;
    chain.seeds = {SeedSpec::sin_k(3)};  // nodes at pi/3, 2pi/3
    CHECK_THROWS_AS(predict_filtered_spectrum(chain, 8), std::invalid_argument);
  }
}
