#pragma once

#include <iosfwd>
#include <vector>

#include "darboux/ratio_expr.hpp"
#include "darboux/wronskian.hpp"

namespace darboux {

// The m spectral-derivative columns of the confluent chain at k0 = 0:
// (-1)^j x^{2j+1}/(2j+1), j = 0..m-1.
std::vector<RatPoly> confluent_seed_columns(int m);

// Closed form of W(x, x^3, ..., x^{2m-1}):
// x^{m(m+1)/2} 2^{m(m-1)/2} prod_{j=1}^{m-1} j!.
RatPoly odd_power_wronskian_closed_form(int m);

struct BesselChainResult {
  RatioExpr potential;       // m(m+1)/x^2
  bool stepwise_ok = false;  // iterated zero-energy steps with seeds x^{j+1}
  bool wronskian_route_ok = false;  // -2 (ln W(x,x^3,...))'' route
  bool ok() const { return stepwise_ok && wronskian_route_ok; }
};

// Builds the Bessel potential by the two independent routes the confluent
// case allows and certifies both against m(m+1)/x^2 exactly.
BesselChainResult bessel_chain_potential(int m);

// Eigenstate of m(m+1)/x^2 at energy k^2 via the generalized-Wronskian
// ratio: the numerator determinant is expanded along the sin(kx)/k
// column with exact polynomial minors; the denominator is the closed
// form above. x = 0 returns 0 by continuity (leading order x^{m+1}).
double rayleigh_wronskian_state(int m, double k, double x);

// Same state via x^{m+1}/2^m (x^{-1} d/dx)^m sinc(kx), carried out as a
// series in y = x^2.
double rayleigh_operator_state(int m, double k, double x);

// Spherical Bessel j_m(z); ascending series for small z, upward
// recurrence from the closed j_0, j_1 once z comfortably exceeds m.
double spherical_bessel(int m, double z);

struct BesselComparisonRow {
  double x = 0.0;
  double wronskian_route = 0.0;
  double operator_route = 0.0;
  double bessel_oracle = 0.0;  // x * j_m(kx)
};

std::vector<BesselComparisonRow> bessel_comparison_table(int m, double k, int points,
                                                         double lo = 0.1, double hi = 10.0);
void write_bessel_comparison_csv(std::ostream& os, int m, double k, int points,
                                 double lo = 0.1, double hi = 10.0);

}  // namespace darboux
