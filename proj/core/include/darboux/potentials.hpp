#pragma once

#include "darboux/ratio_expr.hpp"

namespace darboux {

// m(m+1)/sin^2 x + n(n+1)/cos^2 x as an exact trigonometric quotient.
RatioExpr tdpt_potential(int m, int n);

// m(m+1)/x^2 as an exact polynomial quotient.
RatioExpr bessel_potential(int m);

RatioExpr zero_potential(RingTag tag);

}  // namespace darboux
