#pragma once

#include <optional>
#include <span>
#include <vector>

#include "darboux/ratio_expr.hpp"
#include "darboux/ring_elem.hpp"
#include "darboux/seeds.hpp"

namespace darboux {

// Exact Wronskian of the given columns: determinant of the matrix whose
// i-th row holds the i-th derivatives, computed by fraction-free Bareiss
// elimination (every interior division is verified exact).
RingElem wronskian(std::span<const RingElem> cols);
RingElem wronskian(std::initializer_list<RingElem> cols);

// Confluent generalized Wronskian for the free particle at k0 = 0: the
// columns are the nonzero k-derivatives of sin(kx)/k at k = 0, realized
// as (-1)^j x^{2j+1}/(2j+1) for derivative order 2j. `deriv_orders` must
// be strictly increasing, even, starting at 0. An optional extra column
// (same ring) is appended last.
RingElem generalized_wronskian(const SeedSpec& base, const std::vector<int>& deriv_orders,
                               const std::optional<RingElem>& extra = std::nullopt);

// -2 (ln w)'' as an exact quotient: (2 w'^2 - 2 w'' w) / w^2.
RatioExpr potential_from_wronskian(const RingElem& w);

}  // namespace darboux
