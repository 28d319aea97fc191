#include "darboux/wronskian.hpp"

#include <stdexcept>
#include <utility>

namespace darboux {

RingElem wronskian(std::span<const RingElem> cols) {
  if (cols.empty()) throw std::invalid_argument("empty Wronskian");
  const RingTag tag = cols[0].tag();
  for (const auto& c : cols)
    if (c.tag() != tag) throw std::invalid_argument("Wronskian: mixed ring tags");

  const std::size_t n = cols.size();
  if (n == 1) return cols[0];

  // Derivative matrix: row i holds the i-th derivatives of the columns.
  std::vector<std::vector<RingElem>> m(n, std::vector<RingElem>(n, RingElem::zero(tag)));
  for (std::size_t j = 0; j < n; ++j) m[0][j] = cols[j];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i - 1][j].derivative();

  // Bareiss elimination. Entries stay in the ring; each division by the
  // previous pivot is exact by the Sylvester identity.
  int sign = 1;
  RingElem prev = RingElem::one(tag);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (!m[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == k) return RingElem::zero(tag);  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        RingElem t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (!RingElem::divide_exact(t, prev, &m[i][j]))
          throw std::logic_error("Wronskian: Bareiss division not exact");
      }
      m[i][k] = RingElem::zero(tag);
    }
    prev = m[k][k];
  }
  RingElem det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

RingElem wronskian(std::initializer_list<RingElem> cols) {
  std::vector<RingElem> v(cols);
  return wronskian(std::span<const RingElem>(v));
}

RingElem generalized_wronskian(const SeedSpec& base, const std::vector<int>& deriv_orders,
                               const std::optional<RingElem>& extra) {
  if (base.kind != SeedSpec::Kind::KDerivColumn || base.k != 0)
    throw std::invalid_argument(
        "generalized_wronskian: only the free-particle derivative family at k0 = 0 is supported");
  if (deriv_orders.empty() || deriv_orders.front() != 0)
    throw std::invalid_argument("generalized_wronskian: derivative orders must start at 0");
  std::vector<RingElem> cols;
  cols.reserve(deriv_orders.size() + 1);
  int last = -1;
  for (int order : deriv_orders) {
    if (order <= last)
      throw std::invalid_argument("generalized_wronskian: derivative orders must be strictly increasing");
    last = order;
    cols.push_back(SeedSpec::k_deriv(order).realize());
  }
  if (extra) {
    if (extra->tag() != RingTag::Poly)
      throw std::invalid_argument(
          "generalized_wronskian: extra column must be polynomial; evaluated transcendental "
          "columns are handled by the confluent Bessel evaluator");
    cols.push_back(*extra);
  }
  return wronskian(std::span<const RingElem>(cols));
}

RatioExpr potential_from_wronskian(const RingElem& w) {
  if (w.is_zero()) throw std::invalid_argument("potential_from_wronskian: zero Wronskian");
  RingElem d1 = w.derivative();
  RingElem d2 = d1.derivative();
  RingElem num = (d1 * d1 - d2 * w) * Rational(2);
  return RatioExpr(std::move(num), w * w);
}

}  // namespace darboux
