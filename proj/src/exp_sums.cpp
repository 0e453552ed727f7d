#include "zerosum/exp_sums.hpp"

#include <cmath>
#include <limits>


#include "zerosum/summation.hpp"

namespace zerosum {

SumResult sum_indices(const ZeroTable& table, std::size_t first, std::size_t last, double tau) {
  if (last <= first) return {};
  const auto logs = table.log_ordinates();
  cplx v;
  if (tau == 0.0) {
    v = cplx(static_cast<double>(last - first), 0.0);
  } else {
    v = blocked_sum(first, last, [&](std::size_t k) { return std::polar(1.0, -tau * logs[k]); });
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const std::size_t n = last - first;
  const double err = 2.0 * eps * static_cast<double>(n);
  return {require_finite(ComplexValue{v, err}, "sum"), n, err};
}

SumResult sum_to(const ZeroTable& table, double x, double tau) {
  if (!std::isfinite(tau)) throw DomainError("sum_to: tau must be finite");
  return sum_indices(table, 0, table.count_below(x), tau);
}

SumResult sum_range(const ZeroTable& table, const RangeQuery& q) {
  if (!std::isfinite(q.tau)) throw DomainError("sum_range: tau must be finite");
  table.require_covered(q.y, "sum_range");
  if (!(q.y > q.x)) return {};
  const std::size_t lo = q.x > 0.0 ? table.count_below(q.x) : 0;
  return sum_indices(table, lo, table.count_below(q.y), q.tau);
}

}  // namespace zerosum
