#pragma once

#include <cstddef>

#include "zerosum/types.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

struct SumResult {
  ComplexValue value;
  std::size_t terms = 0;
  double comp_err = 0.0;  // rounding bound of the compensated sum
};

/// sum_{gamma < x} gamma^{-i tau}, ascending, compensated. 0 < x <= max_height.
SumResult sum_to(const ZeroTable& table, double x, double tau);

/// sum_{x <= gamma < y} gamma^{-i tau}. An empty window (y <= x) gives 0.
SumResult sum_range(const ZeroTable& table, const RangeQuery& q);

/// Sum over table entries [first, last) of exp(-i tau log gamma).
SumResult sum_indices(const ZeroTable& table, std::size_t first, std::size_t last, double tau);

}  // namespace zerosum
