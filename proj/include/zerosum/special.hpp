#pragma once

#include <array>

#include "zerosum/types.hpp"

namespace zerosum::special {

/// B_{2k}/(2k)! for k = 1..kBernoulliCount (index 0 holds k = 1).
inline constexpr int kBernoulliCount = 30;
const std::array<double, kBernoulliCount>& bernoulli_over_factorial();

/// B_{2k} for k = 1..kBernoulliCount (index 0 holds k = 1).
const std::array<double, kBernoulliCount>& bernoulli_even();

/// Continuous branch of log Gamma(z) for Re z > 0.
cplx log_gamma(cplx z);

/// Digamma psi(z); z must stay away from the non-positive integers.
cplx digamma(cplx z);

/// cot(z) without overflow for large |Im z|.
cplx cot(cplx z);

}  // namespace zerosum::special
