#pragma once

#include <random>

#include "zerosum/zeros.hpp"

namespace zerosum::test {

// Tables are computed once per process.
inline const ZeroTable& zeros_1000() {
  static const ZeroTable t = compute_zeros(1000.0, 1e-10);
  return t;
}

inline const ZeroTable& zeros_10000() {
  static const ZeroTable t = compute_zeros(10000.0, 1e-10);
  return t;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng());
}

}  // namespace zerosum::test
