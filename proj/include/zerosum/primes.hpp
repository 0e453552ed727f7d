#pragma once

#include <cstdint>
#include <vector>

namespace zerosum {

/// Primes p <= n_max in ascending order (sieve of Eratosthenes).
std::vector<std::uint32_t> sieve_primes(std::uint64_t n_max);

/// Lambda(n): log p when n = p^k, otherwise 0.
double von_mangoldt(std::uint64_t n);

struct PrimePower {
  std::uint64_t n;
  double log_p;  // Lambda(n)
};

/// Every prime power n in [lo, hi] with its Lambda(n), ascending in n.
/// Segmented sieve over the window plus explicit enumeration of p^k, k >= 2.
std::vector<PrimePower> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace zerosum
