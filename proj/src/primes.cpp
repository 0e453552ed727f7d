#include "zerosum/primes.hpp"

#include <algorithm>
#include <cmath>

#include "zerosum/errors.hpp"

namespace zerosum {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint32_t> sieve_primes(std::uint64_t n_max) {
  std::vector<std::uint32_t> primes;
  if (n_max < 2) return primes;
  if (n_max > 0xFFFFFFFFull) throw ResourceError("sieve_primes: bound exceeds 2^32");
  // Odd-only sieve: index i stands for 2i + 1.
  const std::uint64_t half = n_max / 2 + 1;
  std::vector<char> composite(half, 0);
  for (std::uint64_t p = 3; p * p <= n_max; p += 2) {
    if (composite[p / 2]) continue;
    for (std::uint64_t m = p * p; m <= n_max; m += 2 * p) composite[m / 2] = 1;
  }
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i)
    if (!composite[i] && 2 * i + 1 <= n_max) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  return primes;
}

double von_mangoldt(std::uint64_t n) {
  if (n == 0) throw DomainError("von_mangoldt: n must be at least 1");
  if (n < 2) return 0.0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

std::vector<PrimePower> prime_powers_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<PrimePower> out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return out;

  const std::uint64_t root = isqrt(hi);
  const auto small = sieve_primes(root);

  // Primes in the window.
  std::vector<char> composite(hi - lo + 1, 0);
  for (std::uint64_t p : small) {
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t m = start; m <= hi; m += p) composite[m - lo] = 1;
  }
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (!composite[n - lo]) out.push_back({n, std::log(static_cast<double>(n))});

  // Higher powers p^k; their base is at most sqrt(hi).
  for (std::uint64_t p : small) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p * p; q <= hi; q *= p) {
      if (q >= lo) out.push_back({q, lp});
      if (q > hi / p) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });
  return out;
}

}  // namespace zerosum
