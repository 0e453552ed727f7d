#include "zerosum/zeta_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include <fmt/format.h>

#include "zerosum/primes.hpp"
#include "zerosum/special.hpp"

namespace zerosum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxBernoulli = special::kBernoulliCount;

}  // namespace

double theta_exact(double t) {
  if (!(t >= 1.0)) throw DomainError(fmt::format("theta: t = {} is below 1", t));
  return special::log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double theta(double t) {
  if (!(t >= 1.0)) throw DomainError(fmt::format("theta: t = {} is below 1", t));
  if (t < 10.0) return theta_exact(t);
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  // 1/(48t) + 7/(5760t^3) + 31/(80640t^5) + 127/(430080t^7) + 511/(1216512t^9)
  const double series =
      inv * (1.0 / 48.0 +
             inv2 * (7.0 / 5760.0 +
                     inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0 + inv2 * (511.0 / 1216512.0)))));
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 + series;
}

ZetaPair zeta_with_derivative(cplx s, const EvalConfig& cfg) {
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (std::abs(s.imag()) > kZetaMaxHeight)
    throw RangeError(fmt::format("zeta: |Im s| = {} exceeds supported height {}",
                                 std::abs(s.imag()), kZetaMaxHeight));
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError("zeta: non-finite argument");

  // Choose N so that consecutive Bernoulli corrections shrink by >= 4.
  const double need = (std::abs(s) + 2.0 * kMaxBernoulli) / kPi;
  const long n_terms = std::max<long>(cfg.euler_maclaurin_terms, static_cast<long>(std::ceil(need)) + 1);

  cplx sum = 0.0, dsum = 0.0;
  double magnitude = 0.0;
  for (long n = n_terms - 1; n >= 1; --n) {
    const double ln = std::log(static_cast<double>(n));
    const cplx term = std::exp(-s * ln);
    sum += term;
    dsum -= ln * term;
    magnitude += std::abs(term);
  }

  const double lnN = std::log(static_cast<double>(n_terms));
  const cplx n_pow = std::exp(-s * lnN);  // N^{-s}
  const cplx sm1 = s - 1.0;
  const cplx head = static_cast<double>(n_terms) * n_pow / sm1;
  sum += 0.5 * n_pow + head;
  dsum += -0.5 * lnN * n_pow + head * (-lnN - 1.0 / sm1);

  // Bernoulli corrections: c_k P_k(s) N^{-s-2k+1}, P_k(s) = s(s+1)...(s+2k-2).
  const auto& coef = special::bernoulli_over_factorial();
  cplx poly = s, dpoly = 1.0;
  cplx npow = n_pow / static_cast<double>(n_terms);  // N^{-s-1}
  const double inv_n2 = 1.0 / (static_cast<double>(n_terms) * n_terms);
  double tail = 0.0;
  for (int k = 1; k <= kMaxBernoulli; ++k) {
    const cplx term = coef[k - 1] * poly * npow;
    const cplx dterm = coef[k - 1] * npow * (dpoly - lnN * poly);
    sum += term;
    dsum += dterm;
    tail = std::abs(term) * std::abs(s + 2.0 * k + 1.0) / std::max(1.0, s.real() + 2.0 * k + 1.0);
    if (std::abs(term) <= 1e-18 * std::max(std::abs(sum), 1e-300)) break;
    // advance P_k -> P_{k+1} = P_k (s+2k-1)(s+2k)
    const cplx a = s + (2.0 * k - 1.0), b = s + 2.0 * k;
    dpoly = dpoly * a * b + poly * (a + b);
    poly *= a * b;
    npow *= inv_n2;
  }

  ZetaPair out{sum, dsum, tail + 4.0 * kEps * (magnitude + std::abs(head) + std::abs(sum))};
  require_finite(out.zeta, "zeta");
  require_finite(out.dzeta, "zeta'");
  return out;
}

ComplexValue zeta(cplx s, const EvalConfig& cfg) {
  const auto p = zeta_with_derivative(s, cfg);
  return {p.zeta, p.abs_err};
}

ComplexValue log_deriv_zeta(cplx s, const EvalConfig& cfg) {
  const double to_one = std::abs(s - 1.0);
  // The slack keeps a point exactly at the stand-off (e.g. s = 1.001) usable
  // despite rounding in s - 1.
  if (to_one < kPoleStandoff * (1.0 - 1e-9))
    throw PoleProximityError(fmt::format("log_deriv_zeta: s lies {} from the pole at 1", to_one),
                             to_one);
  const auto p = zeta_with_derivative(s, cfg);
  const double az = std::abs(p.zeta);
  const double newton = az / std::max(std::abs(p.dzeta), 1e-300);
  if (az == 0.0 || (to_one >= 0.1 && newton < kPoleStandoff))
    throw PoleProximityError(
        fmt::format("log_deriv_zeta: s = {}{:+}i lies about {} from a zero of zeta", s.real(),
                    s.imag(), newton),
        newton);
  const cplx q = p.dzeta / p.zeta;
  const double err = p.abs_err * (1.0 + std::abs(q) + std::log(1.0 + std::abs(s))) / az;
  return require_finite(ComplexValue{q, err}, "log_deriv_zeta");
}

namespace {

struct PrimeCache {
  std::mutex mu;
  std::uint64_t n_max = 0;
  std::shared_ptr<const std::vector<std::uint32_t>> primes;
};

std::shared_ptr<const std::vector<std::uint32_t>> cached_primes(std::uint64_t n_max) {
  static PrimeCache cache;
  std::lock_guard lock(cache.mu);
  if (!cache.primes || cache.n_max != n_max) {
    cache.primes = std::make_shared<const std::vector<std::uint32_t>>(sieve_primes(n_max));
    cache.n_max = n_max;
  }
  return cache.primes;
}

}  // namespace

ComplexValue log_deriv_zeta_dirichlet(cplx s, long n_max) {
  if (!(s.real() > 1.0)) throw DomainError("log_deriv_zeta_dirichlet: requires Re s > 1");
  if (n_max < 100) throw InputError("log_deriv_zeta_dirichlet: n_max must be at least 100");
  const auto primes = cached_primes(static_cast<std::uint64_t>(n_max));

  const double N = static_cast<double>(n_max);
  cplx sum = 0.0;
  double psi = 0.0;  // Chebyshev psi(N)
  // Descending order adds the small terms first.
  for (auto it = primes->rbegin(); it != primes->rend(); ++it) {
    const double p = *it;
    const double lp = std::log(p);
    double q = p;
    double lq = lp;
    while (q <= N) {
      sum += lp * std::exp(-s * lq);
      psi += lp;
      q *= p;
      lq += lp;
    }
  }
  // Tail: int_N^inf u^{-s} d psi(u) = -N^{-s}(psi(N) - N) + N^{1-s}/(s-1)
  //       + s int_N^inf (psi(u) - u) u^{-s-1} du; the last piece is bounded.
  const cplx n_pow = std::exp(-s * std::log(N));
  sum += -n_pow * (psi - N) + N * n_pow / (s - 1.0);
  const double sigma = s.real();
  const double err = std::abs(s) * std::pow(N, 0.5 - sigma) / (sigma - 0.5) +
                     8.0 * kEps * psi;
  return require_finite(ComplexValue{-sum, err}, "log_deriv_zeta_dirichlet");
}

cplx delta_log_deriv(cplx s) {
  if (!(std::abs(s.imag()) >= 2.0))
    throw DomainError(fmt::format("delta_log_deriv: |t| = {} is below 2", std::abs(s.imag())));
  if (!(std::abs(s.real()) <= 2.0))
    throw DomainError(fmt::format("delta_log_deriv: |sigma| = {} exceeds 2", std::abs(s.real())));
  const cplx v = std::log(2.0) + std::log(kPi) + 0.5 * kPi * special::cot(0.5 * kPi * s) -
                 special::digamma(1.0 - s);
  return require_finite(v, "delta_log_deriv");
}

double count_main_term(double T, bool include_f) {
  if (!(T > 0.0)) throw DomainError("count_main_term: T must be positive");
  double n = T / kTwoPi * std::log(T / (kTwoPi * std::numbers::e)) + 0.875;
  if (include_f) n += (1.0 / (48.0 * T) + 7.0 / (5760.0 * T * T * T)) / kPi;
  return n;
}

double zero_count_exact(double T, const EvalConfig& cfg) {
  if (!(T >= 10.0)) throw DomainError("zero_count_exact: T must be at least 10");
  double sigma = 3.0;
  cplx prev = zeta(cplx(sigma, T), cfg).z;
  double arg = std::arg(prev);
  double step = 0.05;
  while (sigma > 0.5) {
    const double next = std::max(0.5, sigma - step);
    const cplx cur = zeta(cplx(next, T), cfg).z;
    const double d = std::arg(cur / prev);
    if (std::abs(d) > kPi / 4.0 && step > 1e-7) {
      step *= 0.5;
      continue;
    }
    arg += d;
    prev = cur;
    sigma = next;
    step = std::min(0.05, step * 2.0);
  }
  return theta(T) / kPi + 1.0 + arg / kPi;
}

}  // namespace zerosum
