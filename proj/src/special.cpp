#include "zerosum/special.hpp"

#include <cmath>

namespace zerosum::special {

namespace {

// zeta(2k) for k >= 1; small k from closed forms, the rest by direct sum.
double zeta_even(int k) {
  if (k == 1) return kPi * kPi / 6.0;
  if (k == 2) return std::pow(kPi, 4) / 90.0;
  double s = 0.0;
  for (int n = 2000; n >= 1; --n) s += std::pow(static_cast<double>(n), -2.0 * k);
  return s;
}

// Shift z upward until Re z >= this before applying asymptotic series.
constexpr double kAsymptoticRe = 12.0;

}  // namespace

const std::array<double, kBernoulliCount>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kBernoulliCount> t{};
    for (int k = 1; k <= kBernoulliCount; ++k) {
      // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      t[k - 1] = sign * 2.0 * zeta_even(k) / std::pow(kTwoPi, 2 * k);
    }
    return t;
  }();
  return table;
}

const std::array<double, kBernoulliCount>& bernoulli_even() {
  static const auto table = [] {
    std::array<double, kBernoulliCount> t{};
    const auto& r = bernoulli_over_factorial();
    for (int k = 1; k <= kBernoulliCount; ++k)
      t[k - 1] = r[k - 1] * std::tgamma(2.0 * k + 1.0);
    return t;
  }();
  return table;
}

cplx log_gamma(cplx z) {
  if (!(z.real() > 0.0)) throw DomainError("log_gamma: requires Re z > 0");
  cplx shift = 0.0;
  while (z.real() < kAsymptoticRe) {
    shift += std::log(z);
    z += 1.0;
  }
  const auto& b = bernoulli_even();
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx p = inv;
  for (int k = 1; k <= 10; ++k) {
    series += b[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift;
}

cplx digamma(cplx z) {
  cplx shift = 0.0;
  while (z.real() < kAsymptoticRe) {
    if (std::abs(z) < 1e-12) throw PoleError("digamma: pole at a non-positive integer");
    shift += 1.0 / z;
    z += 1.0;
  }
  const auto& b = bernoulli_even();
  const cplx inv2 = 1.0 / (z * z);
  cplx series = 0.0;
  cplx p = inv2;
  for (int k = 1; k <= 10; ++k) {
    series += b[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return std::log(z) - 0.5 / z - series - shift;
}

cplx cot(cplx z) {
  const cplx i(0.0, 1.0);
  if (z.imag() > 0.0) {
    const cplx w = std::exp(2.0 * i * z);
    return i * (w + 1.0) / (w - 1.0);
  }
  if (z.imag() < 0.0) {
    const cplx w = std::exp(-2.0 * i * z);
    return -i * (w + 1.0) / (w - 1.0);
  }
  return std::cos(z) / std::sin(z);
}

}  // namespace zerosum::special
