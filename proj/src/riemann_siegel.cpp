#include <array>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "zerosum/zeta_core.hpp"

namespace zerosum {

namespace {

// Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), entire in p.
cplx psi_fn(cplx p) {
  return std::cos(kTwoPi * (p * p - p - 1.0 / 16.0)) / std::cos(kTwoPi * p);
}

constexpr int kTaylorTerms = 64;
constexpr int kCauchyPoints = 256;

// Taylor coefficients of Psi(1/2 + u) in u, from the Cauchy integral on |u| = 1
// (trapezoidal rule, spectrally accurate for an entire integrand).
std::array<double, kTaylorTerms> psi_taylor() {
  std::array<double, kTaylorTerms> a{};
  constexpr double radius = 1.0;
  for (int j = 0; j < kCauchyPoints; ++j) {
    const double phi = kTwoPi * j / kCauchyPoints;
    const cplx w = std::polar(radius, phi);
    const cplx f = psi_fn(0.5 + w);
    for (int k = 0; k < kTaylorTerms; ++k)
      a[k] += (f * std::polar(1.0, -k * phi)).real();
  }
  double rk = 1.0;
  for (int k = 0; k < kTaylorTerms; ++k) {
    a[k] /= kCauchyPoints * rk;
    rk *= radius;
  }
  return a;
}

using Poly = std::vector<double>;

// Coefficients (in u) of the m-th derivative of Psi(1/2 + u).
Poly psi_derivative(const std::array<double, kTaylorTerms>& a, int m) {
  Poly d(kTaylorTerms - m);
  for (int j = 0; j + m < kTaylorTerms; ++j) {
    double f = 1.0;
    for (int i = j + 1; i <= j + m; ++i) f *= i;
    d[j] = a[j + m] * f;
  }
  return d;
}

void axpy(Poly& y, double alpha, const Poly& x) {
  if (y.size() < x.size()) y.resize(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// C_0..C_4 of the Riemann-Siegel remainder as polynomials in u = p - 1/2.
std::array<Poly, 5> correction_polys() {
  const auto a = psi_taylor();
  std::array<Poly, 13> d;
  for (int m = 0; m <= 12; ++m) d[m] = psi_derivative(a, m);
  const double p2 = kPi * kPi, p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4;
  std::array<Poly, 5> c;
  axpy(c[0], 1.0, d[0]);
  axpy(c[1], -1.0 / (96.0 * p2), d[3]);
  axpy(c[2], 1.0 / (64.0 * p2), d[2]);
  axpy(c[2], 1.0 / (18432.0 * p4), d[6]);
  axpy(c[3], -1.0 / (64.0 * p2), d[1]);
  axpy(c[3], -1.0 / (3840.0 * p4), d[5]);
  axpy(c[3], -1.0 / (5308416.0 * p6), d[9]);
  axpy(c[4], 1.0 / (128.0 * p2), d[0]);
  axpy(c[4], 19.0 / (24576.0 * p4), d[4]);
  axpy(c[4], 11.0 / (5898240.0 * p6), d[8]);
  axpy(c[4], 1.0 / (2038431744.0 * p8), d[12]);
  return c;
}

const std::array<Poly, 5>& corrections() {
  static const auto c = correction_polys();
  return c;
}

double horner(const Poly& c, double u) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * u + *it;
  return v;
}

}  // namespace

// Exposed for tests: C_k(p) with p the fractional part in [0, 1).
double riemann_siegel_coefficient(int k, double p) {
  if (k < 0 || k > 4) throw InputError("riemann_siegel_coefficient: k must lie in [0, 4]");
  return horner(corrections()[k], p - 0.5);
}

double hardy_z_riemann_siegel(double t, int corrections_used) {
  if (!(t >= 2.0 * kPi)) throw DomainError("hardy_z_riemann_siegel: t must be at least 2 pi");
  if (corrections_used < 0 || corrections_used > 4)
    throw InputError("hardy_z_riemann_siegel: correction count must lie in [0, 4]");
  const double a = std::sqrt(t / kTwoPi);
  const long n = static_cast<long>(std::floor(a));
  const double p = a - n;
  const double th = theta(t);

  double main = 0.0;
  for (long k = n; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    main += std::cos(th - t * std::log(kk)) / std::sqrt(kk);
  }
  main *= 2.0;

  const double r = std::sqrt(kTwoPi / t);  // (2pi/t)^{1/2}
  const auto& c = corrections();
  double rem = 0.0, rk = 1.0;
  for (int k = 0; k <= corrections_used; ++k) {
    rem += horner(c[k], p - 0.5) * rk;
    rk *= r;
  }
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return main + sign * std::sqrt(r) * rem;
}

double hardy_z(double t, const EvalConfig& cfg) {
  if (!(t >= 2.0)) throw DomainError(fmt::format("hardy_z: t = {} is below 2", t));
  if (t >= cfg.rs_min_height) return hardy_z_riemann_siegel(t, cfg.rs_correction_terms);
  const cplx z = zeta(cplx(0.5, t), cfg).z;
  return (std::polar(1.0, theta(t)) * z).real();
}

}  // namespace zerosum
