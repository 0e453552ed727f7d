#include "zerosum/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "zerosum/exp_sums.hpp"
#include "zerosum/quadrature.hpp"
#include "zerosum/summation.hpp"

namespace zerosum {

ComplexValue main_term_closed(double x, double tau) {
  if (!(x > 0.0)) throw DomainError(fmt::format("main_term_closed: x = {} must be positive", x));
  const double lx = std::log(x);
  const cplx w(1.0, -tau);
  const cplx v = x * std::polar(1.0, -tau * lx) / (kTwoPi * w) * (lx - std::log(kTwoPi) - 1.0 / w);
  return require_finite(ComplexValue{v, 0.0}, "main_term_closed");
}

ComplexValue main_term_quadrature(double a, double b, double tau, double tol) {
  if (b == a) return {};
  const double log2pi = std::log(kTwoPi);
  const ComplexIntegrand f = [=](double u) {
    const double lu = std::log(u);
    return std::polar((lu - log2pi) / kTwoPi, -tau * lu);
  };
  // Split so that each piece carries at most half a turn of phase.
  const double span = std::log(b / a);
  const long pieces = 1 + static_cast<long>(std::abs(tau) * span / kPi);
  CompensatedComplexSum acc;
  double err = 0.0;
  for (long k = 0; k < pieces; ++k) {
    const double lo = a * std::exp(span * k / pieces);
    const double hi = k + 1 == pieces ? b : a * std::exp(span * (k + 1) / pieces);
    const auto r = integrate_adaptive(f, lo, hi, tol / pieces, 0.0);
    acc.add(r.value);
    err += r.abs_err;
  }
  return {acc.value(), err};
}

ComplexValue main_term_integral(double a, double b, double tau, double tol) {
  if (!(a >= 2.0)) throw DomainError(fmt::format("main_term_integral: a = {} is below 2", a));
  if (!(b >= a)) throw DomainError("main_term_integral: b must not be below a");
  if (!(tol > 0.0)) throw InputError("main_term_integral: tol must be positive");
  if (b == a) return {};
  const cplx fa = main_term_closed(a, tau).z;
  const cplx fb = main_term_closed(b, tau).z;
  const cplx exact = fb - fa;
  const double scale = std::max(1.0, std::abs(fa) + std::abs(fb));
  const auto quad = main_term_quadrature(a, b, tau, tol * scale);
  const double diff = std::abs(quad.z - exact);
  if (diff > 10.0 * tol * scale)
    throw ConsistencyError(fmt::format(
        "main_term_integral: quadrature and antiderivative differ by {:.3e} on [{}, {}], tau = {}",
        diff, a, b, tau));
  return {exact, diff};
}

ErrorMeasurement error_term(const ZeroTable& table, double x, double tau) {
  if (!(x >= 2.0)) throw DomainError(fmt::format("error_term: x = {} is below 2", x));
  ErrorMeasurement m;
  m.x = x;
  m.tau = tau;
  m.sum = sum_to(table, x, tau).value;
  m.main = main_term_closed(x, tau);
  m.err_abs = std::abs(m.sum.z - m.main.z);
  const double l2 = std::log(x) * std::log(x);
  m.paper_bound = tau == 0.0 ? l2 : std::abs(tau) * l2;
  m.ratio = m.err_abs / m.paper_bound;
  return m;
}

namespace {

constexpr double kMaxWindowExponent = 50.0;
constexpr double kMaxWindowWidth = 1e8;

void check_theorem2_args(double x, double y, double tau, const char* where) {
  if (!(x >= 2.0)) throw DomainError(fmt::format("{}: x = {} is below 2", where, x));
  if (!(y > x)) throw DomainError(fmt::format("{}: y = {} must exceed x = {}", where, y, x));
  if (!std::isfinite(tau)) throw DomainError(fmt::format("{}: tau must be finite", where));
}

}  // namespace

std::vector<PrimePower> theorem2_window(double x, double y, double tau) {
  check_theorem2_args(x, y, tau, "theorem2_window");
  const double t = std::abs(tau);
  if (t / x > kMaxWindowExponent)
    throw ResourceError(fmt::format(
        "theorem2_main: tau/x = {} exceeds {}; the range e^(tau/x) is too large to enumerate",
        t / x, kMaxWindowExponent));
  const double lo = std::ceil(std::exp(t / y));
  const double hi = std::floor(std::exp(t / x));
  if (hi < 2.0 || hi < lo) return {};
  if (hi - lo > kMaxWindowWidth)
    throw ResourceError(fmt::format("theorem2_main: window [{}, {}] holds too many integers", lo, hi));
  return prime_powers_in(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi));
}

ComplexValue theorem2_main(double x, double y, double tau) {
  const auto window = theorem2_window(x, y, tau);
  if (window.empty()) return {};
  const double t = std::abs(tau);
  const double base = t + kPi / 4.0 - t * std::log(t);
  CompensatedComplexSum acc;
  for (const auto& pp : window) {
    const double ln = std::log(static_cast<double>(pp.n));
    acc.add(std::polar(pp.log_p / (std::sqrt(static_cast<double>(pp.n)) * ln),
                       base + t * std::log(ln)));
  }
  cplx v = std::sqrt(t / kTwoPi) * acc.value();
  if (tau < 0.0) v = std::conj(v);
  return require_finite(ComplexValue{v, 0.0}, "theorem2_main");
}

double theorem2_error_bound(double x, double y, double tau) {
  check_theorem2_args(x, y, tau, "theorem2_error_bound");
  const double t = std::abs(tau);
  const double lx = std::log(x);
  const double r = t / x;
  return std::exp(t / (2.0 * x)) * (lx * lx + r * r * lx) +
         std::sqrt(t) * std::exp(t / (2.0 * x) - t / y) * r;
}

const char* regime_name(RegimeLabel::Kind kind) {
  switch (kind) {
    case RegimeLabel::Kind::small_tau: return "small_tau";
    case RegimeLabel::Kind::large_tau: return "large_tau";
    case RegimeLabel::Kind::out_of_range: return "out_of_range";
  }
  return "unknown";
}

RegimeLabel classify_regime(double x, double tau, double c, double upper_mult) {
  if (!(x >= 2.0)) throw DomainError(fmt::format("classify_regime: x = {} is below 2", x));
  if (!(c > 0.0 && c < 1.0)) throw InputError(fmt::format("classify_regime: c = {} outside (0, 1)", c));
  if (!(upper_mult > 0.0)) throw InputError("classify_regime: upper_mult must be positive");
  RegimeLabel r;
  r.threshold = c * x * std::log(2.0);
  r.upper = upper_mult * x * std::log(x);
  const double t = std::abs(tau);
  if (t <= r.threshold)
    r.kind = RegimeLabel::Kind::small_tau;
  else if (t <= r.upper)
    r.kind = RegimeLabel::Kind::large_tau;
  else
    r.kind = RegimeLabel::Kind::out_of_range;
  return r;
}

double fit_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw InputError("fit_exponent: need at least 2 points");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, m] : points) {
    if (!(x > 0.0) || !(m > 0.0)) throw InputError("fit_exponent: points must be positive");
    mx += std::log(x);
    my += std::log(m);
  }
  mx /= points.size();
  my /= points.size();
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, m] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(m) - my);
  }
  if (sxx == 0.0) throw InputError("fit_exponent: all x values coincide");
  return sxy / sxx;
}

}  // namespace zerosum
