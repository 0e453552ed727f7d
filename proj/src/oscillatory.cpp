#include "zerosum/oscillatory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "zerosum/exp_sums.hpp"
#include "zerosum/parallel.hpp"
#include "zerosum/quadrature.hpp"
#include "zerosum/summation.hpp"
#include "zerosum/zeta_core.hpp"

namespace zerosum {

namespace {

constexpr double kMaxPhaseVariation = 1e7;
constexpr double kPanelPhase = kPi / 4.0;

}  // namespace

void OscillatoryIntegrand::validate() const {
  if (!f || !df || !d2f || !phi) throw InputError("OscillatoryIntegrand: missing accessor");
  if (!std::isfinite(a) || !std::isfinite(b) || !(b >= a))
    throw InputError(fmt::format("OscillatoryIntegrand: bad interval [{}, {}]", a, b));
  if (!(A > 0.0 && U > 0.0 && H > 0.0))
    throw InputError("OscillatoryIntegrand: A, U, H must be positive");
  if (A > U) throw InputError(fmt::format("OscillatoryIntegrand: A = {} exceeds U = {}", A, U));
  if (U < b - a)
    throw InputError(fmt::format("OscillatoryIntegrand: U = {} is below b - a = {}", U, b - a));
  if (b == a) return;
  for (int k = 0; k < 10; ++k) {
    const double t = a + (k + 0.5) * (b - a) / 10.0;
    const double h = 1e-4 * std::max(1.0, std::abs(t));
    const double fd = (f(t + h) - f(t - h)) / (2.0 * h);
    const double d = df(t);
    if (!(std::abs(fd - d) <= 1e-5 * std::max(std::abs(d), 1.0)))
      throw InputError(fmt::format(
          "OscillatoryIntegrand: f' = {} disagrees with the difference quotient {} at t = {}", d,
          fd, t));
  }
}

ComplexValue integrate_oscillatory(const OscillatoryIntegrand& g, double tol) {
  g.validate();
  if (!(tol > 0.0)) throw InputError("integrate_oscillatory: tol must be positive");
  if (g.b == g.a) return {};

  // Coarse estimate of the phase variation for the work guard.
  constexpr int kProbe = 1000;
  double variation = 0.0;
  for (int k = 0; k < kProbe; ++k) {
    const double t0 = g.a + (g.b - g.a) * k / kProbe;
    const double t1 = k + 1 == kProbe ? g.b : g.a + (g.b - g.a) * (k + 1) / kProbe;
    variation += kTwoPi * std::max(std::abs(g.f(t1) - g.f(t0)),
                                   0.5 * (t1 - t0) * (std::abs(g.df(t0)) + std::abs(g.df(t1))));
  }
  if (variation > kMaxPhaseVariation)
    throw ResourceError(fmt::format(
        "integrate_oscillatory: phase variation {:.3g} exceeds the work guard {:.0e}", variation,
        kMaxPhaseVariation));

  // Panels with at most pi/4 of phase.
  std::vector<double> edges{g.a};
  const double min_width = (g.b - g.a) * 1e-12;
  while (edges.back() < g.b) {
    const double t = edges.back();
    double w = g.b - t;
    double slope = std::abs(g.df(t));
    if (slope > 0.0) w = std::min(w, kPanelPhase / (kTwoPi * slope));
    while (w > min_width && kTwoPi * std::abs(g.df(t + w)) * w > kPanelPhase) w *= 0.5;
    edges.push_back(w >= g.b - t ? g.b : t + std::max(w, min_width));
    if (edges.size() > 4 * static_cast<std::size_t>(kMaxPhaseVariation / kPanelPhase))
      throw ResourceError("integrate_oscillatory: panel count exceeds the work guard");
  }

  const ComplexIntegrand h = [&](double t) { return g.phi(t) * std::polar(1.0, kTwoPi * g.f(t)); };
  const std::size_t panels = edges.size() - 1;
  std::vector<QuadResult> parts(panels);
  parallel_for(panels, [&](std::size_t k) {
    const double share = tol * (edges[k + 1] - edges[k]) / (g.b - g.a);
    parts[k] = integrate_adaptive(h, edges[k], edges[k + 1], share);
  });
  CompensatedComplexSum acc;
  double err = 0.0;
  for (const auto& p : parts) {
    acc.add(p.value);
    err += p.abs_err;
  }
  return require_finite(ComplexValue{acc.value(), err}, "integrate_oscillatory");
}

StationaryPhase stationary_phase_approx(const OscillatoryIntegrand& g) {
  g.validate();
  const double fa = g.df(g.a), fb = g.df(g.b);
  const double root_a = std::sqrt(g.A);
  auto side = [&](double d) { return d == 0.0 ? root_a : std::min(root_a, 1.0 / std::abs(d)); };
  const double E = g.A / g.U + side(fa) + side(fb);

  StationaryPhase out{{}, g.H * E, false, 0.0};
  if ((fa > 0.0 && fb > 0.0) || (fa < 0.0 && fb < 0.0)) return out;

  double lo = g.a, hi = g.b;
  double flo = fa;
  while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = g.df(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double t0 = 0.5 * (lo + hi);

  constexpr int kSamples = 64;
  for (int k = 0; k <= kSamples; ++k) {
    const double t = g.a + (g.b - g.a) * k / kSamples;
    if (!(g.d2f(t) > 0.0))
      throw HypothesisError(
          fmt::format("stationary_phase_approx: f''({}) = {} is not positive", t, g.d2f(t)));
  }
  const double d2 = g.d2f(t0);
  if (!(d2 > 0.0))
    throw HypothesisError(fmt::format("stationary_phase_approx: f''({}) = {} is not positive", t0, d2));

  const cplx main = std::polar(1.0, kPi / 4.0 + kTwoPi * g.f(t0)) * g.phi(t0) / std::sqrt(d2);
  out.main = require_finite(ComplexValue{main, 0.0}, "stationary_phase_approx");
  out.has_point = true;
  out.t0 = t0;
  return out;
}

ComplexValue exponential_factor(cplx s, double tau) {
  if (!(s.imag() > 0.0))
    throw DomainError(fmt::format("exponential_factor: t = {} must be positive", s.imag()));
  if (tau == 0.0) return {cplx(1.0, 0.0), 0.0};
  const cplx w(s.imag(), 0.5 - s.real());  // i(1/2 - s)
  return require_finite(ComplexValue{std::exp(cplx(0.0, -tau) * std::log(w)), 0.0},
                        "exponential_factor");
}

ContourReport contour_check(const ZeroTable& table, double x, double y, double tau,
                            const EvalConfig& cfg) {
  cfg.validate();
  if (!(x > 1.0)) throw DomainError(fmt::format("contour_check: x = {} must exceed 1", x));
  if (!(y >= x)) throw DomainError("contour_check: y must not be below x");
  table.require_covered(y, "contour_check");
  ContourReport rep;
  if (y == x) return rep;

  const auto g = table.ordinates();
  for (double edge : {x, y}) {
    const auto it = std::lower_bound(g.begin(), g.end(), edge - kContourStandoff);
    if (it != g.end() && *it <= edge + kContourStandoff)
      throw PoleProximityError(
          fmt::format("contour_check: edge at height {} lies {:.4f} from the ordinate {}; "
                      "shift the window",
                      edge, std::abs(*it - edge), *it),
          std::abs(*it - edge));
  }
  const std::size_t lo = table.count_below(x), hi = table.count_below(y);
  if (hi - lo > kContourMaxZeros)
    throw ResourceError(fmt::format("contour_check: window holds {} zeros, more than {}", hi - lo,
                                    kContourMaxZeros));

  const double eta = 1.0 / std::log(x);
  const std::array<cplx, 4> v{cplx(-eta, x), cplx(1.5, x), cplx(1.5, y), cplx(-eta, y)};
  const std::function<cplx(cplx)> integrand = [&](cplx s) {
    return log_deriv_zeta(s, cfg).z * exponential_factor(s, tau).z;
  };
  std::array<QuadResult, 4> seg;
  parallel_for(4, [&](std::size_t k) {
    seg[k] = integrate_segment(integrand, v[k], v[(k + 1) % 4], cfg.quad_tol);
  });

  const cplx scale(0.0, kTwoPi);  // 2 pi i
  std::array<ComplexValue*, 4> out{&rep.I1, &rep.I2, &rep.I3, &rep.I4};
  CompensatedComplexSum total;
  double err = 0.0;
  for (int k = 0; k < 4; ++k) {
    *out[k] = {seg[k].value / scale, seg[k].abs_err / kTwoPi};
    total.add(out[k]->z);
    err += out[k]->abs_err;
  }
  rep.total = {total.value(), err};
  rep.zero_sum = sum_indices(table, lo, hi, tau).value;
  rep.discrepancy = std::abs(rep.total.z - rep.zero_sum.z);
  rep.zeros_enclosed = hi - lo;
  return rep;
}

OscillatoryIntegrand theorem2_integrand(double n, double tau, double x, double y) {
  if (!(n >= 2.0) || !(tau > 0.0) || !(x > 1.0) || !(y > x))
    throw DomainError("theorem2_integrand: requires n >= 2, tau > 0, 1 < x < y");
  const double ln = std::log(n);
  const double delta = 0.5 + 1.0 / std::log(x);
  OscillatoryIntegrand g;
  g.f = [=](double t) { return (t * ln - tau * std::log(t)) / kTwoPi; };
  g.df = [=](double t) { return (ln - tau / t) / kTwoPi; };
  g.d2f = [=](double t) { return tau / (t * t) / kTwoPi; };
  g.phi = [=](double t) { return cplx(std::exp(delta * tau / t), 0.0); };
  g.a = x;
  g.b = y;
  g.U = y;
  g.A = x * x / tau;
  g.H = std::exp(delta * tau / x);
  return g;
}

}  // namespace zerosum
