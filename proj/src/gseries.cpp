#include "zerosum/gseries.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "zerosum/asymptotics.hpp"
#include "zerosum/parallel.hpp"
#include "zerosum/quadrature.hpp"
#include "zerosum/summation.hpp"
#include "zerosum/zeta_core.hpp"

namespace zerosum {

namespace {

constexpr double kMinCutoff = 20.0;

// Smooth count m(u) = (u/2pi) log(u/2pi e) + 7/8.
double smooth_count(double u) { return count_main_term(u); }

cplx power_sum(const ZeroTable& table, std::size_t first, std::size_t last, cplx s) {
  const auto logs = table.log_ordinates();
  return blocked_sum(first, last, [&](std::size_t k) { return std::exp(-s * logs[k]); });
}

void check_continuation_args(const ZeroTable& table, cplx s, double X, const char* where) {
  if (!(s.real() > 0.0))
    throw DomainError(fmt::format("{}: sigma = {} must be positive", where, s.real()));
  if (s == cplx(1.0, 0.0)) throw PoleError(fmt::format("{}: pole at s = 1", where));
  if (!(X >= kMinCutoff)) throw DomainError(fmt::format("{}: X = {} is below {}", where, X, kMinCutoff));
  table.require_covered(X, where);
}

}  // namespace

GEvaluation g_direct(const ZeroTable& table, cplx s, double X) {
  GEvaluation out;
  out.s = s;
  out.cutoff_X = X;
  out.method = GEvaluation::Method::direct;
  out.value = {power_sum(table, 0, table.count_below(X), s), 0.0};
  require_finite(out.value, "g_direct");
  return out;
}

cplx rx_integral(const ZeroTable& table, cplx s, double X, double U) {
  // Summed by parts, the per-gap antiderivatives of s u^{-s-1} N(u) telescope
  // to N(X) X^{-s} - N(U) U^{-s} + sum_{X <= gamma < U} gamma^{-s}.
  const std::size_t nx = table.count_below(X), nu = table.count_below(U);
  const cplx xs = std::exp(-s * std::log(X)), us = std::exp(-s * std::log(U));
  const cplx step = static_cast<double>(nx) * xs - static_cast<double>(nu) * us +
                    power_sum(table, nx, nu, s);
  // s int u^{-s-1} m(u) du with m(u) = (u/2pi)(log u - log 2pi - 1) + 7/8.
  const double L = std::log(kTwoPi) + 1.0;
  const cplx w = 1.0 - s;
  auto phi = [&](double u) {
    const double lu = std::log(u);
    return s / kTwoPi * std::exp(w * lu) * ((lu - L) / w - 1.0 / (w * w));
  };
  const cplx smooth = 0.875 * (xs - us) + phi(U) - phi(X);
  return step - smooth;
}

ComplexValue rx_integral_quadrature(const ZeroTable& table, cplx s, double X, double U,
                                    double tol) {
  std::vector<double> edges{X};
  for (double g : table.ordinates())
    if (g > X && g < U) edges.push_back(g);
  edges.push_back(U);
  CompensatedComplexSum acc;
  double err = 0.0;
  const std::size_t gaps = edges.size() - 1;
  for (std::size_t j = 0; j < gaps; ++j) {
    const double count = static_cast<double>(table.count_below(0.5 * (edges[j] + edges[j + 1])));
    const ComplexIntegrand f = [&](double u) {
      return s * std::exp(-(s + 1.0) * std::log(u)) * (count - smooth_count(u));
    };
    const auto r = integrate_adaptive(f, edges[j], edges[j + 1], tol / gaps);
    acc.add(r.value);
    err += r.abs_err;
  }
  return {acc.value(), err};
}

ComplexValue g_rx_tail(const ZeroTable& table, cplx s, double X) {
  check_continuation_args(table, s, X, "g_rx_tail");
  const double U = table.max_height();
  const double lx = std::log(X);
  const cplx sm1 = s - 1.0;
  const cplx x1s = std::exp(-sm1 * lx);  // X^{1-s}
  const cplx xs = std::exp(-s * lx);
  const cplx v = x1s * (lx - std::log(kTwoPi)) / (kTwoPi * sm1) + x1s / (kTwoPi * sm1 * sm1) -
                 xs * s_plus_f(table, X) + rx_integral(table, s, X, U);
  const double sigma = s.real();
  const double lu = std::log(U);
  const double tail = std::abs(s) * std::exp(-sigma * lu) * ((1.0 + lu) / sigma + 1.0 / (sigma * sigma));
  return require_finite(ComplexValue{v, tail}, "g_rx_tail");
}

GEvaluation g_continued(const ZeroTable& table, cplx s, double X) {
  const auto tail = g_rx_tail(table, s, X);
  auto out = g_direct(table, s, X);
  out.value = {out.value.z + tail.z, tail.abs_err};
  out.method = GEvaluation::Method::continued;
  out.tail_err = tail.abs_err;
  return out;
}

ComplexValue residue_term(double x, double tau) { return main_term_closed(x, tau); }

void PerronParams::validate() const {
  if (!(c >= 1.05)) throw DomainError(fmt::format("Perron: c = {} is below 1.05", c));
  if (!(x > 1.0)) throw DomainError(fmt::format("Perron: x = {} must exceed 1", x));
  if (!(T > 2.0 * x)) throw DomainError(fmt::format("Perron: T = {} must exceed 2x = {}", T, 2.0 * x));
  if (!(T <= 1e4)) throw ResourceError(fmt::format("Perron: T = {} exceeds the work guard 1e4", T));
  if (!std::isfinite(tau)) throw DomainError("Perron: tau must be finite");
}

namespace {

// G along a vertical line, with gamma^{-c} and log gamma precomputed.
struct LineSeries {
  std::vector<double> weight;
  std::vector<double> logs;
  double U = 0.0;
  double spf_U = 0.0;

  LineSeries(const ZeroTable& table, double c) : U(table.max_height()) {
    const auto lg = table.log_ordinates();
    logs.assign(lg.begin(), lg.end());
    weight.resize(logs.size());
    for (std::size_t k = 0; k < logs.size(); ++k) weight[k] = std::exp(-c * logs[k]);
    spf_U = s_plus_f(table, U);
  }

  cplx operator()(cplx s) const {
    CompensatedComplexSum acc;
    for (std::size_t k = 0; k < logs.size(); ++k) acc.add(std::polar(weight[k], -s.imag() * logs[k]));
    const double lu = std::log(U);
    const cplx sm1 = s - 1.0;
    const cplx u1s = std::exp(-sm1 * lu);
    acc.add(u1s * (lu - std::log(kTwoPi)) / (kTwoPi * sm1) + u1s / (kTwoPi * sm1 * sm1) -
            std::exp(-s * lu) * spf_U);
    return acc.value();
  }
};

}  // namespace

cplx perron_g(const ZeroTable& table, cplx s) {
  if (!(s.real() > 1.0)) throw DomainError("perron_g: requires sigma > 1");
  return LineSeries(table, s.real())(s);
}

ComplexValue perron_truncated(const ZeroTable& table, const PerronParams& p, const EvalConfig& cfg) {
  p.validate();
  cfg.validate();
  table.require_covered(p.x, "perron_truncated");
  const LineSeries G(table, p.c);
  const double lx = std::log(p.x);
  const double freq = std::max(lx, std::log(G.U));
  const double width = (kPi / 4.0) / freq;
  const std::size_t panels = static_cast<std::size_t>(std::ceil(2.0 * p.T / width));
  const double xc = std::exp(p.c * lx);
  const ComplexIntegrand f = [&](double t) {
    const cplx s(p.c, t);
    return G(cplx(p.c, t + p.tau)) * xc * std::polar(1.0, t * lx) / (kTwoPi * s);
  };
  const double tol = cfg.quad_tol * std::max(1.0, xc);
  std::vector<QuadResult> parts(panels);
  parallel_for(panels, [&](std::size_t k) {
    const double a = -p.T + 2.0 * p.T * k / panels;
    const double b = k + 1 == panels ? p.T : -p.T + 2.0 * p.T * (k + 1) / panels;
    parts[k] = integrate_adaptive(f, a, b, tol / panels);
  });
  CompensatedComplexSum acc;
  double err = 0.0;
  for (const auto& r : parts) {
    acc.add(r.value);
    err += r.abs_err;
  }
  return require_finite(ComplexValue{acc.value(), err}, "perron_truncated");
}

PerronBound perron_error_bound(const ZeroTable& table, const PerronParams& p) {
  p.validate();
  table.require_covered(p.x, "perron_error_bound");
  PerronBound out;
  const double lx = std::log(p.x);
  const double xc = std::exp(p.c * lx);
  auto damp = [&](double lg) {
    const double d = std::abs(lx - lg);
    return d == 0.0 ? 1.0 : std::min(1.0, 1.0 / (p.T * d));
  };
  CompensatedSum acc;
  for (double lg : table.log_ordinates()) acc.add(std::exp(-p.c * lg) * damp(lg));
  // Beyond the table: mean density (1/2pi) log(u/2pi) on (U, inf) and the
  // point mass -(S(U)+f(U)) at U, both with u/x >= U/x.
  const double U = table.max_height();
  const double lu = std::log(U);
  const double c1 = p.c - 1.0;
  const double density = std::exp(-c1 * lu) / (kTwoPi * c1) * (lu - std::log(kTwoPi) + 1.0 / c1);
  const double point = std::exp(-p.c * lu) * std::abs(s_plus_f(table, U));
  out.table_bound = xc * (acc.value() + damp(lu) * (density + point));
  out.closed_form = xc / (c1 * c1 * p.T) + lx * std::log(p.T);
  out.coverage_warning = p.x > 0.5 * U;
  return out;
}

}  // namespace zerosum
