#pragma once

#include "zerosum/types.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

struct GEvaluation {
  enum class Method { direct, continued };
  cplx s{};
  ComplexValue value;
  double cutoff_X = 0.0;
  Method method = Method::direct;
  double tail_err = 0.0;  // bound on the part of the R_X integral beyond the table
};

/// sum_{0 < gamma < X} gamma^{-s}; X <= max_height. Converges as X grows only
/// for sigma > 1.
GEvaluation g_direct(const ZeroTable& table, cplx s, double X);

/// R_X(s) = X^{1-s} log(X/2pi) / (2pi(s-1)) + X^{1-s} / (2pi(s-1)^2)
///          - X^{-s}(S(X)+f(X)) + s int_X^inf u^{-s-1}(S(u)+f(u)) du.
/// The integral is exact up to U = max_height (S+f is piecewise smooth
/// between ordinates); beyond U it is bounded, using |S+f| <= 1 + log u, by
/// |s| U^{-sigma}((1 + log U)/sigma + 1/sigma^2), returned as abs_err.
/// Requires sigma > 0, s != 1, 20 <= X <= max_height.
ComplexValue g_rx_tail(const ZeroTable& table, cplx s, double X);

/// s int_X^U u^{-s-1}(S(u)+f(u)) du with per-gap antiderivatives (exact).
cplx rx_integral(const ZeroTable& table, cplx s, double X, double U);
/// The same integral by adaptive quadrature on every gap.
ComplexValue rx_integral_quadrature(const ZeroTable& table, cplx s, double X, double U,
                                    double tol);

/// g_direct + g_rx_tail.
GEvaluation g_continued(const ZeroTable& table, cplx s, double X);

/// Residue of G(s + i tau) x^s / s at s = 1 - i tau; the same expression as
/// main_term_closed.
ComplexValue residue_term(double x, double tau);

struct PerronParams {
  double c = 1.2;    // abscissa, >= 1.05
  double T = 500.0;  // truncation height, 2x < T <= 1e4
  double x = 50.0;
  double tau = 0.0;

  void validate() const;
};

/// (1/2 pi i) int_{c-iT}^{c+iT} G(s + i tau) x^s / s ds by Gauss-Kronrod on
/// panels of phase pi/4 in t max(log x, log U). Along sigma = c, G is the
/// table sum plus the mean-density tail beyond U = max_height and the point
/// mass -U^{-s}(S(U)+f(U)).
ComplexValue perron_truncated(const ZeroTable& table, const PerronParams& p,
                              const EvalConfig& cfg = {});

/// G along sigma = c as used by perron_truncated.
cplx perron_g(const ZeroTable& table, cplx s);

struct PerronBound {
  double table_bound = 0.0;  // x^c sum gamma^{-c} min(1, 1/(T |log(x/gamma)|)) + beyond-table terms
  double closed_form = 0.0;  // x^c / ((c-1)^2 T) + log x log T
  bool coverage_warning = false;  // x > max_height / 2
  double bound() const { return table_bound > closed_form ? table_bound : closed_form; }
};

PerronBound perron_error_bound(const ZeroTable& table, const PerronParams& p);

}  // namespace zerosum
