#pragma once

#include <functional>

#include "zerosum/types.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

/// phi(t) e(f(t)) on [a, b], e(x) = exp(2 pi i x). The phase f and its
/// derivatives are in cycles. A, U, H are the scale parameters of the
/// stationary-phase lemma: |f''| ~ 1/A, phi << H, phi' << H/U.
struct OscillatoryIntegrand {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
  std::function<cplx(double)> phi;
  double a = 0.0;
  double b = 0.0;
  double A = 1.0;
  double U = 1.0;
  double H = 1.0;

  /// Throws InputError when b < a, A, U, H are not positive, A > U,
  /// U < b - a, or df disagrees with a central difference of f by more than
  /// 1e-5 max(|df|, 1) at 10 interior points.
  void validate() const;
};

/// Adaptive quadrature on panels carrying at most pi/4 of phase each.
/// Throws ResourceError when the total phase variation exceeds 1e7 radians.
ComplexValue integrate_oscillatory(const OscillatoryIntegrand& g, double tol);

struct StationaryPhase {
  ComplexValue main;   // 0 when f' keeps one sign on [a, b]
  double error_budget; // H E
  bool has_point;
  double t0;           // stationary point when has_point
};

/// main = e^{i pi/4} phi(t0) e(f(t0)) / sqrt(f''(t0)),
/// E = A/U + min(sqrt A, 1/|f'(a)|) + min(sqrt A, 1/|f'(b)|).
/// Throws HypothesisError if f'' <= 0 somewhere on [a, b] while a stationary
/// point exists.
StationaryPhase stationary_phase_approx(const OscillatoryIntegrand& g);

/// (i(1/2 - s))^{-i tau} on the principal branch; Im s > 0.
ComplexValue exponential_factor(cplx s, double tau);

struct ContourReport {
  ComplexValue I1, I2, I3, I4;  // bottom, right, top, left
  ComplexValue total;
  ComplexValue zero_sum;
  double discrepancy = 0.0;
  std::size_t zeros_enclosed = 0;
};

/// Stand-off from ordinates required of the horizontal contour edges.
inline constexpr double kContourStandoff = 0.05;
/// Largest number of enclosed zeros contour_check accepts.
inline constexpr std::size_t kContourMaxZeros = 100;

/// (1/2 pi i) times the contour integral of (zeta'/zeta)(s) (i(1/2 - s))^{-i tau}
/// around the rectangle -eta + ix, 3/2 + ix, 3/2 + iy, -eta + iy with
/// eta = 1/log x, against the direct sum over zeros in [x, y). Throws
/// PoleProximityError when x or y lies within 0.05 of an ordinate.
ContourReport contour_check(const ZeroTable& table, double x, double y, double tau,
                            const EvalConfig& cfg = {});

/// Integrand of the stationary-phase family used for the large-tau regime:
/// 2 pi f(t) = t log n - tau log t, phi(t) = e^{delta tau / t},
/// delta = 1/2 + 1/log x, on [x, y], with U = y, A = x^2/tau, H = phi(x).
OscillatoryIntegrand theorem2_integrand(double n, double tau, double x, double y);

}  // namespace zerosum
