#pragma once

#include <functional>

#include "zerosum/types.hpp"

namespace zerosum {

using ComplexIntegrand = std::function<cplx(double)>;

struct QuadResult {
  cplx value{};
  double abs_err = 0.0;
  long evaluations = 0;
};

/// One 15-point Kronrod panel with the embedded 7-point Gauss error estimate.
QuadResult gauss_kronrod_15(const ComplexIntegrand& f, double a, double b);

/// Globally adaptive Gauss-Kronrod: bisects the panel with the largest error
/// until the summed estimate is below max(abs_tol, rel_tol |value|). Throws
/// ResourceError after max_panels panels.
QuadResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, double abs_tol,
                              double rel_tol = 0.0, long max_panels = 200'000);

/// Integral of f along the straight segment from z0 to z1 in the complex plane,
/// i.e. int_0^1 f(z0 + u (z1 - z0)) (z1 - z0) du.
QuadResult integrate_segment(const std::function<cplx(cplx)>& f, cplx z0, cplx z1,
                             double abs_tol, long max_panels = 200'000);

}  // namespace zerosum
