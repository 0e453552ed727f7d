#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "zerosum/errors.hpp"

namespace zerosum {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A complex result together with an absolute error estimate. abs_err is 0
/// for values that carry no truncation or quadrature error.
struct ComplexValue {
  cplx z{};
  double abs_err = 0.0;

  double re() const { return z.real(); }
  double im() const { return z.imag(); }
};

/// Throws ConsistencyError if z is not finite.
inline cplx require_finite(cplx z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ConsistencyError(std::string(where) + ": non-finite result");
  return z;
}

inline ComplexValue require_finite(ComplexValue v, const char* where) {
  require_finite(v.z, where);
  if (!(v.abs_err >= 0.0))
    throw ConsistencyError(std::string(where) + ": invalid error estimate");
  return v;
}

/// Evaluation settings shared by the special-function layer and the
/// quadrature-based operations built on top of it. Immutable once built.
struct EvalConfig {
  // Minimum number of explicit terms in the Euler-Maclaurin sum for zeta.
  int euler_maclaurin_terms = 10;
  // Riemann-Siegel correction terms C_0..C_k used by hardy_z, k in [0, 4].
  int rs_correction_terms = 4;
  // Heights at or above this use the Riemann-Siegel formula for Z(t).
  double rs_min_height = 1000.0;
  double quad_tol = 1e-9;

  void validate() const {
    if (euler_maclaurin_terms < 1)
      throw InputError("EvalConfig: euler_maclaurin_terms must be positive");
    if (rs_correction_terms < 0 || rs_correction_terms > 4)
      throw InputError("EvalConfig: rs_correction_terms must lie in [0, 4]");
    if (!(quad_tol > 0.0))
      throw InputError("EvalConfig: quad_tol must be positive");
    if (!(rs_min_height >= 30.0))
      throw InputError("EvalConfig: rs_min_height must be at least 30");
  }
};

}  // namespace zerosum
