#pragma once

#include <span>
#include <utility>

#include "zerosum/primes.hpp"
#include "zerosum/types.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

/// x^{1-i tau} / (2 pi (1 - i tau)) * (log(x/2pi) - 1/(1 - i tau)), the
/// antiderivative F(x) of (u^{-i tau}/2pi) log(u/2pi).
ComplexValue main_term_closed(double x, double tau);

/// F(b) - F(a), cross-checked by adaptive quadrature of the integrand. Throws
/// ConsistencyError when the two differ by more than 10 tol (relative to the
/// size of the endpoint values when those exceed 1). abs_err holds the
/// observed difference.
ComplexValue main_term_integral(double a, double b, double tau, double tol = 1e-10);

/// Quadrature half of main_term_integral, exposed for tests.
ComplexValue main_term_quadrature(double a, double b, double tau, double tol);

struct ErrorMeasurement {
  double x = 0.0;
  double tau = 0.0;
  ComplexValue sum;
  ComplexValue main;
  double err_abs = 0.0;
  double paper_bound = 0.0;  // |tau| (log x)^2, or (log x)^2 at tau = 0
  double ratio = 0.0;
};

/// Sum over ordinates below x minus main_term_closed(x, tau); 2 <= x <= max_height.
ErrorMeasurement error_term(const ZeroTable& table, double x, double tau);

/// sqrt(tau/2pi) e^{i(tau + pi/4)} tau^{-i tau} sum Lambda(n)(log n)^{i tau}/(sqrt(n) log n)
/// over e^{tau/y} <= n <= e^{tau/x}. Negative tau gives the conjugate of +|tau|.
/// Throws ResourceError when |tau|/x > 50 or the window holds over 1e8 integers.
ComplexValue theorem2_main(double x, double y, double tau);

/// Prime powers in the theorem2_main window, for inspection and tests.
std::vector<PrimePower> theorem2_window(double x, double y, double tau);

/// e^{tau/2x}((log x)^2 + (tau/x)^2 log x) + tau^{1/2} e^{tau/2x - tau/y} tau/x,
/// implied constant 1.
double theorem2_error_bound(double x, double y, double tau);

struct RegimeLabel {
  enum class Kind { small_tau, large_tau, out_of_range };
  Kind kind = Kind::small_tau;
  double threshold = 0.0;  // c x log 2
  double upper = 0.0;      // upper_mult x log x
};

const char* regime_name(RegimeLabel::Kind kind);

/// |tau| <= c x log 2 is small_tau (boundary inclusive), up to upper_mult x log x
/// large_tau, beyond that out_of_range.
RegimeLabel classify_regime(double x, double tau, double c = 0.9, double upper_mult = 0.5);

/// Least-squares slope of log(magnitude) against log(x).
double fit_exponent(std::span<const std::pair<double, double>> points);

}  // namespace zerosum
