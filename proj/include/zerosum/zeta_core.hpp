#pragma once

#include "zerosum/types.hpp"

namespace zerosum {

/// Largest |Im s| accepted by the Euler-Maclaurin evaluator.
inline constexpr double kZetaMaxHeight = 1e4;

/// Distance in the s-plane below which log_deriv_zeta refuses to evaluate.
inline constexpr double kPoleStandoff = 1e-3;

/// Riemann-Siegel theta. Uses the asymptotic series for t >= 10 and the
/// log-gamma identity theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi below.
double theta(double t);

/// theta(t) computed only through log Gamma; an independent check on theta().
double theta_exact(double t);

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it). Euler-Maclaurin below
/// cfg.rs_min_height, Riemann-Siegel with cfg.rs_correction_terms above.
double hardy_z(double t, const EvalConfig& cfg = {});

/// Z(t) from the Riemann-Siegel main sum plus `corrections` terms (0..4).
double hardy_z_riemann_siegel(double t, int corrections);

/// Riemann-Siegel correction coefficient C_k(p), k in [0, 4], p in [0, 1).
double riemann_siegel_coefficient(int k, double p);

/// zeta(s) and zeta'(s) from one Euler-Maclaurin pass.
struct ZetaPair {
  cplx zeta;
  cplx dzeta;
  double abs_err;  // bound on the truncation error of zeta
};
ZetaPair zeta_with_derivative(cplx s, const EvalConfig& cfg = {});

ComplexValue zeta(cplx s, const EvalConfig& cfg = {});

/// zeta'/zeta(s) as the quotient of the Euler-Maclaurin pair. Throws
/// PoleProximityError within kPoleStandoff of s = 1 or of a zero (the latter
/// detected through the Newton step |zeta/zeta'|).
ComplexValue log_deriv_zeta(cplx s, const EvalConfig& cfg = {});

/// -sum Lambda(n) n^{-s} for n <= n_max plus the exactly known boundary
/// term and the mean-density tail; sigma > 1. abs_err bounds the neglected
/// fluctuation integral using |psi(u) - u| <= sqrt(u).
ComplexValue log_deriv_zeta_dirichlet(cplx s, long n_max = 10'000'000);

/// Delta'/Delta(s) for the functional-equation factor
/// Delta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s).
cplx delta_log_deriv(cplx s);

/// Smooth Riemann-von Mangoldt count (T/2pi) log(T/2pi e) + 7/8, optionally
/// with the 1/T and 1/T^3 terms of f(T).
double count_main_term(double T, bool include_f = false);

/// N(T) via the argument principle: theta(T)/pi + 1 + arg zeta(1/2+iT)/pi with
/// the argument tracked continuously from sigma = 3. Not an integer when T is
/// close to an ordinate; callers round.
double zero_count_exact(double T, const EvalConfig& cfg = {});

}  // namespace zerosum
