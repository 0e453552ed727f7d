#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "zerosum/primes.hpp"
#include "zerosum/special.hpp"
#include "zerosum/zeta_core.hpp"

using namespace zerosum;
using doctest::Approx;

TEST_SUITE("zeta_core") {

TEST_CASE("theta values") {
  CHECK(theta(kTwoPi * std::numbers::e) == Approx(-0.391479049353898).epsilon(1e-12));
  CHECK(std::abs(theta(100.0) - 87.9721652317872) < 1e-10);
  CHECK(std::abs(theta(10.0) - -3.06707439628990) < 1e-10);
  // sign change of theta near 17.8456
  CHECK(theta(17.845) < 0.0);
  CHECK(theta(17.846) > 0.0);
  CHECK_THROWS_AS(theta(0.5), DomainError);
}

TEST_CASE("theta series matches log-gamma form") {
  for (double t : {10.0, 31.4, 100.0, 1000.0, 1e4, 1e5})
    CHECK(std::abs(theta(t) - theta_exact(t)) < 1e-10 * std::max(1.0, std::abs(theta(t))));
}

TEST_CASE("hardy_z") {
  CHECK(std::abs(hardy_z(14.134725141734694)) < 1e-9);
  CHECK(hardy_z(14.0) * hardy_z(15.0) < 0.0);
  CHECK(std::abs(hardy_z(30.0) - 0.596028519239885) < 1e-10);
  CHECK(std::abs(hardy_z(500.0) - 1.47244785105509) < 1e-9);
  CHECK(std::abs(hardy_z(1000.5) - 2.54926113555556) < 1e-8);
  CHECK(std::abs(hardy_z(5000.0) - -0.804257236352940) < 1e-8);
  CHECK(std::abs(hardy_z(9876.5) - 0.164743435034016) < 1e-8);
  CHECK_THROWS_AS(hardy_z(1.0), DomainError);
}

TEST_CASE("Riemann-Siegel coefficients at p = 1/2") {
  CHECK(riemann_siegel_coefficient(0, 0.5) == Approx(0.38268343236508978).epsilon(1e-14));
  CHECK(std::abs(riemann_siegel_coefficient(1, 0.5)) < 1e-14);
  CHECK(riemann_siegel_coefficient(2, 0.5) == Approx(0.0051885428302931701).epsilon(1e-12));
  CHECK(std::abs(riemann_siegel_coefficient(3, 0.5)) < 1e-14);
  CHECK(riemann_siegel_coefficient(4, 0.5) == Approx(0.00046483389361763372).epsilon(1e-10));
}

TEST_CASE("Riemann-Siegel agrees with Euler-Maclaurin above 1000") {
  for (double t : {1000.0, 2345.6, 7777.7})
    CHECK(std::abs(hardy_z_riemann_siegel(t, 4) - hardy_z(t, EvalConfig{.rs_min_height = 1e9})) < 1e-9);
}

TEST_CASE("zeta values") {
  CHECK(zeta(2.0).re() == Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-14));
  CHECK(std::abs(zeta(0.0).z - cplx(-0.5, 0.0)) < 1e-14);
  CHECK(std::abs(zeta(cplx(0.5, 14.134725141734694)).z) < 1e-9);
  CHECK(std::abs(zeta(cplx(0.5, 10)).z - cplx(1.54489522029675, -0.115336465271273)) < 1e-12);
  CHECK(std::abs(zeta(cplx(-0.5, 50)).z - cplx(-5.37840755255123, -1.13133867744554)) < 1e-11);
  CHECK(std::abs(zeta(cplx(2.5, 3000)).z - cplx(1.11940158302730, 0.0825468339966602)) < 1e-11);
  CHECK(zeta(cplx(0.5, 5000)).abs_err <= EvalConfig{}.quad_tol);
  CHECK_THROWS_AS(zeta(1.0), PoleError);
  CHECK_THROWS_AS(zeta(cplx(0.5, 2e4)), RangeError);
}

TEST_CASE("zeta derivative matches a difference quotient") {
  for (cplx s : {cplx(2.0, 0.0), cplx(0.5, 30.0), cplx(-0.7, 400.0)}) {
    const double h = 1e-5;
    const cplx fd = (zeta(s + h).z - zeta(s - h).z) / (2.0 * h);
    CHECK(std::abs(zeta_with_derivative(s).dzeta - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("log_deriv_zeta") {
  CHECK(log_deriv_zeta(2.0).re() == Approx(-0.569960993094533).epsilon(1e-12));
  CHECK(log_deriv_zeta(1.001).re() == Approx(-999.422971829657).epsilon(1e-12));
  CHECK(std::abs(log_deriv_zeta(cplx(1.5, 20)).z - cplx(0.0222599007612061, 0.446707764850047)) < 1e-11);
  CHECK(std::abs(log_deriv_zeta(cplx(-0.3, 25)).z - cplx(-2.06760762321348, -0.126207850630707)) < 1e-10);
  CHECK_THROWS_AS(log_deriv_zeta(cplx(0.5, 14.1347)), PoleProximityError);
  CHECK_THROWS_AS(log_deriv_zeta(1.0005), PoleProximityError);
  try {
    log_deriv_zeta(cplx(0.5, 14.1347));
  } catch (const PoleProximityError& e) {
    CHECK(e.distance() < 1e-3);
  }
}

TEST_CASE("Dirichlet route for zeta'/zeta") {
  CHECK(log_deriv_zeta_dirichlet(2.0, 10'000'000).re() == Approx(-0.569960993094533).epsilon(1e-10));
  CHECK_THROWS_AS(log_deriv_zeta_dirichlet(1.0), DomainError);
}

TEST_CASE("property: Dirichlet and quotient routes agree to 1e-8") {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const cplx s(test::uniform(1.5, 3.0), test::uniform(-100.0, 100.0));
    const auto d = log_deriv_zeta_dirichlet(s, 100'000'000);
    worst = std::max(worst, std::abs(d.z - log_deriv_zeta(s).z));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("property: |Z(t)| = |zeta(1/2+it)|") {
  for (int k = 0; k < 100; ++k) {
    const double t = test::uniform(10.0, 1000.0);
    const double z2 = std::norm(zeta(cplx(0.5, t)).z);
    const double h2 = hardy_z(t) * hardy_z(t);
    CHECK(std::abs(h2 - z2) <= 1e-8 * std::max(z2, 1e-300) + 1e-20);
  }
}

TEST_CASE("delta_log_deriv") {
  const double t0 = kTwoPi * std::numbers::e;
  CHECK(std::abs(delta_log_deriv(cplx(0.5, t0)) - cplx(-1.0, 0.0)) < 0.06);
  CHECK(std::abs(delta_log_deriv(cplx(0.5, t0)).real() - -0.999857077372555) < 1e-12);
  CHECK(std::abs(delta_log_deriv(cplx(0.5, 100)).real() - -2.76728895283916) < 1e-12);
  CHECK(std::abs(delta_log_deriv(cplx(0.5, 100)) - cplx(-2.7675, 0.0)) < 0.01);
  const cplx a = delta_log_deriv(cplx(-0.25, 50)), b = delta_log_deriv(cplx(0.25, 50));
  CHECK(std::abs(a - b) < 1.0 / 50.0 * 2.0);
  CHECK_THROWS_AS(delta_log_deriv(cplx(0.5, 1.0)), DomainError);
  CHECK_THROWS_AS(delta_log_deriv(cplx(2.5, 10.0)), DomainError);
}

TEST_CASE("property: t |Delta'/Delta(1/2+it) + log(t/2pi)| < 10") {
  for (double t = 10.0; t <= 1000.0; t += 7.3)
    CHECK(t * std::abs(delta_log_deriv(cplx(0.5, t)) + std::log(t / kTwoPi)) < 10.0);
}

TEST_CASE("count_main_term") {
  CHECK(count_main_term(kTwoPi * std::numbers::e) == Approx(0.875).epsilon(1e-14));
  CHECK(std::abs(count_main_term(100.0) - 29.0023435873264) < 1e-10);
  CHECK(std::abs(count_main_term(1000.0) - 649.0) < 1.0);
  CHECK(count_main_term(100.0, true) - count_main_term(100.0) ==
        Approx((1.0 / 4800.0 + 7.0 / 5.76e9) / kPi).epsilon(1e-12));
  double prev = count_main_term(kTwoPi * std::numbers::e);
  for (double T = 17.1; T < 1e5; T *= 1.07) {
    const double n = count_main_term(T);
    CHECK(n > prev);
    prev = n;
  }
  CHECK_THROWS_AS(count_main_term(0.0), DomainError);
}

TEST_CASE("zero_count_exact") {
  CHECK(std::round(zero_count_exact(50.0)) == 10.0);
  CHECK(std::round(zero_count_exact(100.0)) == 29.0);
  CHECK(std::round(zero_count_exact(1000.0)) == 649.0);
  CHECK(std::abs(zero_count_exact(1000.0) - 649.0) < 0.05);
}

TEST_CASE("von Mangoldt and prime powers") {
  CHECK(von_mangoldt(1) == 0.0);
  CHECK(von_mangoldt(8) == Approx(std::log(2.0)));
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(97) == Approx(std::log(97.0)));
  CHECK_THROWS_AS(von_mangoldt(0), DomainError);
  const auto pp = prime_powers_in(2, 10);
  REQUIRE(pp.size() == 7);  // 2 3 4 5 7 8 9
  CHECK(pp[2].n == 4);
  CHECK(pp[6].n == 9);
  for (std::uint64_t n = 2; n < 2000; ++n) {
    const auto w = prime_powers_in(n, n);
    CHECK((w.empty() ? 0.0 : w[0].log_p) == Approx(von_mangoldt(n)));
  }
  CHECK(sieve_primes(100).size() == 25);
}

TEST_CASE("special functions") {
  using special::log_gamma;
  CHECK(std::abs(log_gamma(cplx(5.0, 0.0)) - cplx(std::log(24.0), 0.0)) < 1e-13);
  CHECK(std::abs(special::digamma(cplx(1.0, 0.0)) + 0.5772156649015329) < 1e-13);
  CHECK(std::abs(special::cot(cplx(0.3, 200.0)) - cplx(0.0, -1.0)) < 1e-15);
}

}
