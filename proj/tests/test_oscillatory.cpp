#include <doctest.h>

#include <cmath>
#include <complex>

#include "support.hpp"
#include "zerosum/asymptotics.hpp"
#include "zerosum/exp_sums.hpp"
#include "zerosum/oscillatory.hpp"

using namespace zerosum;
using doctest::Approx;

namespace {

OscillatoryIntegrand fresnel(double X) {
  OscillatoryIntegrand g;
  g.f = [](double t) { return t * t; };
  g.df = [](double t) { return 2.0 * t; };
  g.d2f = [](double) { return 2.0; };
  g.phi = [](double) { return cplx(1.0, 0.0); };
  g.a = -X;
  g.b = X;
  g.A = 0.5;
  g.U = 2.0 * X;
  return g;
}

OscillatoryIntegrand linear() {
  OscillatoryIntegrand g;
  g.f = [](double t) { return t; };
  g.df = [](double) { return 1.0; };
  g.d2f = [](double) { return 0.0; };
  g.phi = [](double) { return cplx(1.0, 0.0); };
  g.a = 0.0;
  g.b = 1.0;
  return g;
}

// Composite Simpson on a uniform grid; no adaptivity.
cplx simpson(const OscillatoryIntegrand& g, long n) {
  const double h = (g.b - g.a) / n;
  cplx acc = 0.0;
  for (long k = 0; k <= n; ++k) {
    const double t = g.a + h * k;
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    acc += w * g.phi(t) * std::polar(1.0, kTwoPi * g.f(t));
  }
  return acc * h / 3.0;
}

}  // namespace

TEST_SUITE("oscillatory") {

TEST_CASE("integrate_oscillatory: full period") {
  CHECK(std::abs(integrate_oscillatory(linear(), 1e-12).z) < 1e-12);
}

TEST_CASE("integrate_oscillatory: Fresnel on [-10, 10]") {
  const auto g = fresnel(10.0);
  const auto q = integrate_oscillatory(g, 1e-11);
  const cplx grid = simpson(g, 4'000'000);
  CHECK(std::abs(q.z - grid) < 1e-9);
  // The finite integral falls short of the Fresnel limit by the two endpoint
  // tails, each i e(X^2)/(4 pi X) to leading order.
  const cplx limit(0.5, 0.5);
  const cplx finite = limit - cplx(0.0, 1.0 / (20.0 * kPi));
  CHECK(std::abs(q.z - finite) < 1e-4);
  CHECK(std::abs(q.z - limit) == Approx(1.0 / (20.0 * kPi)).epsilon(1e-2));
}

TEST_CASE("integrate_oscillatory: Fresnel on [-100, 100] reaches the limit") {
  const auto q = integrate_oscillatory(fresnel(100.0), 1e-10);
  CHECK(std::abs(q.z - cplx(0.5, 0.5)) < 5e-3);
  CHECK(std::abs(q.z - cplx(0.5, 0.5 - 1.0 / (200.0 * kPi))) < 1e-6);
}

TEST_CASE("integrate_oscillatory: constant phase") {
  auto g = linear();
  g.f = [](double) { return 0.3; };
  g.df = [](double) { return 0.0; };
  g.a = 2.0;
  g.b = 5.0;
  g.U = 3.0;
  const auto q = integrate_oscillatory(g, 1e-12);
  CHECK(std::abs(q.z - 3.0 * std::polar(1.0, kTwoPi * 0.3)) < 1e-14);
}

TEST_CASE("integrate_oscillatory: work guard and validation") {
  auto g = fresnel(2000.0);
  CHECK_THROWS_AS(integrate_oscillatory(g, 1e-8), ResourceError);
  auto bad = linear();
  bad.df = [](double) { return 1.1; };
  CHECK_THROWS_AS(integrate_oscillatory(bad, 1e-8), InputError);
  auto loose = linear();
  loose.A = 2.0;
  CHECK_THROWS_AS(loose.validate(), InputError);
  auto narrow = fresnel(10.0);
  narrow.U = 5.0;
  CHECK_THROWS_AS(narrow.validate(), InputError);
}

TEST_CASE("stationary_phase_approx") {
  const auto f = stationary_phase_approx(fresnel(10.0));
  CHECK(f.has_point);
  CHECK(std::abs(f.t0) < 1e-9);
  CHECK(std::abs(f.main.z - std::polar(1.0, kPi / 4.0) / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(f.main.z - cplx(0.5, 0.5)) < 1e-15);

  const auto l = stationary_phase_approx(linear());
  CHECK_FALSE(l.has_point);
  CHECK(l.main.z == cplx(0.0, 0.0));
  CHECK(l.error_budget == Approx(3.0));

  const auto g = theorem2_integrand(5.0, 200.0, 100.0, 190.0);
  const auto s = stationary_phase_approx(g);
  CHECK(s.t0 == Approx(200.0 / std::log(5.0)).epsilon(1e-10));
  const auto q = integrate_oscillatory(g, 1e-8);
  CHECK(std::abs(q.z - s.main.z) <= s.error_budget);

  auto concave = fresnel(10.0);
  concave.f = [](double t) { return -t * t; };
  concave.df = [](double t) { return -2.0 * t; };
  concave.d2f = [](double) { return -2.0; };
  CHECK_THROWS_AS(stationary_phase_approx(concave), HypothesisError);
}

TEST_CASE("property: stationary phase error within 10 H E on the large-tau integrands") {
  int count = 0;
  double worst = 0.0;
  const struct {
    double x, y;
    std::vector<double> taus;
  } families[] = {{100.0, 190.0, {70, 100, 150, 200, 300}}, {200.0, 380.0, {400}}};
  for (const auto& fam : families)
    for (double tau : fam.taus)
      for (const auto& pp : theorem2_window(fam.x, fam.y, tau)) {
        if (count == 20) break;
        const auto g = theorem2_integrand(static_cast<double>(pp.n), tau, fam.x, fam.y);
        const auto s = stationary_phase_approx(g);
        const auto q = integrate_oscillatory(g, 1e-8);
        const double ratio = std::abs(q.z - s.main.z) / s.error_budget;
        CHECK(ratio <= 10.0);
        worst = std::max(worst, ratio);
        ++count;
      }
  CHECK(count == 20);
  MESSAGE("stationary phase max ratio " << worst);
}

TEST_CASE("exponential_factor") {
  for (double t : {0.3, 10.0, 1000.0})
    CHECK(std::abs(exponential_factor(cplx(0.5, t), 17.0).z) == Approx(1.0).epsilon(1e-15));
  CHECK(exponential_factor(cplx(0.2, 3.0), 0.0).z == cplx(1.0, 0.0));
  const double mag = std::abs(exponential_factor(cplx(-0.5, 100.0), 50.0).z);
  CHECK(std::abs(mag / std::exp(0.5) - 1.0) < 0.01);
  for (double t : {2.0, 40.0}) {
    const cplx a = exponential_factor(cplx(0.5, t), 9.0).z, b = exponential_factor(cplx(0.5, t), -9.0).z;
    CHECK(std::abs(b - std::conj(a)) < 1e-15);
  }
  CHECK_THROWS_AS(exponential_factor(cplx(0.5, 0.0), 1.0), DomainError);
  CHECK_THROWS_AS(exponential_factor(cplx(0.5, -3.0), 1.0), DomainError);
}

TEST_CASE("contour_check") {
  const auto& t = test::zeros_1000();
  const auto a = contour_check(t, 20.0, 30.0, 0.0);
  CHECK(std::abs(a.total.z - cplx(2.0, 0.0)) < 1e-4);
  CHECK(a.zeros_enclosed == 2);
  CHECK(a.discrepancy <= EvalConfig{}.quad_tol * 1e3);
  const auto b = contour_check(t, 20.0, 30.0, 5.0);
  CHECK(std::abs(b.total.z - sum_range(t, {20.0, 30.0, 5.0}).value.z) < 1e-4);
  CHECK(b.discrepancy == Approx(std::abs(b.total.z - b.zero_sum.z)));
  const auto c = contour_check(t, 25.5, 25.5, 3.0);
  CHECK(c.I1.z == cplx(0.0, 0.0));
  CHECK(c.I2.z == cplx(0.0, 0.0));
  CHECK(c.I3.z == cplx(0.0, 0.0));
  CHECK(c.I4.z == cplx(0.0, 0.0));
  CHECK_THROWS_AS(contour_check(t, 21.0, 30.0, 0.0), PoleProximityError);
  CHECK_THROWS_AS(contour_check(t, 20.0, 900.0, 0.0), ResourceError);
  const auto wide = contour_check(t, 100.5, 149.0, 7.0);
  CHECK(wide.discrepancy <= 1e-6);
}

TEST_CASE("property: halving quad_tol does not double the contour discrepancy") {
  const auto& t = test::zeros_1000();
  EvalConfig cfg;
  for (double tol : {1e-6, 1e-8}) {
    cfg.quad_tol = tol;
    const double d1 = contour_check(t, 20.0, 30.0, 5.0, cfg).discrepancy;
    cfg.quad_tol = tol / 2.0;
    const double d2 = contour_check(t, 20.0, 30.0, 5.0, cfg).discrepancy;
    CHECK(d2 <= 2.0 * d1 + 1e-13);
  }
}

}
