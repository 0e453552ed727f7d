#include "zerosum/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <fmt/format.h>

namespace zerosum {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.58608723546769113029414483825873,  0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.02293532201052922496373200805897,  0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.16900472663926790282658342659855,  0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.27970539148927666790146777142378,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  QuadResult r;
  bool operator<(const Panel& o) const { return r.abs_err < o.r.abs_err; }
};

}  // namespace

QuadResult gauss_kronrod_15(const ComplexIntegrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(center);
  cplx kronrod = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx f1 = f(center - dx), f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  // A floor of a few ulps of the panel magnitude keeps converged panels from
  // reporting a zero error.
  const double err = std::abs(kronrod - gauss) +
                     50.0 * std::numeric_limits<double>::epsilon() * std::abs(kronrod);
  return {kronrod, err, 15};
}

QuadResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, double abs_tol,
                              double rel_tol, long max_panels) {
  if (a == b) return {};
  std::priority_queue<Panel> heap;
  QuadResult first = gauss_kronrod_15(f, a, b);
  heap.push({a, b, first});
  cplx total = first.value;
  double err = first.abs_err;
  long evals = first.evaluations;
  long panels = 1;
  while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (panels >= max_panels)
      throw ResourceError(fmt::format(
          "integrate_adaptive: {} panels on [{}, {}] without reaching tolerance {} (error {})",
          panels, a, b, abs_tol, err));
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      // Cannot split further; accept what we have.
      heap.push(worst);
      break;
    }
    QuadResult left = gauss_kronrod_15(f, worst.a, mid);
    QuadResult right = gauss_kronrod_15(f, mid, worst.b);
    total += left.value + right.value - worst.r.value;
    err += left.abs_err + right.abs_err - worst.r.abs_err;
    evals += 30;
    ++panels;
    heap.push({worst.a, mid, left});
    heap.push({mid, worst.b, right});
  }
  // Re-sum from the panels so the total carries no drift from the updates.
  cplx sum = 0.0;
  double esum = 0.0;
  std::vector<Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : all) {
    sum += p.r.value;
    esum += p.r.abs_err;
  }
  return {sum, esum, evals};
}

QuadResult integrate_segment(const std::function<cplx(cplx)>& f, cplx z0, cplx z1, double abs_tol,
                             long max_panels) {
  const cplx dz = z1 - z0;
  if (dz == cplx(0.0)) return {};
  auto g = [&](double u) { return f(z0 + u * dz) * dz; };
  return integrate_adaptive(g, 0.0, 1.0, abs_tol, 0.0, max_panels);
}

}  // namespace zerosum
