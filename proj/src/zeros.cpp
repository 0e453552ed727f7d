#include "zerosum/zeros.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "zerosum/parallel.hpp"
#include "zerosum/zeta_core.hpp"

namespace zerosum {

ZeroTable::ZeroTable(std::vector<double> ordinates, double max_height, Source source, double tol)
    : ordinates_(std::move(ordinates)), max_height_(max_height), source_(source), tol_(tol) {
  for (std::size_t k = 0; k < ordinates_.size(); ++k) {
    const double g = ordinates_[k];
    if (!std::isfinite(g)) throw FormatError(fmt::format("ordinate {} is not finite", k + 1), k + 1);
    if (!(g > kMinOrdinate))
      throw FormatError(fmt::format("ordinate {} = {} is not above {}", k + 1, g, kMinOrdinate), k + 1);
    if (k > 0 && !(g > ordinates_[k - 1]))
      throw FormatError(fmt::format("ordinates not strictly ascending at entry {}", k + 1), k + 1);
  }
  if (!std::isfinite(max_height_) ||
      (!ordinates_.empty() && max_height_ < ordinates_.back()))
    throw FormatError(fmt::format("max_height {} lies below the last ordinate", max_height_));
  logs_.resize(ordinates_.size());
  std::transform(ordinates_.begin(), ordinates_.end(), logs_.begin(),
                 [](double g) { return std::log(g); });
}

void ZeroTable::require_covered(double x, std::string_view what) const {
  if (!(x > 0.0))
    throw DomainError(fmt::format("{}: height {} must be positive", what, x));
  if (x > max_height_)
    throw CoverageError(
        fmt::format("{}: height {} exceeds the table coverage {}", what, x, max_height_));
}

std::size_t ZeroTable::count_below(double x) const {
  require_covered(x, "count_below");
  return static_cast<std::size_t>(std::lower_bound(ordinates_.begin(), ordinates_.end(), x) -
                                  ordinates_.begin());
}

std::size_t count_below(const ZeroTable& table, double x) { return table.count_below(x); }

double s_plus_f(const ZeroTable& table, double u) {
  return static_cast<double>(table.count_below(u)) - (count_main_term(u) - 0.875) - 0.875;
}

void check_rvm_consistency(const ZeroTable& table) {
  const auto g = table.ordinates();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double n = static_cast<double>(k + 1);
    if (std::abs(count_main_term(g[k]) - n) > 3.0)
      throw FormatError(fmt::format("ordinate {} = {} is inconsistent with the zero count "
                                    "(smooth count {:.3f})",
                                    k + 1, g[k], count_main_term(g[k])),
                        k + 1);
  }
}

double scan_step(double t) {
  if (t <= 1000.0) return 0.2;
  return 0.2 * std::log(1000.0) / std::log(t);
}

namespace {

constexpr double kScanStart = 10.0;
constexpr int kCheckpoints = 20;

struct Scanner {
  const EvalConfig& cfg;
  double tol;
  unsigned workers;

  double bisect(double lo, double hi, double zlo) const {
    double mid = 0.5 * (lo + hi);
    double zmid = hardy_z(mid, cfg);
    for (int iter = 0; iter < 200; ++iter) {
      if (zmid == 0.0) return mid;
      if ((zmid < 0.0) == (zlo < 0.0)) {
        lo = mid;
        zlo = zmid;
      } else {
        hi = mid;
      }
      const double next = 0.5 * (lo + hi);
      if (next == lo || next == hi) break;
      mid = next;
      zmid = hardy_z(mid, cfg);
      if (hi - lo <= tol && std::abs(zmid) <= 10.0 * tol) break;
    }
    return mid;
  }

  // Roots of Z on [lo, hi] from a grid whose step is `refine` times scan_step.
  std::vector<double> scan(double lo, double hi, double refine) const {
    std::vector<double> grid{lo};
    while (grid.back() < hi) grid.push_back(std::min(hi, grid.back() + refine * scan_step(grid.back())));
    std::vector<double> z(grid.size());
    constexpr std::size_t chunk = 256;
    parallel_for((grid.size() + chunk - 1) / chunk, [&](std::size_t c) {
      const std::size_t end = std::min(grid.size(), (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < end; ++i) z[i] = hardy_z(grid[i], cfg);
    }, workers);

    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
      if (z[i] != 0.0 && ((z[i] < 0.0) != (z[i + 1] < 0.0))) cells.push_back(i);

    std::vector<double> roots(cells.size());
    parallel_for(cells.size(), [&](std::size_t k) {
      const std::size_t i = cells[k];
      roots[k] = (z[i + 1] == 0.0) ? grid[i + 1] : bisect(grid[i], grid[i + 1], z[i]);
    }, workers);
    if (!grid.empty() && z[0] == 0.0) roots.insert(roots.begin(), grid[0]);
    std::erase_if(roots, [](double g) { return !(g > kMinOrdinate); });
    return roots;
  }
};

std::size_t count_in(const std::vector<double>& zeros, double T) {
  return static_cast<std::size_t>(std::lower_bound(zeros.begin(), zeros.end(), T) - zeros.begin());
}

// Expected number of zeros below T, or -1 when only the heuristic applies.
long exact_count(double T, const EvalConfig& cfg) {
  if (T > kZetaMaxHeight) return -1;
  const double n = zero_count_exact(T, cfg);
  const double r = std::round(n);
  return std::abs(n - r) < 0.25 ? static_cast<long>(r) : -1;
}

bool count_ok(const std::vector<double>& zeros, double T, const EvalConfig& cfg) {
  const long found = static_cast<long>(count_in(zeros, T));
  const long exact = exact_count(T, cfg);
  if (exact >= 0) return found == exact;
  return std::abs(static_cast<double>(found) - count_main_term(T, true)) <= 3.0;
}

// A checkpoint near `target` that sits mid-gap between found zeros.
double checkpoint(const std::vector<double>& zeros, double target, double t_max) {
  if (target >= t_max) return t_max;
  const auto it = std::lower_bound(zeros.begin(), zeros.end(), target);
  if (it == zeros.begin() || it == zeros.end()) return target;
  return 0.5 * (*(it - 1) + *it);
}

}  // namespace

ZeroTable compute_zeros(double t_max, double tol, const EvalConfig& cfg, unsigned workers) {
  cfg.validate();
  if (!(t_max >= 20.0 && t_max <= 1e6))
    throw DomainError(fmt::format("compute_zeros: t_max = {} outside [20, 1e6]", t_max));
  if (!(tol >= 1e-12)) throw DomainError(fmt::format("compute_zeros: tol = {} below 1e-12", tol));
  if (workers == 0) workers = worker_count();

  const Scanner scanner{cfg, tol, workers};
  std::vector<double> zeros = scanner.scan(kScanStart, t_max, 1.0);

  double prev = kScanStart;
  for (int j = 1; j <= kCheckpoints; ++j) {
    const double target = kScanStart + (t_max - kScanStart) * j / kCheckpoints;
    const double T = checkpoint(zeros, target, t_max);
    if (T <= prev) continue;
    if (!count_ok(zeros, T, cfg)) {
      // One retry on (prev, T] at a tenth of the step.
      const auto finer = scanner.scan(prev, T, 0.1);
      std::vector<double> merged;
      merged.reserve(zeros.size() + finer.size());
      for (double g : zeros)
        if (g <= prev) merged.push_back(g);
      for (double g : finer)
        if (g > prev && g < T) merged.push_back(g);
      for (double g : zeros)
        if (g >= T) merged.push_back(g);
      zeros = std::move(merged);
      if (!count_ok(zeros, T, cfg))
        throw CompletenessError(
            fmt::format("compute_zeros: zero count mismatch on ({}, {}] after refinement; "
                        "a close pair or multiple zero may be present",
                        prev, T),
            prev, T);
    }
    prev = T;
  }

  ZeroTable table(std::move(zeros), t_max, ZeroTable::Source::computed, tol);
  check_rvm_consistency(table);
  return table;
}

}  // namespace zerosum
