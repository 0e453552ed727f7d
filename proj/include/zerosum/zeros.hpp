#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "zerosum/types.hpp"

namespace zerosum {

/// Lower limit of every zero scan; Z(t) has no sign change below 14.
inline constexpr double kMinOrdinate = 14.0;

/// Ascending ordinates gamma of the nontrivial zeros rho = 1/2 + i gamma.
/// Every zero below max_height() is present. Immutable after construction.
class ZeroTable {
 public:
  enum class Source { computed, imported };

  ZeroTable() = default;
  /// Validates strict ascent, finiteness, gamma > 14 and max_height >= last
  /// ordinate; throws FormatError otherwise.
  ZeroTable(std::vector<double> ordinates, double max_height, Source source, double tol = 0.0);

  std::span<const double> ordinates() const { return ordinates_; }
  /// log(gamma_k), cached because every exponential sum needs it.
  std::span<const double> log_ordinates() const { return logs_; }
  std::size_t size() const { return ordinates_.size(); }
  bool empty() const { return ordinates_.empty(); }
  double operator[](std::size_t k) const { return ordinates_[k]; }
  double max_height() const { return max_height_; }
  Source source() const { return source_; }
  double tol() const { return tol_; }

  /// Number of ordinates strictly below x; x in (0, max_height].
  std::size_t count_below(double x) const;

  /// Throws CoverageError unless 0 < x <= max_height.
  void require_covered(double x, std::string_view what) const;

 private:
  std::vector<double> ordinates_;
  std::vector<double> logs_;
  double max_height_ = 0.0;
  Source source_ = Source::imported;
  double tol_ = 0.0;
};

/// Half-open window [x, y) at exponent tau.
struct RangeQuery {
  double x;
  double y;
  double tau;
};

/// Locate every sign change of Z on [10, t_max], refine each by bisection to
/// `tol`, and verify completeness at 20 checkpoints. Checkpoints at heights up
/// to 10^4 are compared against the exact argument-principle count; above that
/// the Riemann-von Mangoldt count must agree within 3. A mismatching stretch
/// is rescanned once at a tenth of the step before CompletenessError.
ZeroTable compute_zeros(double t_max, double tol = 1e-10, const EvalConfig& cfg = {},
                        unsigned workers = 0);

/// Scan step used by compute_zeros at height t.
double scan_step(double t);

/// Number of ordinates below x (binary search).
std::size_t count_below(const ZeroTable& table, double x);

/// S(u) + f(u) = N(u) - (u/2pi) log(u/2pi e) - 7/8 with N taken from the table.
double s_plus_f(const ZeroTable& table, double u);

/// Checks |count_main_term(gamma_n) - n| <= 3 for every entry.
void check_rvm_consistency(const ZeroTable& table);

// File formats. Text: one ordinate per line, '#' comments. Binary cache:
// "ZTBL1", u64 LE count, count f64 LE ordinates, f64 LE max_height.

ZeroTable import_zeros(const std::filesystem::path& path);
ZeroTable parse_zeros_text(std::string_view text);
void write_zeros_text(const ZeroTable& table, const std::filesystem::path& path);

void write_zeros_cache(const ZeroTable& table, const std::filesystem::path& path);
ZeroTable read_zeros_cache(const std::filesystem::path& path);

/// Binary cache when the file starts with the cache magic, text otherwise.
ZeroTable load_zeros(const std::filesystem::path& path);
/// Binary cache for a ".bin" extension, text otherwise.
void save_zeros(const ZeroTable& table, const std::filesystem::path& path);

}  // namespace zerosum
