#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zerosum/gseries.hpp"
#include "zerosum/types.hpp"
#include "zerosum/zeros.hpp"

namespace zerosum {

struct ExperimentConfig {
  std::filesystem::path zeros_path = "zeros.bin";
  double t_max = 10000.0;  // height computed when the cache is missing or short
  double tol = 1e-10;
  std::vector<double> x_grid{50, 100, 200, 500, 1000, 2000, 5000};
  std::vector<double> tau_grid{1, 2, 5, 10, 30, 100};
  double c = 0.9;
  double upper_mult = 0.5;
  PerronParams perron{};
  std::vector<double> diag_exponents{0.0, 0.25, 0.5};
  std::filesystem::path out_csv;
  bool timing = false;  // fill runtime_ms; off keeps the CSV reproducible
  EvalConfig eval{};

  /// Throws InputError for empty or unsorted grids, c outside (0, 1),
  /// exponents outside [0, 1/2] and the like.
  void validate() const;
};

/// key=value lines, '#' comments, blank lines ignored. Lists are comma
/// separated. Keys: zeros_path, t_max, tol, x_grid, tau_grid, c, upper_mult,
/// perron_c, perron_T, diag_exponent_A, out_csv, timing, quad_tol.
/// Starts from `base`, so command-line defaults can be layered.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});
/// Applies one key=value setting; throws InputError for unknown keys.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

using Warn = std::function<void(const std::string&)>;

/// Cached table at cfg.zeros_path when it loads and covers min_height;
/// otherwise compute_zeros(max(cfg.t_max, min_height), cfg.tol) and rewrite
/// the cache. A corrupt cache is reported through `warn` and recomputed.
ZeroTable run_zero_pipeline(const ExperimentConfig& cfg, const Warn& warn = {},
                            double min_height = 0.0);

struct ExperimentRecord {
  std::string experiment;
  double x = 0.0;
  double tau = 0.0;
  std::string regime;
  cplx sum{};
  cplx main{};
  double err_abs = 0.0;
  double paper_bound = 0.0;
  double ratio = 0.0;  // err_abs / paper_bound, 0 when the bound is 0
  double runtime_ms = 0.0;
};

enum class Scan { theorem1, theorem2, corollary, perron, gfun_diag };

Scan parse_scan(std::string_view name);
const char* scan_name(Scan which);

struct ScanResult {
  std::vector<ExperimentRecord> records;
  std::map<std::string, double> summary;  // max ratios, fitted exponent, ...
};

/// Height the table must cover for a scan.
double required_height(const ExperimentConfig& cfg, Scan which);

/// Runs one grid experiment. Cells evaluate in parallel; records come back in
/// grid order. Throws CoverageError before any work if the table is short.
ScanResult run_scan(const ExperimentConfig& cfg, const ZeroTable& table, Scan which);

inline constexpr std::string_view kCsvHeader =
    "experiment,x,tau,regime,sum_re,sum_im,main_re,main_im,err_abs,paper_bound,ratio,runtime_ms";

std::string format_csv(const std::vector<ExperimentRecord>& records);
void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);
/// Columns: x |sum| |main| err_abs bound.
void emit_plot_data(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);

}  // namespace zerosum
