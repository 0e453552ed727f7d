#include "zerosum/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "zerosum/asymptotics.hpp"
#include "zerosum/exp_sums.hpp"
#include "zerosum/parallel.hpp"

namespace zerosum {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v))
    throw InputError(fmt::format("config: '{}' is not a number for key '{}'", text, key));
  return v;
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number(key, text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

bool parse_flag(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "no") return false;
  throw InputError(fmt::format("config: '{}' is not a boolean for key '{}'", text, key));
}

void require_grid(const std::vector<double>& g, const char* name) {
  if (g.empty()) throw InputError(fmt::format("config: {} is empty", name));
  if (!std::is_sorted(g.begin(), g.end()) || std::adjacent_find(g.begin(), g.end()) != g.end())
    throw InputError(fmt::format("config: {} must be strictly ascending", name));
}

}  // namespace

void ExperimentConfig::validate() const {
  require_grid(x_grid, "x_grid");
  require_grid(tau_grid, "tau_grid");
  if (x_grid.front() < 2.0) throw InputError("config: x_grid entries must be at least 2");
  if (!(c > 0.0 && c < 1.0)) throw InputError(fmt::format("config: c = {} outside (0, 1)", c));
  if (!(upper_mult > 0.0)) throw InputError("config: upper_mult must be positive");
  if (diag_exponents.empty()) throw InputError("config: diag_exponent_A is empty");
  for (double a : diag_exponents)
    if (!(a >= 0.0 && a <= 0.5))
      throw InputError(fmt::format("config: diag_exponent_A = {} outside [0, 1/2]", a));
  if (!(t_max >= 20.0 && t_max <= 1e6)) throw InputError("config: t_max outside [20, 1e6]");
  if (!(tol >= 1e-12)) throw InputError("config: tol below 1e-12");
  if (!(perron.c >= 1.05)) throw InputError("config: perron_c below 1.05");
  if (!(perron.T > 0.0 && perron.T <= 1e4)) throw InputError("config: perron_T outside (0, 1e4]");
  eval.validate();
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "zeros_path") cfg.zeros_path = std::string(value);
  else if (key == "t_max") cfg.t_max = parse_number(key, value);
  else if (key == "tol") cfg.tol = parse_number(key, value);
  else if (key == "x_grid") cfg.x_grid = parse_list(key, value);
  else if (key == "tau_grid") cfg.tau_grid = parse_list(key, value);
  else if (key == "c") cfg.c = parse_number(key, value);
  else if (key == "upper_mult") cfg.upper_mult = parse_number(key, value);
  else if (key == "perron_c") cfg.perron.c = parse_number(key, value);
  else if (key == "perron_T") cfg.perron.T = parse_number(key, value);
  else if (key == "diag_exponent_A") cfg.diag_exponents = parse_list(key, value);
  else if (key == "out_csv") cfg.out_csv = std::string(value);
  else if (key == "timing") cfg.timing = parse_flag(key, value);
  else if (key == "quad_tol") cfg.eval.quad_tol = parse_number(key, value);
  else throw InputError(fmt::format("config: unknown key '{}'", key));
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InputError(fmt::format("config line {}: expected key=value", line_no));
    apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  base.validate();
  return base;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open config '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

ZeroTable run_zero_pipeline(const ExperimentConfig& cfg, const Warn& warn, double min_height) {
  const double need = std::max(min_height, 20.0);
  const auto say = [&](const std::string& m) {
    if (warn) warn(m);
  };
  std::error_code ec;
  if (!cfg.zeros_path.empty() && std::filesystem::exists(cfg.zeros_path, ec)) {
    try {
      ZeroTable cached = load_zeros(cfg.zeros_path);
      if (cached.max_height() >= need) return cached;
      say(fmt::format("zero cache '{}' covers {} < {}; recomputing", cfg.zeros_path.string(),
                      cached.max_height(), need));
    } catch (const FormatError& e) {
      say(fmt::format("zero cache '{}' is corrupt ({}); recomputing", cfg.zeros_path.string(),
                      e.what()));
    }
  }
  ZeroTable table = compute_zeros(std::max(cfg.t_max, need), cfg.tol, cfg.eval);
  if (!cfg.zeros_path.empty()) save_zeros(table, cfg.zeros_path);
  return table;
}

Scan parse_scan(std::string_view name) {
  if (name == "theorem1") return Scan::theorem1;
  if (name == "theorem2") return Scan::theorem2;
  if (name == "corollary") return Scan::corollary;
  if (name == "perron") return Scan::perron;
  if (name == "gfun-diag" || name == "gfun_diag") return Scan::gfun_diag;
  throw InputError(fmt::format("unknown scan '{}'", name));
}

const char* scan_name(Scan which) {
  switch (which) {
    case Scan::theorem1: return "theorem1";
    case Scan::theorem2: return "theorem2";
    case Scan::corollary: return "corollary";
    case Scan::perron: return "perron";
    case Scan::gfun_diag: return "gfun_diag";
  }
  return "unknown";
}

double required_height(const ExperimentConfig& cfg, Scan which) {
  const double xmax = cfg.x_grid.back();
  switch (which) {
    case Scan::theorem2:
    case Scan::corollary: return 2.0 * xmax;
    case Scan::gfun_diag: return std::max(xmax, 100.0);
    default: return xmax;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Cell {
  double x;
  double tau;
};

void finish(ExperimentRecord& r) {
  r.err_abs = std::abs(r.sum - r.main);
  r.ratio = r.paper_bound > 0.0 ? r.err_abs / r.paper_bound : 0.0;
}

std::vector<Cell> grid(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (double x : cfg.x_grid)
    for (double t : cfg.tau_grid) cells.push_back({x, t});
  return cells;
}

// Evaluates body(cell) for every cell in parallel, keeping grid order.
template <class Body>
std::vector<ExperimentRecord> evaluate(const std::vector<Cell>& cells, bool timing, Body body) {
  std::vector<ExperimentRecord> out(cells.size());
  parallel_for(cells.size(), [&](std::size_t k) {
    const auto start = Clock::now();
    out[k] = body(cells[k]);
    if (timing)
      out[k].runtime_ms =
          std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  });
  return out;
}

double max_ratio(const std::vector<ExperimentRecord>& recs) {
  double m = 0.0;
  for (const auto& r : recs) m = std::max(m, r.ratio);
  return m;
}

ScanResult scan_theorem1(const ExperimentConfig& cfg, const ZeroTable& table) {
  ScanResult res;
  res.records = evaluate(grid(cfg), cfg.timing, [&](const Cell& c) {
    const auto m = error_term(table, c.x, c.tau);
    ExperimentRecord r;
    r.experiment = "theorem1";
    r.x = c.x;
    r.tau = c.tau;
    r.regime = c.x >= 5.0 * std::abs(c.tau) ? "main_term_dominant" : "oscillation_dominant";
    r.sum = m.sum.z;
    r.main = m.main.z;
    r.paper_bound = m.paper_bound;
    finish(r);
    return r;
  });
  res.summary["max_ratio"] = max_ratio(res.records);
  return res;
}

ExperimentRecord theorem2_record(const ZeroTable& table, double x, double tau, RegimeLabel::Kind kind,
                                 const ExperimentConfig& cfg) {
  const double y = 2.0 * x;
  ExperimentRecord r;
  r.experiment = "theorem2";
  r.x = x;
  r.tau = tau;
  r.regime = regime_name(kind);
  r.sum = sum_range(table, {x, y, tau}).value.z;
  if (kind == RegimeLabel::Kind::small_tau) {
    r.main = main_term_integral(x, y, tau, cfg.eval.quad_tol).z;
    r.paper_bound = std::log(x) * std::log(x);
  } else if (kind == RegimeLabel::Kind::large_tau) {
    r.main = theorem2_main(x, y, tau).z;
    r.paper_bound = theorem2_error_bound(x, y, tau);
  }
  finish(r);
  return r;
}

ScanResult scan_theorem2(const ExperimentConfig& cfg, const ZeroTable& table) {
  // Cells within 5% of the regime boundary are reported under both formulas.
  struct Item {
    Cell cell;
    RegimeLabel::Kind kind;
  };
  std::vector<Item> items;
  for (const auto& c : grid(cfg)) {
    const auto label = classify_regime(c.x, c.tau, cfg.c, cfg.upper_mult);
    const bool near = std::abs(std::abs(c.tau) - label.threshold) <= 0.05 * label.threshold &&
                      std::abs(c.tau) <= label.upper;
    if (near) {
      items.push_back({c, RegimeLabel::Kind::small_tau});
      items.push_back({c, RegimeLabel::Kind::large_tau});
    } else {
      items.push_back({c, label.kind});
    }
  }
  ScanResult res;
  std::vector<ExperimentRecord> out(items.size());
  parallel_for(items.size(), [&](std::size_t k) {
    const auto start = Clock::now();
    out[k] = theorem2_record(table, items[k].cell.x, items[k].cell.tau, items[k].kind, cfg);
    if (cfg.timing)
      out[k].runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  });
  res.records = std::move(out);
  double small = 0.0, large = 0.0;
  for (const auto& r : res.records) {
    if (r.regime == "small_tau") small = std::max(small, r.ratio);
    if (r.regime == "large_tau") large = std::max(large, r.ratio);
  }
  res.summary["max_ratio_small_tau"] = small;
  res.summary["max_ratio_large_tau"] = large;
  return res;
}

ScanResult scan_corollary(const ExperimentConfig& cfg, const ZeroTable& table) {
  std::vector<Cell> cells;
  for (double x : cfg.x_grid) cells.push_back({x, 2.0 * x});
  ScanResult res;
  res.records = evaluate(cells, cfg.timing, [&](const Cell& c) {
    ExperimentRecord r;
    r.experiment = "corollary";
    r.x = c.x;
    r.tau = c.tau;
    r.regime = regime_name(classify_regime(c.x, c.tau, cfg.c, cfg.upper_mult).kind);
    r.sum = sum_range(table, {c.x, 2.0 * c.x, c.tau}).value.z;
    r.main = cplx(0.0, 0.0);
    r.paper_bound = std::sqrt(c.x);
    finish(r);
    return r;
  });
  if (res.records.size() >= 2) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : res.records) pts.emplace_back(r.x, std::abs(r.sum));
    res.summary["fitted_exponent"] = fit_exponent(pts);
  }
  res.summary["max_ratio"] = max_ratio(res.records);
  return res;
}

ScanResult scan_perron(const ExperimentConfig& cfg, const ZeroTable& table) {
  ScanResult res;
  res.records = evaluate(grid(cfg), cfg.timing, [&](const Cell& c) {
    PerronParams p = cfg.perron;
    p.x = c.x;
    p.tau = c.tau;
    const auto value = perron_truncated(table, p, cfg.eval);
    const auto bound = perron_error_bound(table, p);
    ExperimentRecord r;
    r.experiment = "perron";
    r.x = c.x;
    r.tau = c.tau;
    r.regime = bound.coverage_warning ? "coverage_warning" : "covered";
    r.sum = sum_to(table, c.x, c.tau).value.z;
    r.main = value.z;
    r.paper_bound = bound.table_bound + value.abs_err;
    finish(r);
    return r;
  });
  res.summary["max_ratio"] = max_ratio(res.records);
  return res;
}

ScanResult scan_gfun_diag(const ExperimentConfig& cfg, const ZeroTable& table) {
  // sup |E| / (|tau|^A sqrt x) over cells with 2 <= x <= tau^2, and
  // sup |G(1/2 + it)| / t^A over t = 2, 3, ..., 100.
  std::vector<Cell> cells;
  for (const auto& c : grid(cfg))
    if (c.tau != 0.0 && c.x <= c.tau * c.tau) cells.push_back(c);
  std::vector<ErrorMeasurement> errs(cells.size());
  parallel_for(cells.size(), [&](std::size_t k) { errs[k] = error_term(table, cells[k].x, cells[k].tau); });

  std::vector<double> ts;
  for (int t = 2; t <= 100; ++t) ts.push_back(t);
  std::vector<GEvaluation> gs(ts.size());
  parallel_for(ts.size(), [&](std::size_t k) {
    const double X = std::clamp(ts[k] * ts[k], 20.0, table.max_height());
    gs[k] = g_continued(table, cplx(0.5, ts[k]), X);
  });

  ScanResult res;
  for (double A : cfg.diag_exponents) {
    ExperimentRecord e;
    e.experiment = "gfun_diag_E";
    e.regime = fmt::format("A={}", A);
    bool any = false;
    for (const auto& m : errs) {
      const double bound = std::pow(std::abs(m.tau), A) * std::sqrt(m.x);
      const double ratio = m.err_abs / bound;
      if (!any || ratio > e.ratio) {
        any = true;
        e.x = m.x;
        e.tau = m.tau;
        e.sum = m.sum.z;
        e.main = m.main.z;
        e.err_abs = m.err_abs;
        e.paper_bound = bound;
        e.ratio = ratio;
      }
    }
    ExperimentRecord g;
    g.experiment = "gfun_diag_G";
    g.regime = e.regime;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double bound = std::pow(ts[k], A);
      const double ratio = std::abs(gs[k].value.z) / bound;
      if (k == 0 || ratio > g.ratio) {
        g.x = ts[k];
        g.tau = 0.0;
        g.sum = gs[k].value.z;
        g.main = cplx(0.0, 0.0);
        g.err_abs = std::abs(gs[k].value.z);
        g.paper_bound = bound;
        g.ratio = ratio;
      }
    }
    res.summary[fmt::format("sup_E_ratio_A={}", A)] = any ? e.ratio : 0.0;
    res.summary[fmt::format("sup_G_ratio_A={}", A)] = g.ratio;
    if (any) res.records.push_back(e);
    res.records.push_back(g);
  }
  return res;
}

}  // namespace

ScanResult run_scan(const ExperimentConfig& cfg, const ZeroTable& table, Scan which) {
  cfg.validate();
  table.require_covered(required_height(cfg, which), scan_name(which));
  switch (which) {
    case Scan::theorem1: return scan_theorem1(cfg, table);
    case Scan::theorem2: return scan_theorem2(cfg, table);
    case Scan::corollary: return scan_corollary(cfg, table);
    case Scan::perron: return scan_perron(cfg, table);
    case Scan::gfun_diag: return scan_gfun_diag(cfg, table);
  }
  throw InputError("run_scan: unknown scan");
}

std::string format_csv(const std::vector<ExperimentRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records)
    out += fmt::format("{},{:.11e},{:.11e},{},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e}\n",
                       r.experiment, r.x, r.tau, r.regime, r.sum.real(), r.sum.imag(),
                       r.main.real(), r.main.imag(), r.err_abs, r.paper_bound, r.ratio,
                       r.runtime_ms);
  return out;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  out.flush();
  if (!out) throw IoError(fmt::format("write error on '{}'", path.string()));
}

}  // namespace

void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
  write_text(path, format_csv(records));
}

void emit_plot_data(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
  std::string out = "# x abs_sum abs_main err_abs bound\n";
  for (const auto& r : records)
    out += fmt::format("{:.11e} {:.11e} {:.11e} {:.11e} {:.11e}\n", r.x, std::abs(r.sum),
                       std::abs(r.main), r.err_abs, r.paper_bound);
  write_text(path, out);
}

}  // namespace zerosum
