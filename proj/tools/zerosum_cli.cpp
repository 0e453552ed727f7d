// zerosum: exponential sums over zeta zero ordinates.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "zerosum/asymptotics.hpp"
#include "zerosum/exp_sums.hpp"
#include "zerosum/gseries.hpp"
#include "zerosum/harness.hpp"
#include "zerosum/oscillatory.hpp"
#include "zerosum/zeros.hpp"

using namespace zerosum;

namespace {

void warn(const std::string& msg) { fmt::print(stderr, "warning: {}\n", msg); }

std::string fmt_c(cplx z) { return fmt::format("{:.12e} {:+.12e}i", z.real(), z.imag()); }

int cmd_zeros_compute(double t_max, double tol, const std::string& out, unsigned workers) {
  const auto table = compute_zeros(t_max, tol, {}, workers);
  save_zeros(table, out);
  fmt::print("{} ordinates below {} written to {}\n", table.size(), t_max, out);
  if (!table.empty()) fmt::print("first ordinate {:.12f}\n", table[0]);
  return 0;
}

int cmd_zeros_import(const std::string& in, const std::string& out) {
  const auto table = import_zeros(in);
  check_rvm_consistency(table);
  save_zeros(table, out);
  fmt::print("{} ordinates imported (max height {:.9f}) to {}\n", table.size(), table.max_height(), out);
  return 0;
}

int cmd_sum(const std::string& zeros, double x, std::optional<double> y, double tau) {
  const auto table = load_zeros(zeros);
  if (y) {
    const auto r = sum_range(table, {x, *y, tau});
    fmt::print("sum      {}\nterms    {}\ncomp_err {:.3e}\n", fmt_c(r.value.z), r.terms, r.comp_err);
    return 0;
  }
  const auto r = sum_to(table, x, tau);
  fmt::print("sum      {}\nterms    {}\ncomp_err {:.3e}\n", fmt_c(r.value.z), r.terms, r.comp_err);
  if (x >= 2.0) {
    const auto m = error_term(table, x, tau);
    fmt::print("main     {}\nerr_abs  {:.12e}\nbound    {:.12e}\nratio    {:.12e}\n", fmt_c(m.main.z),
               m.err_abs, m.paper_bound, m.ratio);
  }
  return 0;
}

int cmd_scan(const std::string& which_name, const std::string& config, const std::string& csv,
             const std::string& plot, const std::string& zeros, bool timing) {
  const Scan which = parse_scan(which_name);
  ExperimentConfig cfg = config.empty() ? ExperimentConfig{} : load_config(config);
  if (!zeros.empty()) cfg.zeros_path = zeros;
  if (!csv.empty()) cfg.out_csv = csv;
  if (timing) cfg.timing = true;
  cfg.validate();
  const auto table = run_zero_pipeline(cfg, warn, required_height(cfg, which));
  const auto res = run_scan(cfg, table, which);
  if (cfg.out_csv.empty())
    fmt::print("{}", format_csv(res.records));
  else
    emit_csv(res.records, cfg.out_csv);
  if (!plot.empty()) emit_plot_data(res.records, plot);
  for (const auto& [key, value] : res.summary) fmt::print(stderr, "{} = {:.6g}\n", key, value);
  return 0;
}

int cmd_check_stationary(double x, double y, double tau) {
  int status = 0;
  OscillatoryIntegrand fresnel;
  fresnel.f = [](double t) { return t * t; };
  fresnel.df = [](double t) { return 2.0 * t; };
  fresnel.d2f = [](double) { return 2.0; };
  fresnel.phi = [](double) { return cplx(1.0, 0.0); };
  fresnel.a = -100.0;
  fresnel.b = 100.0;
  fresnel.A = 0.5;
  fresnel.U = 200.0;
  const auto sp = stationary_phase_approx(fresnel);
  const auto q = integrate_oscillatory(fresnel, 1e-10);
  fmt::print("fresnel [-100, 100]: quadrature {}  main {}  |diff| {:.3e}\n", fmt_c(q.z),
             fmt_c(sp.main.z), std::abs(q.z - sp.main.z));

  double worst = 0.0;
  for (const auto& pp : theorem2_window(x, y, tau)) {
    const auto g = theorem2_integrand(static_cast<double>(pp.n), tau, x, y);
    const auto s = stationary_phase_approx(g);
    const auto v = integrate_oscillatory(g, 1e-8);
    const double ratio = std::abs(v.z - s.main.z) / s.error_budget;
    worst = std::max(worst, ratio);
    fmt::print("n = {:>6}  t0 = {:.6f}  |quad - main| = {:.6e}  HE = {:.6e}  ratio {:.4f}\n", pp.n,
               s.t0, std::abs(v.z - s.main.z), s.error_budget, ratio);
  }
  fmt::print("max ratio {:.6f}\n", worst);
  if (worst > 10.0) status = 3;
  return status;
}

int cmd_check_contour(const std::string& zeros, double x, double y, double tau) {
  const auto table = load_zeros(zeros);
  const EvalConfig cfg;
  const auto r = contour_check(table, x, y, tau, cfg);
  fmt::print("I1 {}\nI2 {}\nI3 {}\nI4 {}\n", fmt_c(r.I1.z), fmt_c(r.I2.z), fmt_c(r.I3.z), fmt_c(r.I4.z));
  fmt::print("total    {}\nzero sum {}\nzeros    {}\ndiscrepancy {:.3e}\n", fmt_c(r.total.z),
             fmt_c(r.zero_sum.z), r.zeros_enclosed, r.discrepancy);
  return r.discrepancy <= cfg.quad_tol * 1e3 ? 0 : 3;
}

int cmd_check_residue(const std::string& zeros, double x, double tau) {
  const auto table = load_zeros(zeros);
  const auto res = residue_term(x, tau);
  const auto closed = main_term_closed(x, tau);
  const auto s = sum_to(table, x, tau);
  fmt::print("residue  {}\nclosed   {}\nsum      {}\n|sum - residue| {:.6e}\n", fmt_c(res.z),
             fmt_c(closed.z), fmt_c(s.value.z), std::abs(s.value.z - res.z));
  return res.z == closed.z ? 0 : 3;
}

int cmd_gfun(const std::string& zeros, double sigma, double t, double X) {
  const auto table = load_zeros(zeros);
  const cplx s(sigma, t);
  const auto direct = g_direct(table, s, X);
  fmt::print("partial sum  {}\n", fmt_c(direct.value.z));
  if (sigma > 0.0) {
    const auto g = g_continued(table, s, X);
    fmt::print("G(s)         {}\ntail_err     {:.3e}\n", fmt_c(g.value.z), g.tail_err);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential sums over the ordinates of zeta zeros"};
  app.require_subcommand(1);

  auto* zeros = app.add_subcommand("zeros", "Compute or import zero tables");
  zeros->require_subcommand(1);
  double t_max = 1000.0, tol = 1e-10;
  unsigned workers = 0;
  std::string out, in;
  auto* compute = zeros->add_subcommand("compute", "Locate zeros of Z(t) up to a height");
  compute->add_option("--t-max", t_max, "Largest height")->required();
  compute->add_option("--tol", tol, "Bisection tolerance");
  compute->add_option("--out", out, "Output path (.bin for the binary cache)")->required();
  compute->add_option("--workers", workers, "Worker threads (0 = all cores)");
  auto* import = zeros->add_subcommand("import", "Validate a text table of ordinates");
  import->add_option("--in", in, "Input text file")->required()->check(CLI::ExistingFile);
  import->add_option("--out", out, "Output path")->required();

  std::string zeros_path;
  double x = 0.0, tau = 0.0;
  std::optional<double> y;
  auto* sum = app.add_subcommand("sum", "Sum gamma^{-i tau} below x or over [x, y)");
  sum->add_option("--zeros", zeros_path)->required();
  sum->add_option("--x", x)->required();
  sum->add_option("--y", y);
  sum->add_option("--tau", tau)->required();

  std::string which, config, csv, plot;
  bool timing = false;
  auto* scan = app.add_subcommand("scan", "Grid experiments");
  scan->add_option("which", which, "theorem1|theorem2|corollary|perron|gfun-diag")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "corollary", "perron", "gfun-diag"}));
  scan->add_option("--config", config, "key=value configuration file");
  scan->add_option("--csv", csv, "CSV output (stdout when absent)");
  scan->add_option("--plot", plot, "Whitespace-separated plot data");
  scan->add_option("--zeros", zeros_path, "Zero cache, overrides zeros_path");
  scan->add_flag("--timing", timing, "Record runtime_ms per cell");

  std::string check_kind;
  double cy = 0.0;
  auto* check = app.add_subcommand("check", "Stationary phase, contour and residue checks");
  check->add_option("kind", check_kind, "stationary|contour|residue")
      ->required()
      ->check(CLI::IsMember({"stationary", "contour", "residue"}));
  check->add_option("--zeros", zeros_path);
  check->add_option("--x", x);
  check->add_option("--y", cy);
  check->add_option("--tau", tau);

  double sigma = 0.5, t = 10.0, cutoff = 100.0;
  auto* gfun = app.add_subcommand("gfun", "G(s) = sum gamma^{-s} and its continuation");
  gfun->add_option("--zeros", zeros_path)->required();
  gfun->add_option("--sigma", sigma)->required();
  gfun->add_option("--t", t)->required();
  gfun->add_option("--X", cutoff, "Cutoff X of the partial sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*compute) return cmd_zeros_compute(t_max, tol, out, workers);
    if (*import) return cmd_zeros_import(in, out);
    if (*sum) return cmd_sum(zeros_path, x, y, tau);
    if (*scan) return cmd_scan(which, config, csv, plot, zeros_path, timing);
    if (*check) {
      if (check_kind == "stationary") {
        if (x == 0.0) {
          x = 100.0;
          cy = 190.0;
          tau = 200.0;
        }
        return cmd_check_stationary(x, cy, tau);
      }
      if (zeros_path.empty()) throw InputError("check: --zeros is required");
      if (check_kind == "contour") {
        if (x == 0.0) {
          x = 20.0;
          cy = 30.0;
        }
        return cmd_check_contour(zeros_path, x, cy, tau);
      }
      if (x == 0.0) x = 100.0;
      return cmd_check_residue(zeros_path, x, tau);
    }
    if (*gfun) return cmd_gfun(zeros_path, sigma, t, cutoff);
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
