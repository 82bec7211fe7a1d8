// ineq: inequality indices, analytic Lorenz families, kinetic exchange
// simulations, and heavy-tail fitting, behind one seeded CLI.
//
// Exit codes: 0 success, 2 usage error, 3 input validation failure,
// 4 numeric failure.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ineq/analytic.hpp"
#include "ineq/errors.hpp"
#include "ineq/fitting.hpp"
#include "ineq/kinetic.hpp"
#include "ineq/metrics.hpp"
#include "ineq/pipeline.hpp"

namespace {

using ineq::DatasetFormat;
using ineq::validation_error;
using nlohmann::ordered_json;

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_plot(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out << content;
  out.flush();
  if (!out) throw validation_error("failed while writing: " + path);
}

// Grid flags take "start:stop:count" with count evenly spaced values,
// endpoints included; count=1 means just {start}.
std::vector<double> parse_grid(const std::string& text,
                               const std::string& flag) {
  auto bad = [&]() -> void {
    throw CLI::ValidationError(
        flag, "expected start:stop:count, got '" + text + "'");
  };
  const std::size_t c1 = text.find(':');
  const std::size_t c2 =
      c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    bad();
  auto num = [&](std::string_view tok, double& out) {
    const char* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end) bad();
  };
  double start = 0.0;
  double stop = 0.0;
  double count_raw = 0.0;
  num(std::string_view(text).substr(0, c1), start);
  num(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), stop);
  num(std::string_view(text).substr(c2 + 1), count_raw);
  const long long count = static_cast<long long>(count_raw);
  if (count < 1 || static_cast<double>(count) != count_raw || count > 100000)
    bad();
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    grid.push_back(start);
  } else {
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (long long i = 0; i < count; ++i)
      grid.push_back(start + static_cast<double>(i) * step);
  }
  return grid;
}

ordered_json report_fields(const ineq::IndexReport& r) {
  ordered_json j;
  j["g"] = std::stod(ineq::format_number(r.g));
  j["k"] = std::stod(ineq::format_number(r.k));
  j["n"] = r.n;
  j["mean"] = std::stod(ineq::format_number(r.mean));
  return j;
}

void write_lorenz(const std::string& path, const ineq::WealthSample& values) {
  const auto curve = ineq::build_lorenz(values);
  std::string out = "x,y\n";
  for (const auto& p : curve.points)
    out += fmt_plot(p.x) + "," + fmt_plot(p.y) + "\n";
  write_output(path, out);
}

void write_histogram(const std::string& path, const ineq::WealthSample& values,
                     int bins_per_decade) {
  ineq::WealthSample positive;
  positive.reserve(values.size());
  for (double x : values)
    if (x > 0.0) positive.push_back(x);
  const auto h = ineq::log_binned_histogram(positive, bins_per_decade);
  std::string out = "bin_lo,bin_hi,density\n";
  for (std::size_t i = 0; i < h.densities.size(); ++i)
    out += fmt_plot(h.bin_edges[i]) + "," + fmt_plot(h.bin_edges[i + 1]) +
           "," + fmt_plot(h.densities[i]) + "\n";
  write_output(path, out);
}

// Plumbing shared by every subcommand; flags are validated by CLI11 and the
// per-command callbacks before any computation starts.
struct RunConfig {
  std::string output = "-";
  std::string format = "csv";
  std::uint64_t seed = 42;
};

void add_common(CLI::App* cmd, RunConfig& opts) {
  cmd->add_option("-o,--output", opts.output,
                  "Output path, or - for stdout")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// ---------------------------------------------------------------- metrics

struct MetricsOpts {
  std::string input;
  bool two_column = false;
  std::string lorenz_out;
  RunConfig common;
};

void run_metrics(const MetricsOpts& o) {
  const auto ds = ineq::load_dataset(
      o.input,
      o.two_column ? DatasetFormat::two_column : DatasetFormat::one_column);
  const auto report = ineq::indices_report(ds.values);
  if (o.common.format == "csv")
    write_output(o.common.output, ineq::report_csv(report));
  else
    write_output(o.common.output, report_fields(report).dump() + "\n");
  if (!o.lorenz_out.empty()) write_lorenz(o.lorenz_out, ds.values);
}

// --------------------------------------------------------------- simulate

struct SimulateOpts {
  std::string model;
  double lambda = 0.0;
  double delta = 1.0;
  int agents = 1000;
  ineq::SimulationSchedule schedule;
  std::string lorenz_out;
  std::string histogram_out;
  int bins_per_decade = 5;
  RunConfig common;
};

std::string simulate_echo(const SimulateOpts& o) {
  std::string line = "# ineq simulate model=" + o.model;
  if (o.model == "cc")
    line += " lambda=" + ineq::format_number(o.lambda);
  else
    line += " delta=" + ineq::format_number(o.delta);
  line += " agents=" + std::to_string(o.agents) +
          " therm_sweeps=" + std::to_string(o.schedule.therm_sweeps) +
          " sample_count=" + std::to_string(o.schedule.sample_count) +
          " sample_stride=" + std::to_string(o.schedule.sample_stride) +
          " seed=" + std::to_string(o.common.seed) + "\n";
  return line;
}

void run_simulate(const SimulateOpts& o) {
  const auto state =
      o.model == "cc"
          ? ineq::run_steady_state(
                ineq::CCParams{o.lambda, o.agents, o.common.seed}, o.schedule)
          : ineq::run_steady_state(
                ineq::CCMParams{o.delta, o.agents, o.common.seed}, o.schedule);
  if (o.common.format == "csv") {
    std::string out = simulate_echo(o);
    out += "# g=" + ineq::format_number(state.report.g) +
           " k=" + ineq::format_number(state.report.k) +
           " n=" + std::to_string(state.report.n) +
           " mean=" + ineq::format_number(state.report.mean) + "\n";
    for (double m : state.pooled_wealth) out += fmt_full(m) + "\n";
    write_output(o.common.output, out);
  } else {
    ordered_json j;
    j["command"] = "simulate";
    j["model"] = o.model;
    if (o.model == "cc")
      j["lambda"] = o.lambda;
    else
      j["delta"] = o.delta;
    j["agents"] = o.agents;
    j["therm_sweeps"] = o.schedule.therm_sweeps;
    j["sample_count"] = o.schedule.sample_count;
    j["sample_stride"] = o.schedule.sample_stride;
    j["seed"] = o.common.seed;
    j["report"] = report_fields(state.report);
    j["conservation_error"] = state.conservation_error;
    j["pooled_wealth"] = state.pooled_wealth;
    write_output(o.common.output, j.dump() + "\n");
  }
  if (!o.lorenz_out.empty()) write_lorenz(o.lorenz_out, state.pooled_wealth);
  if (!o.histogram_out.empty())
    write_histogram(o.histogram_out, state.pooled_wealth, o.bins_per_decade);
}

// ------------------------------------------------------------------ sweep

struct SweepOpts {
  std::string model;
  std::string lambda_grid;
  std::string delta_grid;
  int agents = 1000;
  ineq::SimulationSchedule schedule;
  int configs = 1;
  bool parallel = false;
  double g_max = 0.70;
  RunConfig common;
};

void run_sweep(const SweepOpts& o) {
  ineq::GKScatter scatter;
  std::string grid_text;
  if (o.model == "cc") {
    grid_text = o.lambda_grid;
    const auto grid = parse_grid(o.lambda_grid, "--lambda-grid");
    scatter =
        ineq::sweep_lambda(grid, o.agents, o.schedule, o.common.seed, o.parallel);
  } else {
    grid_text = o.delta_grid;
    const auto grid = parse_grid(o.delta_grid, "--delta-grid");
    scatter = ineq::sweep_delta(grid, o.agents, o.schedule, o.common.seed,
                                o.configs, o.parallel);
  }
  std::optional<ineq::LinearFit> fit;
  if (scatter.records.size() >= 2) {
    try {
      fit = ineq::fit_gk_line(scatter, o.g_max);
    } catch (const std::exception& e) {
      std::cerr << "note: fit omitted (" << e.what() << ")\n";
    }
  }
  if (o.common.format == "csv") {
    std::string out = "# ineq sweep model=" + o.model + " grid=" + grid_text +
                      " agents=" + std::to_string(o.agents) +
                      " therm_sweeps=" + std::to_string(o.schedule.therm_sweeps) +
                      " sample_count=" + std::to_string(o.schedule.sample_count) +
                      " sample_stride=" + std::to_string(o.schedule.sample_stride) +
                      " seed=" + std::to_string(o.common.seed);
    if (o.model == "ccm") out += " configs=" + std::to_string(o.configs);
    out += "\n";
    out += ineq::scatter_csv(scatter, fit ? &*fit : nullptr);
    write_output(o.common.output, out);
  } else {
    write_output(o.common.output,
                 ineq::scatter_json(scatter, fit ? &*fit : nullptr));
  }
}

// -------------------------------------------------------------------- fit

struct FitOpts {
  std::string kind;
  std::string input;
  bool two_column = false;
  bool rescale = false;
  bool no_rescale = false;
  int min_tail = 50;
  int max_candidates = 256;
  double xmin = 0.0;
  bool xmin_given = false;
  std::string histogram_out;
  int bins_per_decade = 5;
  RunConfig common;
};

void run_fit(const FitOpts& o) {
  const auto ds = ineq::load_dataset(
      o.input,
      o.two_column ? DatasetFormat::two_column : DatasetFormat::one_column);
  // Lognormal fits rescale by default (the universal-curve workflow);
  // tail fits run on raw values by default (alpha is scale-invariant).
  const bool rescale =
      o.kind == "lognormal" ? !o.no_rescale : o.rescale;
  ineq::RescaledSample rs;
  const ineq::WealthSample* working = &ds.values;
  if (rescale) {
    rs = ineq::rescale_by_mean(ds.values);
    working = &rs.values;
  }

  std::string csv;
  ordered_json j;
  j["command"] = "fit";
  j["kind"] = o.kind;
  j["rescaled"] = rescale;
  if (rescale) {
    j["original_mean"] = std::stod(ineq::format_number(rs.original_mean));
    j["dropped_zeros"] = rs.dropped_zeros;
    csv += "# rescaled: original_mean=" +
           ineq::format_number(rs.original_mean) +
           " dropped_zeros=" + std::to_string(rs.dropped_zeros) + "\n";
  }
  if (o.kind == "lognormal") {
    const auto fit = ineq::fit_lognormal(*working);
    csv += "mu,sigma,n_used\n";
    csv += ineq::format_number(fit.mu) + "," +
           ineq::format_number(fit.sigma) + "," +
           std::to_string(fit.n_used) + "\n";
    j["mu"] = std::stod(ineq::format_number(fit.mu));
    j["sigma"] = std::stod(ineq::format_number(fit.sigma));
    j["n_used"] = fit.n_used;
  } else {
    const auto fit =
        o.xmin_given
            ? ineq::fit_powerlaw_at(*working, o.xmin)
            : ineq::fit_powerlaw_tail(*working, o.min_tail,
                                      o.max_candidates);
    csv += "alpha,xmin,n_tail,ks\n";
    csv += ineq::format_number(fit.alpha) + "," +
           ineq::format_number(fit.xmin) + "," +
           std::to_string(fit.n_tail) + "," + ineq::format_number(fit.ks) +
           "\n";
    j["alpha"] = std::stod(ineq::format_number(fit.alpha));
    j["xmin"] = std::stod(ineq::format_number(fit.xmin));
    j["n_tail"] = fit.n_tail;
    j["ks"] = std::stod(ineq::format_number(fit.ks));
  }
  if (o.common.format == "csv")
    write_output(o.common.output, csv);
  else
    write_output(o.common.output, j.dump() + "\n");
  if (!o.histogram_out.empty())
    write_histogram(o.histogram_out, *working, o.bins_per_decade);
}

// --------------------------------------------------------------- analytic

struct AnalyticOpts {
  std::string family;
  double p = 2.0;
  bool p_given = false;
  double t = 0.0;
  bool t_given = false;
  double sigma = 1.0;
  bool sigma_given = false;
  RunConfig common;
};

void run_analytic(const AnalyticOpts& o) {
  ineq::GKPoint point{};
  std::optional<double> param;
  if (o.family == "power") {
    if (!o.p_given)
      throw CLI::RequiredError("--p (required for --family power)");
    point = ineq::gk_power(o.p);
    param = o.p;
  } else if (o.family == "arc") {
    if (!o.t_given)
      throw CLI::RequiredError("--t (required for --family arc)");
    point = ineq::gk_circle_arc(o.t);
    param = o.t;
  } else if (o.family == "exponential") {
    point = ineq::gk_exponential();
  } else {
    if (!o.sigma_given)
      throw CLI::RequiredError("--sigma (required for --family lognormal)");
    point = ineq::gk_lognormal(o.sigma);
    param = o.sigma;
  }
  if (o.common.format == "csv") {
    std::string out = "family,param,g,k\n" + o.family + ",";
    if (param) out += ineq::format_number(*param);
    out += "," + ineq::format_number(point.g) + "," +
           ineq::format_number(point.k) + "\n";
    write_output(o.common.output, out);
  } else {
    ordered_json j;
    j["family"] = o.family;
    if (param)
      j["param"] = *param;
    else
      j["param"] = nullptr;
    j["g"] = std::stod(ineq::format_number(point.g));
    j["k"] = std::stod(ineq::format_number(point.k));
    write_output(o.common.output, j.dump() + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Inequality indices (Gini g, Kolkata k), analytic Lorenz families, "
      "kinetic exchange simulations, and heavy-tail fits"};
  app.require_subcommand(1);

  MetricsOpts metrics_opts;
  auto* metrics = app.add_subcommand(
      "metrics", "Compute g, k, n, mean for a dataset file");
  metrics->add_option("-i,--input", metrics_opts.input, "Dataset file")
      ->required();
  metrics->add_flag("--two-column", metrics_opts.two_column,
                    "Input lines are value,count");
  metrics->add_option("--lorenz-out", metrics_opts.lorenz_out,
                      "Write the Lorenz curve points (x,y CSV) here");
  add_common(metrics, metrics_opts.common);
  metrics->callback([&] { run_metrics(metrics_opts); });

  SimulateOpts sim_opts;
  auto* simulate = app.add_subcommand(
      "simulate", "Run one kinetic exchange model to steady state");
  simulate->add_option("--model", sim_opts.model, "cc or ccm")
      ->required()
      ->check(CLI::IsMember({"cc", "ccm"}));
  auto* sim_lambda = simulate->add_option(
      "--lambda", sim_opts.lambda, "CC saving propensity, in [0,1)");
  auto* sim_delta = simulate->add_option(
      "--delta", sim_opts.delta, "CCM disorder exponent, > -1");
  simulate->add_option("--agents", sim_opts.agents, "Number of agents")
      ->capture_default_str();
  simulate
      ->add_option("--therm", sim_opts.schedule.therm_sweeps,
                   "Thermalization sweeps")
      ->capture_default_str();
  simulate
      ->add_option("--samples", sim_opts.schedule.sample_count,
                   "Snapshots pooled into the output")
      ->capture_default_str();
  simulate
      ->add_option("--stride", sim_opts.schedule.sample_stride,
                   "Sweeps between snapshots")
      ->capture_default_str();
  simulate->add_option("--seed", sim_opts.common.seed, "RNG seed")
      ->envname("INEQ_SEED")
      ->capture_default_str();
  simulate->add_option("--lorenz-out", sim_opts.lorenz_out,
                       "Write the pooled-sample Lorenz curve here");
  simulate->add_option("--histogram-out", sim_opts.histogram_out,
                       "Write a log-binned histogram of the pooled sample");
  simulate
      ->add_option("--bins-per-decade", sim_opts.bins_per_decade,
                   "Histogram resolution")
      ->capture_default_str();
  add_common(simulate, sim_opts.common);
  simulate->callback([&] {
    if (sim_opts.model == "cc" && sim_delta->count() > 0)
      throw CLI::ValidationError("--delta", "only applies to --model ccm");
    if (sim_opts.model == "ccm" && sim_lambda->count() > 0)
      throw CLI::ValidationError("--lambda", "only applies to --model cc");
    run_simulate(sim_opts);
  });

  SweepOpts sweep_opts;
  auto* sweep = app.add_subcommand(
      "sweep", "Run one model across a parameter grid and fit k = f(g)");
  sweep->add_option("--model", sweep_opts.model, "cc or ccm")
      ->required()
      ->check(CLI::IsMember({"cc", "ccm"}));
  auto* sweep_lgrid = sweep->add_option(
      "--lambda-grid", sweep_opts.lambda_grid,
      "CC grid as start:stop:count");
  auto* sweep_dgrid = sweep->add_option(
      "--delta-grid", sweep_opts.delta_grid, "CCM grid as start:stop:count");
  sweep->add_option("--agents", sweep_opts.agents, "Number of agents")
      ->capture_default_str();
  sweep
      ->add_option("--therm", sweep_opts.schedule.therm_sweeps,
                   "Thermalization sweeps")
      ->capture_default_str();
  sweep
      ->add_option("--samples", sweep_opts.schedule.sample_count,
                   "Snapshots pooled per run")
      ->capture_default_str();
  sweep
      ->add_option("--stride", sweep_opts.schedule.sample_stride,
                   "Sweeps between snapshots")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_opts.common.seed, "Base RNG seed")
      ->envname("INEQ_SEED")
      ->capture_default_str();
  sweep
      ->add_option("--configs", sweep_opts.configs,
                   "CCM quenched configurations averaged per grid point")
      ->capture_default_str();
  sweep->add_flag("--parallel", sweep_opts.parallel,
                  "Run grid points concurrently (same results)");
  sweep
      ->add_option("--g-max", sweep_opts.g_max,
                   "Fit window: only records with g <= g-max enter the fit")
      ->capture_default_str();
  add_common(sweep, sweep_opts.common);
  sweep->callback([&] {
    if (sweep_opts.model == "cc") {
      if (sweep_lgrid->count() == 0)
        throw CLI::RequiredError("--lambda-grid (required for --model cc)");
      if (sweep_dgrid->count() > 0)
        throw CLI::ValidationError("--delta-grid",
                                   "only applies to --model ccm");
    } else {
      if (sweep_dgrid->count() == 0)
        throw CLI::RequiredError("--delta-grid (required for --model ccm)");
      if (sweep_lgrid->count() > 0)
        throw CLI::ValidationError("--lambda-grid",
                                   "only applies to --model cc");
    }
    run_sweep(sweep_opts);
  });

  FitOpts fit_opts;
  auto* fit = app.add_subcommand(
      "fit", "Fit a lognormal body or a power-law tail to a dataset");
  fit->add_option("--kind", fit_opts.kind, "lognormal or tail")
      ->required()
      ->check(CLI::IsMember({"lognormal", "tail"}));
  fit->add_option("-i,--input", fit_opts.input, "Dataset file")->required();
  fit->add_flag("--two-column", fit_opts.two_column,
                "Input lines are value,count");
  fit->add_flag("--rescale", fit_opts.rescale,
                "Divide by the sample mean first (default for lognormal)");
  fit->add_flag("--no-rescale", fit_opts.no_rescale,
                "Fit lognormal on raw values");
  fit->add_option("--min-tail", fit_opts.min_tail,
                  "Smallest allowed tail size when scanning xmin")
      ->capture_default_str();
  fit->add_option("--max-candidates", fit_opts.max_candidates,
                  "Largest number of xmin candidates scanned")
      ->capture_default_str();
  auto* fit_xmin = fit->add_option(
      "--xmin", fit_opts.xmin, "Fix the tail cutoff instead of scanning");
  fit->add_option("--histogram-out", fit_opts.histogram_out,
                  "Write a log-binned histogram of the fitted sample");
  fit->add_option("--bins-per-decade", fit_opts.bins_per_decade,
                  "Histogram resolution")
      ->capture_default_str();
  add_common(fit, fit_opts.common);
  fit->callback([&] {
    fit_opts.xmin_given = fit_xmin->count() > 0;
    if (fit_opts.rescale && fit_opts.no_rescale)
      throw CLI::ValidationError("--rescale",
                                 "cannot combine with --no-rescale");
    run_fit(fit_opts);
  });

  AnalyticOpts ana_opts;
  auto* analytic = app.add_subcommand(
      "analytic", "Closed-form (g, k) for one Lorenz family");
  analytic
      ->add_option("--family", ana_opts.family,
                   "power, arc, exponential, or lognormal")
      ->required()
      ->check(CLI::IsMember({"power", "arc", "exponential", "lognormal"}));
  auto* ana_p =
      analytic->add_option("--p", ana_opts.p, "Power-family exponent, >= 1");
  auto* ana_t = analytic->add_option(
      "--t", ana_opts.t, "Arc-family center parameter, <= 0");
  auto* ana_sigma = analytic->add_option(
      "--sigma", ana_opts.sigma, "Lognormal shape, > 0");
  add_common(analytic, ana_opts.common);
  analytic->callback([&] {
    ana_opts.p_given = ana_p->count() > 0;
    ana_opts.t_given = ana_t->count() > 0;
    ana_opts.sigma_given = ana_sigma->count() > 0;
    run_analytic(ana_opts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ineq::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ineq::numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
