#include "ineq/kinetic.hpp"

#include <cmath>
#include <cstddef>
#include <future>
#include <string>

#include "ineq/errors.hpp"

namespace ineq {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw validation_error("saving propensity lambda must lie in [0,1)");
}

void check_delta(double delta) {
  if (!(delta > -1.0) || !std::isfinite(delta))
    throw validation_error("disorder exponent delta must be finite and > -1");
}

void check_r(double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw validation_error("split fraction r must lie in [0,1]");
}

void check_wealth(double m) {
  if (!(m >= 0.0) || !std::isfinite(m))
    throw validation_error("wealth must be finite and nonnegative");
}

void check_agents(int agents) {
  if (agents < 2) throw validation_error("need at least 2 agents");
}

void check_schedule(const SimulationSchedule& s) {
  if (s.therm_sweeps < 1 || s.sample_count < 1 || s.sample_stride < 1)
    throw validation_error("schedule fields must all be positive");
}

// Thermalize, then pool snapshots. Assumes wealth was initialized to 1.0,
// so the conserved total is the agent count.
SteadyStateSample collect(AgentPopulation& pop,
                          const SimulationSchedule& schedule, Rng& rng) {
  const std::size_t n = pop.wealth.size();
  SteadyStateSample out;
  out.pooled_wealth.reserve(n * static_cast<std::size_t>(schedule.sample_count));
  run_sweeps(pop, schedule.therm_sweeps, rng);
  for (int s = 0; s < schedule.sample_count; ++s) {
    if (s > 0) run_sweeps(pop, schedule.sample_stride, rng);
    out.pooled_wealth.insert(out.pooled_wealth.end(), pop.wealth.begin(),
                             pop.wealth.end());
  }
  long double total = 0.0L;
  for (double m : pop.wealth) total += m;
  const long double initial = static_cast<long double>(n);
  out.conservation_error =
      static_cast<double>(std::fabs(total - initial) / initial);
  if (out.conservation_error > 1e-9)
    throw numeric_error("total wealth drifted by more than 1e-9 relative");
  out.report = indices_report(out.pooled_wealth);
  return out;
}

struct RunPoint {
  double g = 0.0;
  double k = 0.5;
  std::int64_t n = 0;
};

template <class Job>
void run_jobs(std::size_t count, bool parallel, Job job) {
  if (!parallel) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    futures.push_back(std::async(std::launch::async, job, i));
  for (auto& f : futures) f.get();
}

}  // namespace

std::pair<double, double> cc_trade(double m_i, double m_j, double lambda,
                                   double r) {
  check_wealth(m_i);
  check_wealth(m_j);
  check_lambda(lambda);
  check_r(r);
  const double pool = (1.0 - lambda) * (m_i + m_j);
  return {lambda * m_i + r * pool, lambda * m_j + (1.0 - r) * pool};
}

std::pair<double, double> ccm_trade(double m_i, double m_j, double lambda_i,
                                    double lambda_j, double r) {
  check_wealth(m_i);
  check_wealth(m_j);
  check_lambda(lambda_i);
  check_lambda(lambda_j);
  check_r(r);
  const double pool = (1.0 - lambda_i) * m_i + (1.0 - lambda_j) * m_j;
  return {lambda_i * m_i + r * pool, lambda_j * m_j + (1.0 - r) * pool};
}

double sample_saving(double delta, double u) {
  check_delta(delta);
  if (!(u >= 0.0 && u < 1.0))
    throw validation_error("uniform variate u must lie in [0,1)");
  return 1.0 - std::pow(1.0 - u, 1.0 / (1.0 + delta));
}

void run_sweeps(AgentPopulation& pop, int sweeps, Rng& rng) {
  const std::size_t n = pop.wealth.size();
  if (n < 2) throw validation_error("population needs at least 2 agents");
  if (pop.saving.size() != n)
    throw validation_error("wealth and saving lists must have equal length");
  for (double m : pop.wealth) check_wealth(m);
  for (double l : pop.saving) check_lambda(l);
  if (sweeps < 0) throw validation_error("sweep count must be nonnegative");
  for (int s = 0; s < sweeps; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      const double r = rng.u01();
      // Same rule as ccm_trade; inlined, inputs already validated.
      const double pool = (1.0 - pop.saving[i]) * pop.wealth[i] +
                          (1.0 - pop.saving[j]) * pop.wealth[j];
      pop.wealth[i] = pop.saving[i] * pop.wealth[i] + r * pool;
      pop.wealth[j] = pop.saving[j] * pop.wealth[j] + (1.0 - r) * pool;
    }
  }
}

SteadyStateSample run_steady_state(const CCParams& params,
                                   const SimulationSchedule& schedule) {
  check_lambda(params.lambda);
  check_agents(params.agents);
  check_schedule(schedule);
  const std::size_t n = static_cast<std::size_t>(params.agents);
  AgentPopulation pop{std::vector<double>(n, 1.0),
                      std::vector<double>(n, params.lambda)};
  Rng rng(params.seed);
  return collect(pop, schedule, rng);
}

SteadyStateSample run_steady_state(const CCMParams& params,
                                   const SimulationSchedule& schedule) {
  check_delta(params.delta);
  check_agents(params.agents);
  check_schedule(schedule);
  const std::size_t n = static_cast<std::size_t>(params.agents);
  Rng rng(params.seed);
  AgentPopulation pop;
  pop.saving.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pop.saving.push_back(sample_saving(params.delta, rng.u01()));
  pop.wealth.assign(n, 1.0);
  return collect(pop, schedule, rng);
}

SteadyStateSample run_quenched(const std::vector<double>& saving,
                               const SimulationSchedule& schedule,
                               std::uint64_t seed) {
  if (saving.size() < 2) throw validation_error("need at least 2 agents");
  for (double l : saving) check_lambda(l);
  check_schedule(schedule);
  AgentPopulation pop{std::vector<double>(saving.size(), 1.0), saving};
  Rng rng(seed);
  return collect(pop, schedule, rng);
}

GKScatter sweep_lambda(const std::vector<double>& lambdas, int agents,
                       const SimulationSchedule& schedule,
                       std::uint64_t base_seed, bool parallel) {
  if (lambdas.empty()) throw validation_error("lambda grid must not be empty");
  for (double l : lambdas) check_lambda(l);
  check_agents(agents);
  check_schedule(schedule);
  std::vector<RunPoint> points(lambdas.size());
  run_jobs(lambdas.size(), parallel, [&](std::size_t idx) {
    const CCParams params{lambdas[idx], agents,
                          Rng::derive_seed(base_seed, idx)};
    const auto state = run_steady_state(params, schedule);
    points[idx] = {state.report.g, state.report.k, state.report.n};
  });
  GKScatter scatter;
  scatter.records.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    scatter.records.push_back(
        {"cc", lambdas[i], points[i].g, points[i].k, points[i].n});
  return scatter;
}

GKScatter sweep_delta(const std::vector<double>& deltas, int agents,
                      const SimulationSchedule& schedule,
                      std::uint64_t base_seed, int quenched_configs,
                      bool parallel) {
  if (deltas.empty()) throw validation_error("delta grid must not be empty");
  for (double d : deltas) check_delta(d);
  check_agents(agents);
  check_schedule(schedule);
  if (quenched_configs < 1)
    throw validation_error("quenched_configs must be positive");
  const std::size_t configs = static_cast<std::size_t>(quenched_configs);
  std::vector<RunPoint> points(deltas.size() * configs);
  run_jobs(points.size(), parallel, [&](std::size_t idx) {
    const CCMParams params{deltas[idx / configs], agents,
                           Rng::derive_seed(base_seed, idx)};
    const auto state = run_steady_state(params, schedule);
    points[idx] = {state.report.g, state.report.k, state.report.n};
  });
  GKScatter scatter;
  scatter.records.reserve(deltas.size());
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    double g = 0.0;
    double k = 0.0;
    std::int64_t n = 0;
    for (std::size_t c = 0; c < configs; ++c) {
      const RunPoint& p = points[d * configs + c];
      g += p.g;
      k += p.k;
      n += p.n;
    }
    const double den = static_cast<double>(configs);
    scatter.records.push_back({"ccm", deltas[d], g / den, k / den, n});
  }
  return scatter;
}

}  // namespace ineq
