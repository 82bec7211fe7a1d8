#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ineq/gk.hpp"
#include "ineq/metrics.hpp"
#include "ineq/rng.hpp"

namespace ineq {

struct CCParams {
  double lambda = 0.0;        // common saving propensity, in [0,1)
  int agents = 1000;
  std::uint64_t seed = 42;
};

struct CCMParams {
  double delta = 0.0;         // quenched-disorder exponent, > -1
  int agents = 1000;
  std::uint64_t seed = 42;
};

struct SimulationSchedule {
  int therm_sweeps = 10000;   // discarded sweeps; 1 sweep = n pair trades
  int sample_count = 100;     // snapshots pooled into the output
  int sample_stride = 10;     // sweeps between consecutive snapshots
};

struct AgentPopulation {
  std::vector<double> wealth;
  std::vector<double> saving;  // per-agent lambda; all equal for CC
};

struct SteadyStateSample {
  WealthSample pooled_wealth;  // agents x sample_count values
  IndexReport report;
  double conservation_error = 0.0;  // |final total - initial| / initial
};

// One trade under the common-saving rule: both agents keep a fraction
// lambda of their wealth and the pooled remainder is split r : (1-r).
std::pair<double, double> cc_trade(double m_i, double m_j, double lambda,
                                   double r);

// Per-agent saving variant; the pool is (1-l_i) m_i + (1-l_j) m_j.
std::pair<double, double> ccm_trade(double m_i, double m_j, double lambda_i,
                                    double lambda_j, double r);

// Inverse CDF of the quenched saving distribution
// Pi(lambda) = (1+delta)(1-lambda)^delta: lambda = 1 - (1-u)^(1/(1+delta)).
double sample_saving(double delta, double u);

// Advance a population by `sweeps` full sweeps; each sweep performs n
// trades between uniformly random ordered pairs i != j.
void run_sweeps(AgentPopulation& pop, int sweeps, Rng& rng);

// All wealth starts at 1.0; after therm_sweeps, sample_count snapshots
// separated by sample_stride sweeps are pooled. Deterministic in the seed.
SteadyStateSample run_steady_state(const CCParams& params,
                                   const SimulationSchedule& schedule = {});

// CCM: additionally draws one quenched saving vector from the seed before
// trading starts.
SteadyStateSample run_steady_state(const CCMParams& params,
                                   const SimulationSchedule& schedule = {});

// CCM protocol with a caller-supplied quenched saving vector.
SteadyStateSample run_quenched(const std::vector<double>& saving,
                               const SimulationSchedule& schedule,
                               std::uint64_t seed);

// One independent run per lambda, seeded with base_seed ^ run-index, so
// results do not depend on execution order or thread count.
GKScatter sweep_lambda(const std::vector<double>& lambdas, int agents,
                       const SimulationSchedule& schedule,
                       std::uint64_t base_seed, bool parallel = false);

// Per delta, averages g and k over quenched_configs independent
// lambda-configurations; run (d, c) is seeded with
// base_seed ^ (d * quenched_configs + c).
GKScatter sweep_delta(const std::vector<double>& deltas, int agents,
                      const SimulationSchedule& schedule,
                      std::uint64_t base_seed, int quenched_configs = 1,
                      bool parallel = false);

}  // namespace ineq
