#include <doctest.h>

#include <cmath>
#include <vector>

#include "ineq/errors.hpp"
#include "ineq/kinetic.hpp"
#include "ineq/metrics.hpp"
#include "ineq/rng.hpp"
#include "oracles.hpp"

using doctest::Approx;

TEST_CASE("single trades are exact on hand-checkable inputs") {
  SUBCASE("uniform saving") {
    const auto [a, b] = ineq::cc_trade(1.0, 1.0, 0.5, 0.25);
    CHECK(a == 0.75);
    CHECK(b == 1.25);
  }
  SUBCASE("distributed saving") {
    const auto [a, b] = ineq::ccm_trade(1.0, 1.0, 0.2, 0.8, 0.5);
    CHECK(a == Approx(0.7).epsilon(1e-15));
    CHECK(b == Approx(1.3).epsilon(1e-15));
  }
  SUBCASE("zero saving, winner takes the pool") {
    const auto [a, b] = ineq::ccm_trade(0.0, 5.0, 0.5, 0.5, 1.0);
    CHECK(a == 2.5);
    CHECK(b == 2.5);
  }
  SUBCASE("lambda = 0 reduces to random splitting") {
    const auto [a, b] = ineq::cc_trade(2.0, 4.0, 0.0, 0.25);
    CHECK(a == Approx(1.5).epsilon(1e-15));
    CHECK(b == Approx(4.5).epsilon(1e-15));
  }
}

TEST_CASE("trades conserve wealth to machine precision") {
  ineq::Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const double mi = 10.0 * rng.u01();
    const double mj = 10.0 * rng.u01();
    const double li = rng.u01() * 0.999;
    const double lj = rng.u01() * 0.999;
    const double r = rng.u01();
    const auto [a, b] = ineq::ccm_trade(mi, mj, li, lj, r);
    CHECK(a + b == Approx(mi + mj).epsilon(1e-15));
    CHECK(a >= 0.0);
    CHECK(b >= 0.0);
    const auto [c, d] = ineq::cc_trade(mi, mj, li, r);
    CHECK(c + d == Approx(mi + mj).epsilon(1e-15));
  }
}

TEST_CASE("equal savings make the two trade rules coincide") {
  ineq::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double m = 5.0 * rng.u01();
    const double lam = rng.u01() * 0.999;
    const double r = rng.u01();
    // Identical wealths: the pooled forms differ only by a power of two,
    // so the results are bitwise equal.
    const auto cc = ineq::cc_trade(m, m, lam, r);
    const auto ccm = ineq::ccm_trade(m, m, lam, lam, r);
    CHECK(cc.first == ccm.first);
    CHECK(cc.second == ccm.second);
    // Different wealths: equal up to a rounding difference.
    const double m2 = 5.0 * rng.u01();
    const auto cc2 = ineq::cc_trade(m, m2, lam, r);
    const auto ccm2 = ineq::ccm_trade(m, m2, lam, lam, r);
    CHECK(cc2.first == Approx(ccm2.first).epsilon(1e-14));
    CHECK(cc2.second == Approx(ccm2.second).epsilon(1e-14));
  }
}

TEST_CASE("quenched saving draws follow the inverse CDF") {
  CHECK(ineq::sample_saving(1.0, 0.64) == Approx(0.4).epsilon(1e-15));
  CHECK(ineq::sample_saving(0.0, 0.37) == Approx(0.37).epsilon(1e-15));
  CHECK(ineq::sample_saving(2.0, 0.0) == 0.0);
  // Large u pushes lambda toward 1 but never reaches it.
  const double lam = ineq::sample_saving(1.0, 1.0 - 1e-12);
  CHECK(lam < 1.0);
  CHECK(lam > 0.999);
  CHECK_THROWS_AS(ineq::sample_saving(-1.0, 0.5), ineq::validation_error);
  CHECK_THROWS_AS(ineq::sample_saving(1.0, 1.0), ineq::validation_error);
  CHECK_THROWS_AS(ineq::sample_saving(1.0, -0.1), ineq::validation_error);
}

TEST_CASE("zero-saving steady state is exponential") {
  const auto state = ineq::run_steady_state(ineq::CCParams{0.0, 1000, 42});
  CHECK(state.pooled_wealth.size() == 100u * 1000u);
  CHECK(state.report.n == 100000);
  CHECK(state.report.mean == Approx(1.0).epsilon(1e-9));
  CHECK(std::fabs(state.report.g - 0.5) <= 0.01);
  CHECK(std::fabs(state.report.k - 0.682155567100627316) <= 0.01);
  CHECK(state.conservation_error <= 1e-9);
  const double ks = oracle::ks_distance(
      state.pooled_wealth, [](double x) { return 1.0 - std::exp(-x); });
  CHECK(ks < 0.01);
}

TEST_CASE("saving suppresses inequality like the Gamma approximation") {
  double last_g = 1.0;
  for (double lam : {0.2, 0.5, 0.9}) {
    const auto state =
        ineq::run_steady_state(ineq::CCParams{lam, 1000, 42});
    CHECK(std::fabs(state.report.g - oracle::cc_gamma_ansatz_gini(lam)) <=
          0.01);
    CHECK(state.report.g < last_g);
    last_g = state.report.g;
  }
  // lambda = 0.9 lands just above 0.1; it approaches 0.1 only as
  // lambda approaches 1.
  CHECK(std::fabs(last_g - 0.1061) <= 0.01);
}

TEST_CASE("runs are reproducible and schedules are honored") {
  const ineq::SimulationSchedule sched{500, 7, 3};
  const auto a = ineq::run_steady_state(ineq::CCParams{0.4, 200, 9}, sched);
  const auto b = ineq::run_steady_state(ineq::CCParams{0.4, 200, 9}, sched);
  CHECK(a.pooled_wealth == b.pooled_wealth);
  CHECK(a.report.g == b.report.g);
  CHECK(a.pooled_wealth.size() == 7u * 200u);

  const auto c = ineq::run_steady_state(ineq::CCParams{0.4, 200, 10}, sched);
  CHECK(a.pooled_wealth != c.pooled_wealth);

  const ineq::SimulationSchedule one{500, 1, 3};
  const auto d = ineq::run_steady_state(ineq::CCParams{0.4, 200, 9}, one);
  CHECK(d.pooled_wealth.size() == 200u);
  // A single snapshot is taken right after thermalization, so it is a
  // prefix of any longer run with the same seed.
  for (std::size_t i = 0; i < 200; ++i)
    CHECK(d.pooled_wealth[i] == a.pooled_wealth[i]);
}

TEST_CASE("an explicit uniform saving vector reproduces the cc model") {
  const ineq::SimulationSchedule sched{400, 5, 2};
  const std::vector<double> saving(150, 0.3);
  const auto via_vector = ineq::run_quenched(saving, sched, 11);
  const auto via_cc =
      ineq::run_steady_state(ineq::CCParams{0.3, 150, 11}, sched);
  CHECK(via_vector.pooled_wealth == via_cc.pooled_wealth);
}

TEST_CASE("ccm draws savings then trades with the same stream") {
  // Reproduce run_steady_state(CCMParams) by hand: agent savings come
  // first, in index order, from the same generator.
  const ineq::SimulationSchedule sched{300, 4, 2};
  const int agents = 100;
  const std::uint64_t seed = 31;
  ineq::Rng rng(seed);
  std::vector<double> saving(agents);
  for (auto& s : saving) s = ineq::sample_saving(1.0, rng.u01());

  const auto direct =
      ineq::run_steady_state(ineq::CCMParams{1.0, agents, seed}, sched);
  // run_quenched with a fresh seed uses a fresh stream, so it cannot match;
  // this only checks the distributional summary is in the same place.
  const auto report = ineq::indices_report(direct.pooled_wealth);
  CHECK(report.g > 0.3);
  CHECK(report.g < 0.7);
  CHECK(direct.pooled_wealth.size() ==
        static_cast<std::size_t>(agents) * 4u);
  // The saving vector we rebuilt has the documented marginal shape.
  double mean_saving = 0.0;
  for (double s : saving) mean_saving += s;
  mean_saving /= agents;
  // Pi(lambda) = 2(1 - lambda) on [0,1) has mean 1/3.
  CHECK(std::fabs(mean_saving - 1.0 / 3.0) <= 0.12);
}

TEST_CASE("lambda sweeps derive one child seed per grid point") {
  const ineq::SimulationSchedule sched{300, 5, 2};
  const std::vector<double> grid = {0.0, 0.3, 0.6};
  const auto serial = ineq::sweep_lambda(grid, 200, sched, 42, false);
  REQUIRE(serial.records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(serial.records[i].label == "cc");
    REQUIRE(serial.records[i].param.has_value());
    CHECK(*serial.records[i].param == grid[i]);
    CHECK(serial.records[i].n == 1000);
  }
  // g falls as saving rises.
  CHECK(serial.records[0].g > serial.records[1].g);
  CHECK(serial.records[1].g > serial.records[2].g);

  SUBCASE("parallel execution is bit-identical to serial") {
    const auto parallel = ineq::sweep_lambda(grid, 200, sched, 42, true);
    REQUIRE(parallel.records.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(parallel.records[i].g == serial.records[i].g);
      CHECK(parallel.records[i].k == serial.records[i].k);
      CHECK(parallel.records[i].n == serial.records[i].n);
    }
  }
  SUBCASE("a one-point grid matches a direct run") {
    const auto one = ineq::sweep_lambda({0.3}, 200, sched, 42, false);
    const auto direct = ineq::run_steady_state(
        ineq::CCParams{0.3, 200, ineq::Rng::derive_seed(42, 0)}, sched);
    CHECK(one.records[0].g == direct.report.g);
    CHECK(one.records[0].k == direct.report.k);
  }
}

TEST_CASE("delta sweeps average quenched configurations") {
  const ineq::SimulationSchedule sched{2000, 20, 5};
  const std::vector<double> grid = {0.0, 1.0, 2.0};
  const auto scatter = ineq::sweep_delta(grid, 500, sched, 42, 2, true);
  REQUIRE(scatter.records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(scatter.records[i].label == "ccm");
    CHECK(*scatter.records[i].param == grid[i]);
    CHECK(scatter.records[i].n == 2 * 20 * 500);
  }
  // Stronger disorder means a heavier tail but a lower bulk Gini trend
  // from delta = 0 downward.
  CHECK(scatter.records[0].g > scatter.records[1].g);
  CHECK(scatter.records[1].g > scatter.records[2].g);

  const auto serial = ineq::sweep_delta(grid, 500, sched, 42, 2, false);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(serial.records[i].g == scatter.records[i].g);
    CHECK(serial.records[i].k == scatter.records[i].k);
  }
}

TEST_CASE("simulation inputs are validated") {
  CHECK_THROWS_AS(ineq::run_steady_state(ineq::CCParams{1.0, 100, 1}),
                  ineq::validation_error);
  CHECK_THROWS_AS(ineq::run_steady_state(ineq::CCParams{-0.1, 100, 1}),
                  ineq::validation_error);
  CHECK_THROWS_AS(ineq::run_steady_state(ineq::CCParams{0.5, 1, 1}),
                  ineq::validation_error);
  CHECK_THROWS_AS(ineq::run_steady_state(ineq::CCMParams{-1.0, 100, 1}),
                  ineq::validation_error);
  CHECK_THROWS_AS(
      ineq::run_steady_state(ineq::CCParams{0.5, 100, 1},
                             ineq::SimulationSchedule{-1, 10, 1}),
      ineq::validation_error);
  CHECK_THROWS_AS(
      ineq::run_steady_state(ineq::CCParams{0.5, 100, 1},
                             ineq::SimulationSchedule{10, 0, 1}),
      ineq::validation_error);
  CHECK_THROWS_AS(
      ineq::run_steady_state(ineq::CCParams{0.5, 100, 1},
                             ineq::SimulationSchedule{10, 2, 0}),
      ineq::validation_error);
  CHECK_THROWS_AS(ineq::cc_trade(-1.0, 1.0, 0.5, 0.5),
                  ineq::validation_error);
  CHECK_THROWS_AS(ineq::cc_trade(1.0, 1.0, 0.5, 1.5),
                  ineq::validation_error);
  CHECK_THROWS_AS(ineq::ccm_trade(1.0, 1.0, 0.5, 1.0, 0.5),
                  ineq::validation_error);
  CHECK_THROWS_AS(ineq::run_quenched({}, ineq::SimulationSchedule{}, 1),
                  ineq::validation_error);
  CHECK_THROWS_AS(ineq::sweep_lambda({}, 100, ineq::SimulationSchedule{}, 1,
                                     false),
                  ineq::validation_error);
}
