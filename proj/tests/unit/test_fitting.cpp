#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "ineq/errors.hpp"
#include "ineq/fitting.hpp"
#include "oracles.hpp"

using doctest::Approx;

TEST_CASE("rescaling divides by the mean and drops zeros") {
  SUBCASE("zeros are dropped and counted") {
    const auto rs = ineq::rescale_by_mean({0.0, 3.0, 3.0});
    REQUIRE(rs.values.size() == 2);
    CHECK(rs.values[0] == 1.0);
    CHECK(rs.values[1] == 1.0);
    CHECK(rs.original_mean == 3.0);
    CHECK(rs.dropped_zeros == 1);
  }
  SUBCASE("plain rescale") {
    const auto rs = ineq::rescale_by_mean({2.0, 4.0, 6.0});
    CHECK(rs.values == std::vector<double>{0.5, 1.0, 1.5});
    CHECK(rs.original_mean == 4.0);
    CHECK(rs.dropped_zeros == 0);
  }
  SUBCASE("rescaled mean is one") {
    const auto rs =
        ineq::rescale_by_mean(oracle::sample_lognormal(5000, 0.3, 1.1, 8));
    long double total = 0.0L;
    for (double v : rs.values) total += v;
    CHECK(static_cast<double>(total) / rs.values.size() ==
          Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("all zeros is invalid") {
    CHECK_THROWS_AS(ineq::rescale_by_mean({0.0, 0.0}),
                    ineq::validation_error);
  }
}

TEST_CASE("lognormal fit is the exact MLE") {
  SUBCASE("three points with symmetric logs") {
    const auto fit =
        ineq::fit_lognormal({std::exp(-1.0), 1.0, std::exp(1.0)});
    CHECK(std::fabs(fit.mu) <= 1e-15);
    CHECK(fit.sigma == Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(fit.n_used == 3);
  }
  SUBCASE("scaling shifts mu and leaves sigma") {
    const auto v = oracle::sample_lognormal(2000, -0.4, 0.9, 12);
    std::vector<double> scaled = v;
    for (auto& x : scaled) x *= 5.0;
    const auto base = ineq::fit_lognormal(v);
    const auto big = ineq::fit_lognormal(scaled);
    CHECK(big.mu == Approx(base.mu + std::log(5.0)).epsilon(1e-12));
    CHECK(big.sigma == Approx(base.sigma).epsilon(1e-12));
  }
  SUBCASE("parameter recovery tightens with sample size") {
    const double mu = -0.5;
    const double sigma = 1.2;
    const struct {
      std::size_t n;
      double tol;
    } stages[] = {{1000, 0.1}, {10000, 0.03}, {100000, 0.01}};
    for (const auto& st : stages) {
      const auto fit = ineq::fit_lognormal(
          oracle::sample_lognormal(st.n, mu, sigma, 77));
      CHECK(std::fabs(fit.mu - mu) <= st.tol);
      CHECK(std::fabs(fit.sigma - sigma) <= st.tol);
    }
  }
  SUBCASE("degenerate and invalid inputs") {
    CHECK_THROWS_AS(ineq::fit_lognormal({2.0, 2.0, 2.0}),
                    ineq::validation_error);
    CHECK_THROWS_AS(ineq::fit_lognormal({1.0}), ineq::validation_error);
    CHECK_THROWS_AS(ineq::fit_lognormal({1.0, 0.0}),
                    ineq::validation_error);
    CHECK_THROWS_AS(ineq::fit_lognormal({1.0, -2.0}),
                    ineq::validation_error);
  }
}

TEST_CASE("power-law tail fit") {
  SUBCASE("four points, fixed cutoff, closed-form alpha") {
    const auto fit = ineq::fit_powerlaw_at({1.0, 2.0, 4.0, 8.0}, 1.0);
    // alpha = 1 + 4 / (6 ln 2)
    CHECK(fit.alpha == Approx(1.961796693925975605).epsilon(1e-14));
    CHECK(fit.xmin == 1.0);
    CHECK(fit.n_tail == 4);
  }
  SUBCASE("alpha is scale-invariant") {
    const auto v = oracle::sample_powerlaw(5000, 2.2, 14);
    std::vector<double> scaled = v;
    for (auto& x : scaled) x *= 9.0;
    const auto a = ineq::fit_powerlaw_at(v, 1.0);
    const auto b = ineq::fit_powerlaw_at(scaled, 9.0);
    CHECK(a.alpha == Approx(b.alpha).epsilon(1e-12));
    CHECK(a.n_tail == b.n_tail);
  }
  SUBCASE("exponent recovery tightens with sample size") {
    const struct {
      std::size_t n;
      double tol;
    } stages[] = {{1000, 0.3}, {10000, 0.15}, {100000, 0.1}};
    for (double alpha : {1.5, 2.5}) {
      for (const auto& st : stages) {
        const auto fit = ineq::fit_powerlaw_tail(
            oracle::sample_powerlaw(st.n, alpha, 99));
        CHECK(std::fabs(fit.alpha - alpha) <= st.tol);
        CHECK(fit.xmin >= 1.0);
        CHECK(fit.n_tail >= 50);
        CHECK(fit.ks < 0.05);
      }
    }
  }
  SUBCASE("the scan finds a planted cutoff") {
    // Flat body on [1, 5), then a clean power tail from 5: nothing like a
    // power law below the splice, so the scan must move past it.
    std::vector<double> v;
    for (double u : oracle::sample_uniform(30000, 41))
      v.push_back(1.0 + 4.0 * u);
    for (double x : oracle::sample_powerlaw(20000, 2.5, 43))
      v.push_back(5.0 * x);
    const auto fit = ineq::fit_powerlaw_tail(v);
    CHECK(std::fabs(fit.alpha - 2.5) <= 0.15);
    // KS minimization rejects the flat body outright. It may settle some
    // way into the tail (smaller tails fluctuate less), so the cutoff is
    // bounded from below, not pinned.
    CHECK(fit.xmin >= 4.5);
    CHECK(fit.n_tail >= 1000);
  }
  SUBCASE("candidate thinning changes little") {
    const auto v = oracle::sample_powerlaw(20000, 1.8, 55);
    const auto wide = ineq::fit_powerlaw_tail(v, 50, 256);
    const auto thin = ineq::fit_powerlaw_tail(v, 50, 32);
    CHECK(std::fabs(wide.alpha - thin.alpha) <= 0.05);
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(ineq::fit_powerlaw_at({1.0, 2.0, 3.0}, 100.0),
                    ineq::validation_error);
    CHECK_THROWS_AS(ineq::fit_powerlaw_at({1.0, 2.0}, 0.0),
                    ineq::validation_error);
    CHECK_THROWS_AS(ineq::fit_powerlaw_at({2.0, 2.0, 2.0}, 2.0),
                    ineq::validation_error);
    const auto tiny = oracle::sample_powerlaw(40, 2.0, 3);
    CHECK_THROWS_AS(ineq::fit_powerlaw_tail(tiny), ineq::validation_error);
    CHECK_THROWS_AS(ineq::fit_powerlaw_tail({1.0, 2.0, 3.0}, 1, 256),
                    ineq::validation_error);
  }
}

TEST_CASE("log-binned histograms") {
  SUBCASE("a single repeated value occupies one bin") {
    const auto h = ineq::log_binned_histogram({2.0, 2.0, 2.0}, 5);
    REQUIRE(h.densities.size() == 1);
    REQUIRE(h.bin_edges.size() == 2);
    CHECK(h.bin_edges[0] <= 2.0);
    CHECK(h.bin_edges[1] > 2.0);
    // Density integrates to one over the single bin.
    CHECK(h.densities[0] * (h.bin_edges[1] - h.bin_edges[0]) ==
          Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("edges are decade-aligned and shared across samples") {
    const auto h1 = ineq::log_binned_histogram({1.5, 3.0, 8.0}, 5);
    const auto h2 = ineq::log_binned_histogram({2.0, 4.0, 9.0}, 5);
    // Same bins-per-decade means any shared bin has identical edges.
    for (double e1 : h1.bin_edges)
      for (double e2 : h2.bin_edges)
        if (std::fabs(e1 - e2) < 1e-9 * e1) CHECK(e1 == Approx(e2));
    // 1.5 falls in the bin [10^0, 10^(1/5)).
    CHECK(h1.bin_edges.front() == Approx(1.0));
  }
  SUBCASE("total probability is one") {
    const auto v = oracle::sample_lognormal(20000, -0.7, 1.3, 61);
    const auto h = ineq::log_binned_histogram(v, 5);
    long double mass = 0.0L;
    for (std::size_t i = 0; i < h.densities.size(); ++i)
      mass += h.densities[i] * (h.bin_edges[i + 1] - h.bin_edges[i]);
    CHECK(static_cast<double>(mass) == Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("flat density shows up flat") {
    const auto u = oracle::sample_uniform(200000, 71);
    std::vector<double> v;
    v.reserve(u.size());
    for (double x : u) v.push_back(1.0 + 9.0 * x);
    const auto h = ineq::log_binned_histogram(v, 5);
    for (std::size_t i = 0; i < h.densities.size(); ++i) {
      // Interior bins of a uniform density on [1, 10] sit at 1/9.
      if (h.bin_edges[i] >= 1.0 && h.bin_edges[i + 1] <= 10.0)
        CHECK(h.densities[i] == Approx(1.0 / 9.0).epsilon(0.05));
    }
  }
  SUBCASE("the mode lands where the density peaks") {
    const double mu = -0.73;
    const double sigma = 1.29;
    const auto v = oracle::sample_lognormal(1000000, mu, sigma, 81);
    const auto h = ineq::log_binned_histogram(v, 5);
    std::size_t peak = 0;
    for (std::size_t i = 1; i < h.densities.size(); ++i)
      if (h.densities[i] > h.densities[peak]) peak = i;
    const double mode = std::exp(mu - sigma * sigma);
    // The true mode falls in the peak bin or one of its neighbors.
    const double lo = peak == 0 ? h.bin_edges[0] : h.bin_edges[peak - 1];
    const double hi = peak + 2 < h.bin_edges.size() ? h.bin_edges[peak + 2]
                                                    : h.bin_edges.back();
    CHECK(mode >= lo);
    CHECK(mode <= hi);
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(ineq::log_binned_histogram({1.0, 0.0}, 5),
                    ineq::validation_error);
    CHECK_THROWS_AS(ineq::log_binned_histogram({1.0, 2.0}, 0),
                    ineq::validation_error);
    CHECK_THROWS_AS(ineq::log_binned_histogram({}, 5),
                    ineq::validation_error);
  }
}

TEST_CASE("collapse distance separates same-shape from different-shape") {
  const auto lognormal_hist = [](std::uint64_t seed) {
    const auto rs = ineq::rescale_by_mean(
        oracle::sample_lognormal(200000, -0.73, 1.29, seed));
    return ineq::log_binned_histogram(rs.values, 5);
  };
  const auto h1 = lognormal_hist(101);
  const auto h2 = lognormal_hist(103);

  SUBCASE("self distance is zero") {
    CHECK(ineq::collapse_distance(h1, h1) == 0.0);
  }
  SUBCASE("two draws of the same law collapse") {
    CHECK(ineq::collapse_distance(h1, h2) < 0.02);
    CHECK(ineq::collapse_distance(h1, h2) ==
          ineq::collapse_distance(h2, h1));
  }
  SUBCASE("different laws do not collapse") {
    const auto rs = ineq::rescale_by_mean(
        oracle::sample_exponential(200000, 107));
    const auto he = ineq::log_binned_histogram(rs.values, 5);
    CHECK(ineq::collapse_distance(h1, he) > 0.2);
  }
  SUBCASE("disjoint supports are rejected") {
    const auto lo = ineq::log_binned_histogram({1.0, 1.2, 1.5}, 5);
    const auto hi = ineq::log_binned_histogram({5000.0, 7000.0}, 5);
    CHECK_THROWS_AS(ineq::collapse_distance(lo, hi),
                    ineq::validation_error);
  }
}
