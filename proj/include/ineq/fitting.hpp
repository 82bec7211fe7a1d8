#pragma once

#include <cstdint>
#include <vector>

#include "ineq/metrics.hpp"

namespace ineq {

// Sample divided by its mean (zeros dropped first), so different sources
// become comparable on one axis.
struct RescaledSample {
  std::vector<double> values;   // positive, mean 1
  double original_mean = 0.0;   // mean of the retained (positive) values
  std::int64_t dropped_zeros = 0;
};

struct LognormalFit {
  double mu = 0.0;
  double sigma = 0.0;
  std::int64_t n_used = 0;
};

struct PowerLawTailFit {
  double alpha = 0.0;   // density decays as x^-alpha above xmin
  double xmin = 0.0;
  std::int64_t n_tail = 0;
  double ks = 0.0;      // KS distance between tail data and the fit
};

struct LogHistogram {
  std::vector<double> bin_edges;  // geometric, decade-aligned
  std::vector<double> densities;  // probability per unit x
};

RescaledSample rescale_by_mean(const WealthSample& values);

// Exact lognormal MLE: mu is the mean of log-values, sigma the population
// standard deviation of log-values. Requires >= 2 positive values with
// nonzero log spread.
LognormalFit fit_lognormal(const std::vector<double>& values);
LognormalFit fit_lognormal(const RescaledSample& sample);

// Continuous MLE alpha = 1 + n_tail / sum(ln(x_i/xmin)) over x_i >= xmin,
// with xmin picked from the observed order statistics to minimize the KS
// distance between the tail and the fitted law, subject to
// n_tail >= min_tail. At most max_candidates evenly spaced cutoffs are
// scanned (the full scan is quadratic in n).
PowerLawTailFit fit_powerlaw_tail(const WealthSample& values,
                                  int min_tail = 50,
                                  int max_candidates = 256);

// Same MLE with the cutoff fixed by the caller.
PowerLawTailFit fit_powerlaw_at(const WealthSample& values, double xmin);

// Histogram over geometric bins aligned to powers of ten: value x falls in
// bin floor(bins_per_decade * log10 x). Densities integrate to 1.
LogHistogram log_binned_histogram(const WealthSample& values,
                                  int bins_per_decade);

// L1 distance between two binned densities over the overlap of their
// supports, integrated on the union of their bin edges. 0 iff identical
// there.
double collapse_distance(const LogHistogram& h1, const LogHistogram& h2);

}  // namespace ineq
