#pragma once

#include <cstdint>
#include <vector>

#include "ineq/errors.hpp"

namespace ineq {

// Raw sample of wealth-like values (income, citations, deaths, ...).
// Valid when: every value is finite and >= 0, length >= 2, sum > 0.
using WealthSample = std::vector<double>;

struct LorenzPoint {
  double x;  // cumulative population fraction
  double y;  // cumulative wealth fraction
};

// Piecewise-linear cumulative curve from (0,0) to (1,1); x strictly
// increasing, y nondecreasing, segment slopes nondecreasing (convex).
struct LorenzCurve {
  std::vector<LorenzPoint> points;
};

struct IndexReport {
  double g = 0.0;    // Gini index, in [0, 1 - 1/n]
  double k = 0.5;    // Kolkata index, in [0.5, 1)
  std::int64_t n = 0;
  double mean = 0.0;
};

// Throws validation_error unless `values` is a valid WealthSample.
void validate_sample(const WealthSample& values);

// Curve through ((i/n), (sum of the i smallest) / total) for i = 0..n.
LorenzCurve build_lorenz(const WealthSample& values);

// Population Gini: sum_ij |x_i - x_j| / (2 n^2 mean). Computed from the
// sorted sample in O(n log n); equals twice the area between the equality
// line and the trapezoidal Lorenz curve.
double gini(const WealthSample& values);
double gini(const LorenzCurve& curve);

// Kolkata index: the root of L(k) + k - 1 = 0, solved exactly on the
// bracketing linear segment of the Lorenz curve.
double kolkata(const WealthSample& values);
double kolkata(const LorenzCurve& curve);

// Bundles g, k, count and mean for one sample (single sort internally).
IndexReport indices_report(const WealthSample& values);

}  // namespace ineq
