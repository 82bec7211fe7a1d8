#pragma once

#include <cmath>
#include <numbers>

#include "ineq/errors.hpp"

namespace ineq {

// Standard normal CDF via erfc; accurate in both tails.
inline double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

inline double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

// Inverse of normal_cdf for p in (0, 1).
double normal_quantile(double p);

// Bisection for a root of f on [lo, hi]; f(lo) and f(hi) must differ in
// sign (or one of them be zero). With the default xtol the interval is
// narrowed until no representable midpoint is left, so the answer is exact
// to double resolution for monotone f.
template <class F>
double bisect_root(F&& f, double lo, double hi, double xtol = 0.0) {
  if (!(lo < hi)) throw numeric_error("bisect_root: empty bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw numeric_error("bisect_root: no sign change over bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || (hi - lo) <= xtol) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ineq
