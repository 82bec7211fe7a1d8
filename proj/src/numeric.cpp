#include "ineq/numeric.hpp"

namespace ineq {

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw validation_error("normal_quantile: p must lie in (0,1)");
  double z = bisect_root([p](double t) { return normal_cdf(t) - p; }, -40.0,
                         40.0, 1e-9);
  // Two Newton steps take the bisection estimate to full precision.
  for (int i = 0; i < 2; ++i) {
    const double d = normal_pdf(z);
    if (d > 0.0) z -= (normal_cdf(z) - p) / d;
  }
  return z;
}

}  // namespace ineq
