#include "ineq/analytic.hpp"

#include <cmath>
#include <numbers>

#include "ineq/numeric.hpp"

namespace ineq {

namespace {

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw validation_error("Lorenz curves are defined on x in [0,1]");
}

// theta - sin(theta); series below 1e-2 where direct subtraction cancels.
double theta_minus_sin(double theta) {
  if (theta >= 1e-2) return theta - std::sin(theta);
  const double t2 = theta * theta;
  return theta * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0));
}

}  // namespace

PowerLorenz::PowerLorenz(double p_) : p(p_) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw validation_error("power Lorenz exponent p must be finite and >= 1");
}

double PowerLorenz::lorenz(double x) const {
  check_unit_interval(x);
  return std::pow(x, p);
}

CircleArcLorenz::CircleArcLorenz(double t_) : t(t_) {
  if (!(t <= 0.0) || !std::isfinite(t))
    throw validation_error("circle-arc parameter t must be finite and <= 0");
}

double CircleArcLorenz::radius() const {
  return std::sqrt(t * t + (1.0 - t) * (1.0 - t));
}

double CircleArcLorenz::lorenz(double x) const {
  check_unit_interval(x);
  const double r2 = t * t + (1.0 - t) * (1.0 - t);
  const double dx = x - t;
  return (1.0 - t) - std::sqrt(r2 - dx * dx);
}

LognormalLorenz::LognormalLorenz(double sigma_) : sigma(sigma_) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw validation_error("lognormal sigma must be finite and > 0");
}

double LognormalLorenz::lorenz(double x) const {
  check_unit_interval(x);
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return normal_cdf(normal_quantile(x) - sigma);
}

double lorenz_exponential(double x) {
  check_unit_interval(x);
  if (x == 1.0) return 1.0;  // (1-x) ln(1-x) -> 0
  return x + (1.0 - x) * std::log1p(-x);
}

GKPoint gk_power(double p) {
  PowerLorenz family(p);
  const double g = (p - 1.0) / (p + 1.0);
  const double k = bisect_root(
      [p](double x) { return std::pow(x, p) + x - 1.0; }, 0.0, 1.0);
  return {g, k};
}

GKPoint gk_circle_arc(double t) {
  CircleArcLorenz family(t);
  const double r2 = t * t + (1.0 - t) * (1.0 - t);
  const double theta =
      2.0 * std::asin(1.0 / (std::sqrt(r2) * std::numbers::sqrt2));
  const double g = r2 * theta_minus_sin(theta);
  // k = t + R/sqrt(2), rearranged to avoid cancellation at large |t|.
  const double s = std::sqrt(t * t - t + 0.5);
  const double k = (0.5 - t) / (s - t);
  return {g, k};
}

GKPoint gk_exponential() {
  const double u = bisect_root(
      [](double u) { return 2.0 * u - u * std::log(u) - 1.0; }, 1e-15, 0.5);
  return {0.5, 1.0 - u};
}

GKPoint gk_lognormal(double sigma) {
  LognormalLorenz family(sigma);
  const double g = 2.0 * normal_cdf(sigma / std::numbers::sqrt2) - 1.0;
  const double k = normal_cdf(0.5 * sigma);
  return {g, k};
}

}  // namespace ineq
