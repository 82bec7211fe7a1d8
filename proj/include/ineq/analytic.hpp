#pragma once

#include "ineq/errors.hpp"

namespace ineq {

// A (Gini, Kolkata) pair for one analytic Lorenz family.
struct GKPoint {
  double g;
  double k;
};

// L(x) = x^p. p = 1 is the equality line, larger p more unequal.
struct PowerLorenz {
  double p;
  explicit PowerLorenz(double p);
  double lorenz(double x) const;
};

// Lower arc of the circle centered at (t, 1-t) through (0,0) and (1,1).
// t = 0 is the quarter circle; t -> -infinity flattens to the equality line.
struct CircleArcLorenz {
  double t;
  explicit CircleArcLorenz(double t);
  double radius() const;
  double lorenz(double x) const;
};

// L(x) = Phi(Phi^-1(x) - sigma); the Lorenz curve of a lognormal with any
// location parameter (location drops out).
struct LognormalLorenz {
  double sigma;
  explicit LognormalLorenz(double sigma);
  double lorenz(double x) const;
};

// Lorenz curve of the exponential distribution: x + (1-x) ln(1-x).
double lorenz_exponential(double x);

// g = (p-1)/(p+1); k is the root of k^p + k - 1 = 0.
GKPoint gk_power(double p);

// With R = sqrt(t^2 + (1-t)^2) and theta = 2 asin(1/(R sqrt 2)):
// g = R^2 (theta - sin theta), k = t + R/sqrt(2).
GKPoint gk_circle_arc(double t);

// g = 1/2; k = 1 - u with u the root of 2u - u ln u - 1 = 0.
GKPoint gk_exponential();

// g = 2 Phi(sigma/sqrt 2) - 1; k = Phi(sigma/2), since the fixed-point
// condition Phi(z - sigma) + Phi(z) = 1 is solved exactly by z = sigma/2.
GKPoint gk_lognormal(double sigma);

}  // namespace ineq
