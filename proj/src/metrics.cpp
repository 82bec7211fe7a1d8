#include "ineq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ineq {

namespace {

long double sorted_sum(const std::vector<double>& v) {
  long double total = 0.0L;
  for (double x : v) total += x;
  return total;
}

// Gini over an ascending-sorted sample: g = 2*sum(i*x_(i))/(n*total) - (n+1)/n.
double gini_sorted(const std::vector<double>& v, long double total) {
  long double weighted = 0.0L;
  for (std::size_t i = 0; i < v.size(); ++i)
    weighted += static_cast<long double>(i + 1) * v[i];
  const long double n = static_cast<long double>(v.size());
  return static_cast<double>(2.0L * weighted / (n * total) - (n + 1.0L) / n);
}

LorenzCurve lorenz_sorted(const std::vector<double>& v, long double total) {
  LorenzCurve curve;
  curve.points.reserve(v.size() + 1);
  curve.points.push_back({0.0, 0.0});
  const double n = static_cast<double>(v.size());
  long double partial = 0.0L;
  for (std::size_t i = 0; i < v.size(); ++i) {
    partial += v[i];
    curve.points.push_back({static_cast<double>(i + 1) / n,
                            static_cast<double>(partial / total)});
  }
  curve.points.back().y = 1.0;
  return curve;
}

std::vector<double> sorted_copy(const WealthSample& values) {
  std::vector<double> v(values);
  std::sort(v.begin(), v.end());
  return v;
}

void validate_curve(const LorenzCurve& curve) {
  const auto& p = curve.points;
  if (p.size() < 2) throw validation_error("Lorenz curve needs at least 2 points");
  if (p.front().x != 0.0 || p.front().y != 0.0 || p.back().x != 1.0 ||
      p.back().y != 1.0)
    throw validation_error("Lorenz curve must run from (0,0) to (1,1)");
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!(p[i].x > p[i - 1].x))
      throw validation_error("Lorenz curve x values must be strictly increasing");
    if (p[i].y < p[i - 1].y)
      throw validation_error("Lorenz curve y values must be nondecreasing");
  }
}

}  // namespace

void validate_sample(const WealthSample& values) {
  if (values.size() < 2)
    throw validation_error("sample needs at least 2 values, got " +
                           std::to_string(values.size()));
  long double total = 0.0L;
  for (double x : values) {
    if (!std::isfinite(x)) throw validation_error("sample contains a non-finite value");
    if (x < 0.0) throw validation_error("sample contains a negative value");
    total += x;
  }
  if (!(total > 0.0L)) throw validation_error("sample total must be positive");
}

LorenzCurve build_lorenz(const WealthSample& values) {
  validate_sample(values);
  const auto v = sorted_copy(values);
  return lorenz_sorted(v, sorted_sum(v));
}

double gini(const WealthSample& values) {
  validate_sample(values);
  const auto v = sorted_copy(values);
  return gini_sorted(v, sorted_sum(v));
}

double gini(const LorenzCurve& curve) {
  validate_curve(curve);
  const auto& p = curve.points;
  long double area2 = 0.0L;  // twice the area under the curve
  for (std::size_t i = 1; i < p.size(); ++i)
    area2 += (static_cast<long double>(p[i - 1].y) + p[i].y) *
             (static_cast<long double>(p[i].x) - p[i - 1].x);
  return static_cast<double>(1.0L - area2);
}

double kolkata(const LorenzCurve& curve) {
  validate_curve(curve);
  const auto& p = curve.points;
  // f(x) = L(x) + x - 1 is strictly increasing with f(0) = -1, f(1) = 1;
  // find the first point with f >= 0 and solve on the segment before it.
  auto f = [](const LorenzPoint& q) { return q.x + q.y - 1.0; };
  std::size_t lo = 0;
  std::size_t hi = p.size() - 1;
  while (hi - lo > 1) {  // invariant: f(p[lo]) < 0, f(p[hi]) >= 0
    const std::size_t mid = lo + (hi - lo) / 2;
    (f(p[mid]) < 0.0 ? lo : hi) = mid;
  }
  if (f(p[hi]) == 0.0) return p[hi].x;
  const LorenzPoint& a = p[lo];
  const LorenzPoint& b = p[hi];
  // On the segment: y0 + s (x - x0) + x - 1 = 0.
  const double s = (b.y - a.y) / (b.x - a.x);
  const double k = (1.0 - a.y + s * a.x) / (1.0 + s);
  return std::clamp(k, a.x, b.x);
}

double kolkata(const WealthSample& values) {
  return kolkata(build_lorenz(values));
}

IndexReport indices_report(const WealthSample& values) {
  validate_sample(values);
  const auto v = sorted_copy(values);
  const long double total = sorted_sum(v);
  IndexReport report;
  report.g = gini_sorted(v, total);
  report.k = kolkata(lorenz_sorted(v, total));
  report.n = static_cast<std::int64_t>(v.size());
  report.mean = static_cast<double>(total / static_cast<long double>(v.size()));
  return report;
}

}  // namespace ineq
