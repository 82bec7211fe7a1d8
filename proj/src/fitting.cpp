#include "ineq/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ineq/errors.hpp"

namespace ineq {

namespace {

void check_positive_finite(const std::vector<double>& values,
                           const char* who) {
  for (double x : values)
    if (!std::isfinite(x) || x <= 0.0)
      throw validation_error(std::string(who) +
                             " requires finite positive values");
}

struct TailEval {
  double alpha = 0.0;
  double ks = 0.0;
  bool ok = false;
};

// MLE and KS distance for the tail v[i..] against cutoff xmin.
// suffix[i] holds sum of ln v[j] for j >= i.
TailEval eval_tail(const std::vector<double>& v,
                   const std::vector<long double>& suffix, std::size_t i,
                   double xmin) {
  const std::size_t nt = v.size() - i;
  const long double sum_log =
      suffix[i] - static_cast<long double>(nt) *
                      std::log(static_cast<long double>(xmin));
  if (!(sum_log > 0.0L)) return {};  // no spread above xmin
  TailEval out;
  out.alpha = 1.0 + static_cast<double>(nt / sum_log);
  for (std::size_t j = i; j < v.size(); ++j) {
    const double fitted = 1.0 - std::pow(xmin / v[j], out.alpha - 1.0);
    const double emp_lo = static_cast<double>(j - i) / nt;
    const double emp_hi = static_cast<double>(j - i + 1) / nt;
    out.ks = std::max({out.ks, fitted - emp_lo, emp_hi - fitted});
  }
  out.ok = true;
  return out;
}

std::vector<long double> suffix_log_sums(const std::vector<double>& v) {
  std::vector<long double> suffix(v.size() + 1, 0.0L);
  for (std::size_t i = v.size(); i-- > 0;)
    suffix[i] = suffix[i + 1] + std::log(static_cast<long double>(v[i]));
  return suffix;
}

std::vector<double> sorted_positives(const WealthSample& values) {
  validate_sample(values);
  std::vector<double> v;
  v.reserve(values.size());
  for (double x : values)
    if (x > 0.0) v.push_back(x);
  std::sort(v.begin(), v.end());
  return v;
}

void check_histogram(const LogHistogram& h) {
  if (h.bin_edges.size() < 2 ||
      h.densities.size() != h.bin_edges.size() - 1)
    throw validation_error("histogram has inconsistent edge/density counts");
  for (std::size_t i = 0; i + 1 < h.bin_edges.size(); ++i)
    if (!(h.bin_edges[i] > 0.0 && h.bin_edges[i] < h.bin_edges[i + 1]))
      throw validation_error("histogram edges must be positive increasing");
  for (double d : h.densities)
    if (!(d >= 0.0))
      throw validation_error("histogram densities must be nonnegative");
}

}  // namespace

RescaledSample rescale_by_mean(const WealthSample& values) {
  validate_sample(values);
  RescaledSample out;
  out.values.reserve(values.size());
  long double total = 0.0L;
  for (double x : values) {
    if (x == 0.0) {
      ++out.dropped_zeros;
    } else {
      out.values.push_back(x);
      total += x;
    }
  }
  out.original_mean = static_cast<double>(
      total / static_cast<long double>(out.values.size()));
  for (double& x : out.values) x /= out.original_mean;
  return out;
}

LognormalFit fit_lognormal(const std::vector<double>& values) {
  if (values.size() < 2)
    throw validation_error("lognormal fit needs at least 2 positive values");
  check_positive_finite(values, "lognormal fit");
  long double sum = 0.0L;
  for (double x : values) sum += std::log(static_cast<long double>(x));
  const long double n = static_cast<long double>(values.size());
  const long double mu = sum / n;
  long double ss = 0.0L;
  for (double x : values) {
    const long double d = std::log(static_cast<long double>(x)) - mu;
    ss += d * d;
  }
  const double sigma = static_cast<double>(std::sqrt(ss / n));
  if (!(sigma > 0.0))
    throw validation_error("lognormal fit is degenerate: all values equal");
  return {static_cast<double>(mu), sigma,
          static_cast<std::int64_t>(values.size())};
}

LognormalFit fit_lognormal(const RescaledSample& sample) {
  return fit_lognormal(sample.values);
}

PowerLawTailFit fit_powerlaw_tail(const WealthSample& values, int min_tail,
                                  int max_candidates) {
  if (min_tail < 2) throw validation_error("min_tail must be at least 2");
  if (max_candidates < 1)
    throw validation_error("max_candidates must be positive");
  const auto v = sorted_positives(values);
  if (v.size() < static_cast<std::size_t>(min_tail))
    throw validation_error("sample has fewer than min_tail positive values");
  const auto suffix = suffix_log_sums(v);

  // Candidate cutoffs: first occurrence of each distinct value that still
  // leaves a tail of at least min_tail points.
  std::vector<std::size_t> candidates;
  const std::size_t last = v.size() - static_cast<std::size_t>(min_tail);
  for (std::size_t i = 0; i <= last; ++i)
    if (i == 0 || v[i] != v[i - 1]) candidates.push_back(i);
  if (candidates.size() > static_cast<std::size_t>(max_candidates)) {
    std::vector<std::size_t> thinned;
    thinned.reserve(max_candidates);
    if (max_candidates == 1) {
      thinned.push_back(candidates.front());
    } else {
      const double step = static_cast<double>(candidates.size() - 1) /
                          (max_candidates - 1);
      for (int c = 0; c < max_candidates; ++c)
        thinned.push_back(candidates[static_cast<std::size_t>(
            std::llround(c * step))]);
      thinned.erase(std::unique(thinned.begin(), thinned.end()),
                    thinned.end());
    }
    candidates = std::move(thinned);
  }

  PowerLawTailFit best;
  bool found = false;
  for (std::size_t i : candidates) {
    const TailEval e = eval_tail(v, suffix, i, v[i]);
    if (!e.ok) continue;
    if (!found || e.ks < best.ks) {
      best = {e.alpha, v[i], static_cast<std::int64_t>(v.size() - i), e.ks};
      found = true;
    }
  }
  if (!found)
    throw validation_error(
        "no usable tail cutoff: values above every candidate are constant");
  return best;
}

PowerLawTailFit fit_powerlaw_at(const WealthSample& values, double xmin) {
  if (!(xmin > 0.0) || !std::isfinite(xmin))
    throw validation_error("xmin must be finite and positive");
  const auto v = sorted_positives(values);
  const auto first =
      std::lower_bound(v.begin(), v.end(), xmin) - v.begin();
  const std::size_t i = static_cast<std::size_t>(first);
  if (v.size() - i < 2)
    throw validation_error("fewer than 2 values at or above xmin");
  const auto suffix = suffix_log_sums(v);
  const TailEval e = eval_tail(v, suffix, i, xmin);
  if (!e.ok)
    throw validation_error("tail above xmin has no spread: fit undefined");
  return {e.alpha, xmin, static_cast<std::int64_t>(v.size() - i), e.ks};
}

LogHistogram log_binned_histogram(const WealthSample& values,
                                  int bins_per_decade) {
  if (bins_per_decade < 1)
    throw validation_error("bins_per_decade must be at least 1");
  validate_sample(values);
  for (double x : values)
    if (x <= 0.0)
      throw validation_error("log binning requires positive values");

  const double bpd = static_cast<double>(bins_per_decade);
  auto edge = [bpd](long long b) {
    return std::pow(10.0, static_cast<double>(b) / bpd);
  };
  auto bin_of = [&](double x) {
    long long b = static_cast<long long>(
        std::floor(bpd * std::log10(x)));
    while (x < edge(b)) --b;        // guard against log/floor rounding
    while (x >= edge(b + 1)) ++b;
    return b;
  };

  long long b_min = bin_of(values.front());
  long long b_max = b_min;
  for (double x : values) {
    const long long b = bin_of(x);
    b_min = std::min(b_min, b);
    b_max = std::max(b_max, b);
  }
  const std::size_t nbins = static_cast<std::size_t>(b_max - b_min + 1);
  std::vector<double> counts(nbins, 0.0);
  for (double x : values) counts[static_cast<std::size_t>(bin_of(x) - b_min)] += 1.0;

  LogHistogram h;
  h.bin_edges.resize(nbins + 1);
  for (std::size_t m = 0; m <= nbins; ++m)
    h.bin_edges[m] = edge(b_min + static_cast<long long>(m));
  h.densities.resize(nbins);
  const double n = static_cast<double>(values.size());
  for (std::size_t m = 0; m < nbins; ++m)
    h.densities[m] = counts[m] / (n * (h.bin_edges[m + 1] - h.bin_edges[m]));
  return h;
}

double collapse_distance(const LogHistogram& h1, const LogHistogram& h2) {
  check_histogram(h1);
  check_histogram(h2);
  const double lo = std::max(h1.bin_edges.front(), h2.bin_edges.front());
  const double hi = std::min(h1.bin_edges.back(), h2.bin_edges.back());
  if (!(lo < hi))
    throw validation_error("histogram supports do not overlap");

  std::vector<double> edges{lo, hi};
  for (const auto* h : {&h1, &h2})
    for (double e : h->bin_edges)
      if (e > lo && e < hi) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto density_at = [](const LogHistogram& h, double x) {
    const auto& e = h.bin_edges;
    if (x < e.front() || x >= e.back()) return 0.0;
    const std::size_t i = static_cast<std::size_t>(
        std::upper_bound(e.begin(), e.end(), x) - e.begin() - 1);
    return h.densities[i];
  };

  double total = 0.0;
  for (std::size_t m = 0; m + 1 < edges.size(); ++m) {
    const double mid = std::sqrt(edges[m] * edges[m + 1]);
    total += std::fabs(density_at(h1, mid) - density_at(h2, mid)) *
             (edges[m + 1] - edges[m]);
  }
  return total;
}

}  // namespace ineq
