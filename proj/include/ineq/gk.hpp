#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ineq {

// One point of a g-k scatter: a labeled sample with its indices.
struct GKRecord {
  std::string label;
  std::optional<double> param;  // lambda or delta for sweeps, empty for files
  double g = 0.0;
  double k = 0.5;
  std::int64_t n = 0;
};

struct GKScatter {
  std::vector<GKRecord> records;
};

// Least-squares line k = intercept + gamma * g over records with
// g <= g_window.
struct LinearFit {
  double gamma = 0.0;
  double intercept = 0.0;
  double g_window = 0.0;
  int n_points = 0;
  double rmse = 0.0;
};

}  // namespace ineq
