#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ineq/gk.hpp"
#include "ineq/metrics.hpp"

namespace ineq {

enum class DatasetFormat {
  one_column,  // one nonnegative value per line
  two_column,  // "value,count" frequency table
};

struct Dataset {
  std::string id;       // defaults to the file stem
  WealthSample values;  // counts expanded
};

// Scatter plus the datasets that failed validation ("id: reason"); a bad
// dataset never aborts the batch.
struct ScatterResult {
  GKScatter scatter;
  std::vector<std::string> failures;
};

// Text loader; '#' comments and blank lines are skipped, LF or CRLF.
// Malformed content is reported as "path:line: reason".
Dataset load_dataset(const std::filesystem::path& path,
                     DatasetFormat format);

ScatterResult scatter_from_datasets(const std::vector<Dataset>& datasets);

// OLS of k on g over records with g <= g_max (the linear law's validity
// window); records above the window stay in the scatter but not the fit.
LinearFit fit_gk_line(const GKScatter& scatter, double g_max = 0.70);

// All human-facing numbers are printed with 6 significant digits.
std::string format_number(double v);

std::string report_csv(const IndexReport& report);
std::string report_json(const IndexReport& report);

// Pass fit = nullptr to omit the fit block.
std::string scatter_csv(const GKScatter& scatter, const LinearFit* fit);
std::string scatter_json(const GKScatter& scatter, const LinearFit* fit);

}  // namespace ineq
