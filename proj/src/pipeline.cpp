#include "ineq/pipeline.hpp"

#include <climits>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>

#include <json.hpp>

#include "ineq/errors.hpp"

namespace ineq {

namespace {

constexpr std::size_t kMaxExpandedValues = 100'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

bool parse_count(std::string_view token, std::uint64_t& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path,
                     DatasetFormat format) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open file: " + path.string());
  Dataset ds;
  ds.id = path.stem().string();
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& reason) -> void {
    throw validation_error(path.string() + ":" + std::to_string(lineno) +
                           ": " + reason);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    double value = 0.0;
    std::uint64_t count = 1;
    if (format == DatasetFormat::one_column) {
      if (!parse_double(body, value)) fail("not a number: '" + std::string(body) + "'");
    } else {
      const std::size_t comma = body.find(',');
      if (comma == std::string_view::npos)
        fail("expected 'value,count'");
      if (!parse_double(trim(body.substr(0, comma)), value))
        fail("bad value field");
      if (!parse_count(trim(body.substr(comma + 1)), count) || count == 0)
        fail("count must be a positive integer");
    }
    if (!std::isfinite(value)) fail("value must be finite");
    if (value < 0.0) fail("negative value");
    if (ds.values.size() + count > kMaxExpandedValues)
      fail("expanded dataset exceeds " +
           std::to_string(kMaxExpandedValues) + " values");
    ds.values.insert(ds.values.end(), count, value);
  }
  if (ds.values.empty())
    throw validation_error(path.string() + ": no records");
  return ds;
}

ScatterResult scatter_from_datasets(const std::vector<Dataset>& datasets) {
  ScatterResult out;
  for (const auto& ds : datasets) {
    try {
      const IndexReport r = indices_report(ds.values);
      out.scatter.records.push_back({ds.id, std::nullopt, r.g, r.k, r.n});
    } catch (const validation_error& e) {
      out.failures.push_back(ds.id + ": " + e.what());
    }
  }
  return out;
}

LinearFit fit_gk_line(const GKScatter& scatter, double g_max) {
  if (!(g_max > 0.0) || !std::isfinite(g_max))
    throw validation_error("g_max must be finite and positive");
  std::vector<const GKRecord*> pts;
  for (const auto& r : scatter.records)
    if (r.g <= g_max) pts.push_back(&r);
  if (pts.size() < 2)
    throw validation_error("need at least 2 scatter points with g <= " +
                           format_number(g_max));
  long double gm = 0.0L;
  long double km = 0.0L;
  for (const auto* r : pts) {
    gm += r->g;
    km += r->k;
  }
  gm /= static_cast<long double>(pts.size());
  km /= static_cast<long double>(pts.size());
  long double sgg = 0.0L;
  long double sgk = 0.0L;
  for (const auto* r : pts) {
    sgg += (r->g - gm) * (r->g - gm);
    sgk += (r->g - gm) * (r->k - km);
  }
  if (!(sgg > 0.0L))
    throw numeric_error("g-k fit is degenerate: all g values equal");
  LinearFit fit;
  fit.gamma = static_cast<double>(sgk / sgg);
  fit.intercept = static_cast<double>(km - (sgk / sgg) * gm);
  fit.g_window = g_max;
  fit.n_points = static_cast<int>(pts.size());
  long double ss = 0.0L;
  for (const auto* r : pts) {
    const long double res = r->k - (fit.intercept + fit.gamma * r->g);
    ss += res * res;
  }
  fit.rmse = static_cast<double>(
      std::sqrt(ss / static_cast<long double>(pts.size())));
  return fit;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

namespace {

// JSON doubles go through the same 6-significant-digit rounding as text
// output, so the two formats always agree.
double round6(double v) { return std::stod(format_number(v)); }

nlohmann::ordered_json fit_json(const LinearFit& fit) {
  nlohmann::ordered_json j;
  j["gamma"] = round6(fit.gamma);
  j["intercept"] = round6(fit.intercept);
  j["rmse"] = round6(fit.rmse);
  j["n_points"] = fit.n_points;
  j["g_window"] = round6(fit.g_window);
  return j;
}

nlohmann::ordered_json record_json(const GKRecord& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  if (r.param)
    j["param"] = round6(*r.param);
  else
    j["param"] = nullptr;
  j["g"] = round6(r.g);
  j["k"] = round6(r.k);
  j["n"] = r.n;
  return j;
}

}  // namespace

std::string report_csv(const IndexReport& report) {
  std::string out = "g,k,n,mean\n";
  out += format_number(report.g) + "," + format_number(report.k) + "," +
         std::to_string(report.n) + "," + format_number(report.mean) + "\n";
  return out;
}

std::string report_json(const IndexReport& report) {
  nlohmann::ordered_json j;
  j["g"] = round6(report.g);
  j["k"] = round6(report.k);
  j["n"] = report.n;
  j["mean"] = round6(report.mean);
  return j.dump() + "\n";
}

std::string scatter_csv(const GKScatter& scatter, const LinearFit* fit) {
  std::string out;
  if (fit) {
    out += "# fit: k = intercept + gamma * g over points with g <= " +
           format_number(fit->g_window) + "\n";
    out += "# gamma=" + format_number(fit->gamma) +
           " intercept=" + format_number(fit->intercept) +
           " rmse=" + format_number(fit->rmse) +
           " n_points=" + std::to_string(fit->n_points) + "\n";
  }
  out += "label,param,g,k,n\n";
  for (const auto& r : scatter.records) {
    out += r.label + ",";
    if (r.param) out += format_number(*r.param);
    out += "," + format_number(r.g) + "," + format_number(r.k) + "," +
           std::to_string(r.n) + "\n";
  }
  return out;
}

std::string scatter_json(const GKScatter& scatter, const LinearFit* fit) {
  nlohmann::ordered_json j;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : scatter.records) j["records"].push_back(record_json(r));
  if (fit) j["fit"] = fit_json(*fit);
  return j.dump() + "\n";
}

}  // namespace ineq
