// Python bindings for the ineq core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ineq/analytic.hpp"
#include "ineq/errors.hpp"
#include "ineq/fitting.hpp"
#include "ineq/kinetic.hpp"
#include "ineq/metrics.hpp"
#include "ineq/pipeline.hpp"

namespace py = pybind11;

namespace {

py::tuple gk_tuple(ineq::GKPoint p) { return py::make_tuple(p.g, p.k); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Inequality indices, analytic Lorenz families, kinetic exchange "
      "models, and heavy-tail fitting";

  py::register_exception<ineq::validation_error>(m, "ValidationError",
                                                 PyExc_ValueError);
  py::register_exception<ineq::numeric_error>(m, "NumericError",
                                              PyExc_RuntimeError);

  py::class_<ineq::LorenzPoint>(m, "LorenzPoint")
      .def_readonly("x", &ineq::LorenzPoint::x)
      .def_readonly("y", &ineq::LorenzPoint::y)
      .def("__repr__", [](const ineq::LorenzPoint& p) {
        return "LorenzPoint(x=" + std::to_string(p.x) +
               ", y=" + std::to_string(p.y) + ")";
      });

  py::class_<ineq::LorenzCurve>(m, "LorenzCurve")
      .def_readonly("points", &ineq::LorenzCurve::points);

  py::class_<ineq::IndexReport>(m, "IndexReport")
      .def_readonly("g", &ineq::IndexReport::g)
      .def_readonly("k", &ineq::IndexReport::k)
      .def_readonly("n", &ineq::IndexReport::n)
      .def_readonly("mean", &ineq::IndexReport::mean)
      .def("__repr__", [](const ineq::IndexReport& r) {
        return "IndexReport(g=" + std::to_string(r.g) +
               ", k=" + std::to_string(r.k) + ", n=" + std::to_string(r.n) +
               ", mean=" + std::to_string(r.mean) + ")";
      });

  m.def("gini", [](const ineq::WealthSample& v) { return ineq::gini(v); },
        py::arg("values"), "Gini index of a sample");
  m.def("kolkata",
        [](const ineq::WealthSample& v) { return ineq::kolkata(v); },
        py::arg("values"), "Kolkata index of a sample");
  m.def("indices_report", &ineq::indices_report, py::arg("values"),
        "Gini, Kolkata, size, and mean in one pass");
  m.def("build_lorenz", &ineq::build_lorenz, py::arg("values"),
        "Empirical Lorenz curve of a sample");

  m.def("gk_power", [](double p) { return gk_tuple(ineq::gk_power(p)); },
        py::arg("p"), "(g, k) for the Lorenz family L(x) = x**p");
  m.def("gk_circle_arc",
        [](double t) { return gk_tuple(ineq::gk_circle_arc(t)); },
        py::arg("t"), "(g, k) for the circle-arc Lorenz family");
  m.def("gk_exponential",
        []() { return gk_tuple(ineq::gk_exponential()); },
        "(g, k) for the exponential distribution");
  m.def("gk_lognormal",
        [](double sigma) { return gk_tuple(ineq::gk_lognormal(sigma)); },
        py::arg("sigma"), "(g, k) for the lognormal distribution");

  py::class_<ineq::SimulationSchedule>(m, "SimulationSchedule")
      .def(py::init([](int therm_sweeps, int sample_count,
                       int sample_stride) {
             return ineq::SimulationSchedule{therm_sweeps, sample_count,
                                             sample_stride};
           }),
           py::arg("therm_sweeps") = 10000, py::arg("sample_count") = 100,
           py::arg("sample_stride") = 10)
      .def_readwrite("therm_sweeps", &ineq::SimulationSchedule::therm_sweeps)
      .def_readwrite("sample_count", &ineq::SimulationSchedule::sample_count)
      .def_readwrite("sample_stride",
                     &ineq::SimulationSchedule::sample_stride);

  py::class_<ineq::SteadyStateSample>(m, "SteadyStateSample")
      .def_readonly("pooled_wealth", &ineq::SteadyStateSample::pooled_wealth)
      .def_readonly("report", &ineq::SteadyStateSample::report)
      .def_readonly("conservation_error",
                    &ineq::SteadyStateSample::conservation_error);

  m.def("cc_trade", &ineq::cc_trade, py::arg("mi"), py::arg("mj"),
        py::arg("lam"), py::arg("r"),
        "One uniform-saving exchange; returns the two new wealths");
  m.def("ccm_trade", &ineq::ccm_trade, py::arg("mi"), py::arg("mj"),
        py::arg("lam_i"), py::arg("lam_j"), py::arg("r"),
        "One distributed-saving exchange; returns the two new wealths");
  m.def("sample_saving", &ineq::sample_saving, py::arg("delta"),
        py::arg("u"), "Inverse-CDF draw from the quenched saving density");

  m.def(
      "run_cc",
      [](double lam, int agents, std::uint64_t seed,
         const ineq::SimulationSchedule& schedule) {
        return ineq::run_steady_state(ineq::CCParams{lam, agents, seed},
                                      schedule);
      },
      py::arg("lam"), py::arg("agents") = 1000, py::arg("seed") = 42,
      py::arg("schedule") = ineq::SimulationSchedule{},
      "Steady state of the uniform-saving model");
  m.def(
      "run_ccm",
      [](double delta, int agents, std::uint64_t seed,
         const ineq::SimulationSchedule& schedule) {
        return ineq::run_steady_state(ineq::CCMParams{delta, agents, seed},
                                      schedule);
      },
      py::arg("delta"), py::arg("agents") = 1000, py::arg("seed") = 42,
      py::arg("schedule") = ineq::SimulationSchedule{},
      "Steady state of the distributed-saving model");
  m.def("run_quenched", &ineq::run_quenched, py::arg("saving"),
        py::arg("schedule"), py::arg("seed"),
        "Steady state for an explicit per-agent saving vector");

  py::class_<ineq::GKRecord>(m, "GKRecord")
      .def_readonly("label", &ineq::GKRecord::label)
      .def_readonly("param", &ineq::GKRecord::param)
      .def_readonly("g", &ineq::GKRecord::g)
      .def_readonly("k", &ineq::GKRecord::k)
      .def_readonly("n", &ineq::GKRecord::n);

  py::class_<ineq::LinearFit>(m, "LinearFit")
      .def_readonly("gamma", &ineq::LinearFit::gamma)
      .def_readonly("intercept", &ineq::LinearFit::intercept)
      .def_readonly("g_window", &ineq::LinearFit::g_window)
      .def_readonly("n_points", &ineq::LinearFit::n_points)
      .def_readonly("rmse", &ineq::LinearFit::rmse);

  m.def(
      "sweep_lambda",
      [](const std::vector<double>& lambdas, int agents,
         const ineq::SimulationSchedule& schedule, std::uint64_t base_seed,
         bool parallel) {
        return ineq::sweep_lambda(lambdas, agents, schedule, base_seed,
                                  parallel)
            .records;
      },
      py::arg("lambdas"), py::arg("agents") = 1000,
      py::arg("schedule") = ineq::SimulationSchedule{},
      py::arg("base_seed") = 42, py::arg("parallel") = false,
      "One record per lambda");
  m.def(
      "sweep_delta",
      [](const std::vector<double>& deltas, int agents,
         const ineq::SimulationSchedule& schedule, std::uint64_t base_seed,
         int quenched_configs, bool parallel) {
        return ineq::sweep_delta(deltas, agents, schedule, base_seed,
                                 quenched_configs, parallel)
            .records;
      },
      py::arg("deltas"), py::arg("agents") = 1000,
      py::arg("schedule") = ineq::SimulationSchedule{},
      py::arg("base_seed") = 42, py::arg("quenched_configs") = 1,
      py::arg("parallel") = false, "One averaged record per delta");
  m.def(
      "fit_gk_line",
      [](const std::vector<ineq::GKRecord>& records, double g_max) {
        ineq::GKScatter scatter{records};
        return ineq::fit_gk_line(scatter, g_max);
      },
      py::arg("records"), py::arg("g_max") = 0.70,
      "Least-squares k = intercept + gamma * g over records with g <= g_max");

  py::class_<ineq::RescaledSample>(m, "RescaledSample")
      .def_readonly("values", &ineq::RescaledSample::values)
      .def_readonly("original_mean", &ineq::RescaledSample::original_mean)
      .def_readonly("dropped_zeros", &ineq::RescaledSample::dropped_zeros);

  py::class_<ineq::LognormalFit>(m, "LognormalFit")
      .def_readonly("mu", &ineq::LognormalFit::mu)
      .def_readonly("sigma", &ineq::LognormalFit::sigma)
      .def_readonly("n_used", &ineq::LognormalFit::n_used);

  py::class_<ineq::PowerLawTailFit>(m, "PowerLawTailFit")
      .def_readonly("alpha", &ineq::PowerLawTailFit::alpha)
      .def_readonly("xmin", &ineq::PowerLawTailFit::xmin)
      .def_readonly("n_tail", &ineq::PowerLawTailFit::n_tail)
      .def_readonly("ks", &ineq::PowerLawTailFit::ks);

  py::class_<ineq::LogHistogram>(m, "LogHistogram")
      .def_readonly("bin_edges", &ineq::LogHistogram::bin_edges)
      .def_readonly("densities", &ineq::LogHistogram::densities);

  m.def("rescale_by_mean", &ineq::rescale_by_mean, py::arg("values"),
        "Drop zeros and divide by the mean");
  m.def("fit_lognormal",
        [](const ineq::WealthSample& v) { return ineq::fit_lognormal(v); },
        py::arg("values"), "Exact lognormal MLE");
  m.def("fit_powerlaw_tail", &ineq::fit_powerlaw_tail, py::arg("values"),
        py::arg("min_tail") = 50, py::arg("max_candidates") = 256,
        "KS-minimizing tail cutoff plus MLE exponent");
  m.def("fit_powerlaw_at", &ineq::fit_powerlaw_at, py::arg("values"),
        py::arg("xmin"), "MLE exponent for a fixed tail cutoff");
  m.def("log_binned_histogram", &ineq::log_binned_histogram,
        py::arg("values"), py::arg("bins_per_decade") = 5,
        "Probability density over decade-aligned log bins");
  m.def("collapse_distance", &ineq::collapse_distance, py::arg("first"),
        py::arg("second"),
        "L1 distance between two log-binned densities where they overlap");
}
