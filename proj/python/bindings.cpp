#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scsgen/errors.hpp"
#include "scsgen/herald.hpp"
#include "scsgen/optimizer.hpp"
#include "scsgen/oracle.hpp"
#include "scsgen/states.hpp"
#include "scsgen/validation.hpp"

namespace py = pybind11;
using namespace scsgen;

namespace {

CutoffPolicy policy(std::optional<int> cutoff) { return cutoff ? CutoffPolicy::at(*cutoff) : CutoffPolicy{}; }

std::vector<double> to_list(const FockVector& v) { return {v.amplitudes().begin(), v.amplitudes().end()}; }

SqueezeParams squeeze_args(std::optional<double> s_db, std::optional<double> y, std::optional<double> s) {
  if (s_db.has_value() + y.has_value() + s.has_value() != 1) {
    throw DomainError("give exactly one of s_db, y, s");
  }
  if (s_db) return squeeze_from(SqueezeAnchor::decibels, *s_db);
  if (y) return squeeze_from(SqueezeAnchor::parameter, *y);
  return squeeze_from(SqueezeAnchor::amplitude, *s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heralded even/odd cat-state generation from squeezed vacuum and two ancilla photons";
  m.attr("__version__") = SCSGEN_VERSION;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_ArithmeticError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  py::class_<SqueezeParams>(m, "SqueezeParams")
      .def_readonly("s", &SqueezeParams::s)
      .def_readonly("y", &SqueezeParams::y)
      .def_readonly("s_db", &SqueezeParams::s_db)
      .def_readonly("mean_photons", &SqueezeParams::mean_photons)
      .def("__repr__", [](const SqueezeParams& p) {
        return "SqueezeParams(s=" + std::to_string(p.s) + ", y=" + std::to_string(p.y) +
               ", s_db=" + std::to_string(p.s_db) + ")";
      });
  m.def("squeeze", &squeeze_args, py::kw_only(), py::arg("s_db") = py::none(), py::arg("y") = py::none(),
        py::arg("s") = py::none(), "Squeezing from exactly one of dB, y = tanh(s)/2 or s.");

  m.def(
      "smsv_state", [](const SqueezeParams& p, std::optional<int> cutoff) { return to_list(smsv_state(p, policy(cutoff))); },
      py::arg("squeeze"), py::arg("cutoff") = py::none());
  m.def(
      "scs_state",
      [](double beta, bool odd, std::optional<int> cutoff) {
        return to_list(scs_state(ScsTarget(beta, odd ? ScsSign::minus : ScsSign::plus), policy(cutoff)));
      },
      py::arg("beta"), py::arg("odd") = false, py::arg("cutoff") = py::none());
  m.def(
      "fidelity",
      [](std::vector<double> a, std::vector<double> b) { return fidelity(FockVector(std::move(a)), FockVector(std::move(b))); },
      py::arg("a"), py::arg("b"));

  py::class_<BeamSplitter>(m, "BeamSplitter")
      .def(py::init(&BeamSplitter::from_ratio), py::arg("B"))
      .def_readonly("B", &BeamSplitter::B)
      .def_readonly("t", &BeamSplitter::t)
      .def_readonly("r", &BeamSplitter::r)
      .def_readonly("T", &BeamSplitter::T)
      .def_readonly("R", &BeamSplitter::R);
  m.def("bs_element", &bs_element, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"), py::arg("bs"),
        "<p, q| U |m, n> for one beam splitter.");

  py::class_<HeraldOutcome>(m, "HeraldOutcome")
      .def_readonly("k1", &HeraldOutcome::k1)
      .def_readonly("k2", &HeraldOutcome::k2)
      .def_readonly("probability", &HeraldOutcome::probability)
      .def_readonly("feasible", &HeraldOutcome::feasible)
      .def_property_readonly("state", [](const HeraldOutcome& o) { return to_list(o.state); })
      .def_property_readonly("parity", [](const HeraldOutcome& o) {
        return o.state.empty() ? std::string("none") : std::string(to_string(o.state.parity()));
      });

  m.def(
      "cascade_herald",
      [](const SqueezeParams& sq, double B, int k1, int k2, int ancillas, std::optional<int> cutoff) {
        return cascade_herald(smsv_state(sq, policy(cutoff)), ancillas, ancillas, BeamSplitter::from_ratio(B), k1, k2);
      },
      py::arg("squeeze"), py::arg("B"), py::arg("k1"), py::arg("k2"), py::arg("ancillas") = 1,
      py::arg("cutoff") = py::none(), "Brute-force interferometer: heralded state and probability of (k1, k2).");
  m.def(
      "herald_distribution",
      [](const SqueezeParams& sq, double B, int kmax, int ancillas, int threads) {
        return herald_distribution(smsv_state(sq), ancillas, ancillas, BeamSplitter::from_ratio(B), kmax, threads);
      },
      py::arg("squeeze"), py::arg("B"), py::arg("kmax"), py::arg("ancillas") = 1, py::arg("threads") = 1);

  m.def("herald_amplitude_ck", &herald_amplitude_ck, py::arg("k"), py::arg("y"), py::arg("B"));
  m.def(
      "conditional_state",
      [](int k1, int k2, double y2, double B, std::optional<int> cutoff) {
        return to_list(conditional_state(HeraldPattern(k1, k2), y2, B, policy(cutoff)));
      },
      py::arg("k1"), py::arg("k2"), py::arg("y2"), py::arg("B"), py::arg("cutoff") = py::none(),
      "Closed-form heralded state (normalized, sign-canonical).");
  m.def(
      "normalization_direct",
      [](int k1, int k2, double y2, double B) { return normalization_G_direct(HeraldPattern(k1, k2), y2, B); },
      py::arg("k1"), py::arg("k2"), py::arg("y2"), py::arg("B"));
  m.def(
      "normalization_closed",
      [](int k1, int k2, double y2, double B, std::optional<int> degree) {
        return normalization_G_closed(HeraldPattern(k1, k2), y2, B, degree);
      },
      py::arg("k1"), py::arg("k2"), py::arg("y2"), py::arg("B"), py::arg("degree") = py::none());
  m.def(
      "herald_probability",
      [](int k1, int k2, const SqueezeParams& sq, double B) {
        return herald_probability(HeraldPattern(k1, k2), CascadeParams::make(sq, BeamSplitter::from_ratio(B)));
      },
      py::arg("k1"), py::arg("k2"), py::arg("squeeze"), py::arg("B"));

  py::class_<SearchBox>(m, "SearchBox")
      .def(py::init([](double B_min, double B_max, double S_min_dB, double S_max_dB) {
             return SearchBox{B_min, B_max, S_min_dB, S_max_dB};
           }),
           py::kw_only(), py::arg("B_min") = 0.01, py::arg("B_max") = 1.0, py::arg("S_min_dB") = 0.5,
           py::arg("S_max_dB") = 20.0)
      .def_readwrite("B_min", &SearchBox::B_min)
      .def_readwrite("B_max", &SearchBox::B_max)
      .def_readwrite("S_min_dB", &SearchBox::S_min_dB)
      .def_readwrite("S_max_dB", &SearchBox::S_max_dB);

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("beta", &OptimizationResult::beta)
      .def_readonly("k1", &OptimizationResult::k1)
      .def_readonly("k2", &OptimizationResult::k2)
      .def_readonly("B_opt", &OptimizationResult::B_opt)
      .def_readonly("S_opt_dB", &OptimizationResult::S_opt_dB)
      .def_readonly("fid_max", &OptimizationResult::fid_max)
      .def_readonly("probability", &OptimizationResult::probability)
      .def_readonly("grid_best", &OptimizationResult::grid_best)
      .def_readonly("evaluations", &OptimizationResult::evaluations)
      .def_readonly("converged", &OptimizationResult::converged)
      .def_readonly("failure", &OptimizationResult::failure);

  m.def(
      "optimize_fidelity",
      [](int k1, int k2, double beta, const SearchBox& box, int threads) {
        OptimizerSettings s;
        s.threads = threads;
        return optimize_fidelity(k1, k2, beta, box, s);
      },
      py::arg("k1"), py::arg("k2"), py::arg("beta"), py::arg("box") = SearchBox{}, py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep_beta",
      [](int k1, int k2, const std::vector<double>& betas, const SearchBox& box) {
        return sweep_beta(k1, k2, betas, box);
      },
      py::arg("k1"), py::arg("k2"), py::arg("betas"), py::arg("box") = SearchBox{},
      py::call_guard<py::gil_scoped_release>());

  py::class_<Baseline00Result>(m, "Baseline00Result")
      .def_readonly("beta", &Baseline00Result::beta)
      .def_readonly("y2_opt", &Baseline00Result::y2_opt)
      .def_readonly("fid00", &Baseline00Result::fid00)
      .def_readonly("baseline_S_dB", &Baseline00Result::baseline_S_dB)
      .def_readonly("feasible", &Baseline00Result::feasible)
      .def_readonly("B", &Baseline00Result::B)
      .def_readonly("probability", &Baseline00Result::probability);
  m.def(
      "baseline00", [](int k1, int k2, double beta, double s_db) { return baseline00(k1, k2, beta, s_db); },
      py::arg("k1"), py::arg("k2"), py::arg("beta"), py::arg("baseline_S_dB"));

  py::class_<GainMetrics>(m, "GainMetrics")
      .def_readonly("beta", &GainMetrics::beta)
      .def_readonly("k1", &GainMetrics::k1)
      .def_readonly("k2", &GainMetrics::k2)
      .def_readonly("fid11", &GainMetrics::fid11)
      .def_readonly("fid00", &GainMetrics::fid00)
      .def_readonly("g_dB", &GainMetrics::g_dB)
      .def_readonly("p11", &GainMetrics::p11)
      .def_readonly("p00", &GainMetrics::p00)
      .def_readonly("j_dB", &GainMetrics::j_dB)
      .def_readonly("baseline_S_dB", &GainMetrics::baseline_S_dB)
      .def_readonly("feasible", &GainMetrics::feasible)
      .def_readonly("infinite_gain", &GainMetrics::infinite_gain);
  m.def(
      "gain_curves",
      [](const std::vector<std::pair<int, int>>& patterns, const std::vector<double>& betas,
         const std::vector<double>& baselines, const SearchBox& box, int threads) {
        return gain_curves(patterns, betas, baselines, box, {}, {}, threads);
      },
      py::arg("patterns"), py::arg("betas"), py::arg("baseline_S_dB") = std::vector<double>{20.0, 9.0},
      py::arg("box") = SearchBox{}, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

  m.def(
      "validate",
      [] {
        py::list out;
        for (const SuiteResult& s : run_validation().suites) {
          py::dict d;
          d["name"] = s.name;
          d["passed"] = s.passed;
          d["max_residual"] = s.max_residual;
          d["tolerance"] = s.tolerance;
          d["cases"] = s.cases;
          d["first_failure"] = s.first_failure;
          out.append(d);
        }
        return out;
      },
      "Run the oracle-equivalence and normalization suites; one dict per suite.");
}
