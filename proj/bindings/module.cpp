#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/cutoff.hpp"
#include "orlicz/experiment.hpp"
#include "orlicz/iteration.hpp"
#include "orlicz/metric.hpp"
#include "orlicz/numerics.hpp"
#include "orlicz/sobolev.hpp"
#include "orlicz/young.hpp"

namespace py = pybind11;
using namespace orlicz;

namespace {

py::object summary_to_py(const RunResult& res) {
  return py::module_::import("json").attr("loads")(res.summary.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Luxemburg norms, degenerate-plane ball geometry, and the "
            "accumulating-cutoff doubling machinery";

  py::register_exception<DegenerateDataError>(m, "DegenerateDataError",
                                              PyExc_ValueError);

  // ---- norms ----
  py::class_<YoungFunction>(m, "YoungFunction")
      .def_static("log_power", &YoungFunction::log_power, py::arg("alpha"))
      .def_static("power", &YoungFunction::power, py::arg("p"))
      .def("__call__", &YoungFunction::operator(), py::arg("t"))
      .def("derivative", &YoungFunction::derivative, py::arg("t"))
      .def("inverse", &YoungFunction::inverse, py::arg("y"))
      .def_property_readonly("exponent", &YoungFunction::exponent);

  m.def("check_young", [](const YoungFunction& phi) {
    YoungCheckReport rep = check_young(phi);
    py::list conds;
    for (const auto& c : rep.conditions) {
      py::dict d;
      d["name"] = c.name;
      d["pass"] = c.pass;
      d["witness"] = c.witness;
      conds.append(d);
    }
    py::dict out;
    out["all_pass"] = rep.all_pass();
    out["conditions"] = conds;
    return out;
  }, py::arg("phi"));

  py::class_<DiscreteMeasureSpace>(m, "DiscreteMeasureSpace")
      .def(py::init<std::vector<double>>(), py::arg("weights"))
      .def_property_readonly("total", &DiscreteMeasureSpace::total)
      .def("__len__", &DiscreteMeasureSpace::size);

  m.def("luxemburg_norm", &luxemburg_norm, py::arg("f"), py::arg("space"),
        py::arg("phi"));
  m.def("lp_norm", &lp_norm, py::arg("f"), py::arg("space"), py::arg("p"));
  m.def("zeta", &zeta, py::arg("s"));
  m.def("zeta_tail", &zeta_tail, py::arg("s"), py::arg("from_index"));

  // ---- cutoff sequence ----
  py::class_<CutoffSequence>(m, "CutoffSequence")
      .def(py::init<double, double, int>(), py::arg("r"), py::arg("gamma"),
           py::arg("count"))
      .def_property_readonly("c", &CutoffSequence::c)
      .def_property_readonly("count", &CutoffSequence::count)
      .def_property_readonly("radii", &CutoffSequence::radii)
      .def("radius", &CutoffSequence::radius, py::arg("j"))
      .def("psi", &CutoffSequence::psi, py::arg("j"), py::arg("dist"))
      .def("lip_bound", &CutoffSequence::lip_bound, py::arg("j"));

  // ---- plane geometry ----
  py::class_<DegeneracyProfile>(m, "DegeneracyProfile")
      .def_static("euclidean", &DegeneracyProfile::euclidean)
      .def_static("exp_power", &DegeneracyProfile::exp_power, py::arg("sigma"))
      .def_property_readonly("degenerate", &DegeneracyProfile::degenerate)
      .def("f", &DegeneracyProfile::f, py::arg("x"))
      .def("inv_f", &DegeneracyProfile::inv_f, py::arg("x"));

  py::class_<MetricGrid>(m, "MetricGrid")
      .def(py::init<DegeneracyProfile, double, int>(), py::arg("profile"),
           py::arg("half_width"), py::arg("cells_per_axis"))
      .def_property_readonly("a", &MetricGrid::a)
      .def_property_readonly("n", &MetricGrid::n)
      .def_property_readonly("h", &MetricGrid::h)
      .def_property_readonly("nodes_per_axis", &MetricGrid::nodes_per_axis)
      .def_property_readonly("node_count", &MetricGrid::node_count)
      .def("x", &MetricGrid::x, py::arg("i"))
      .def("y", &MetricGrid::y, py::arg("j"));

  py::class_<DistanceField>(m, "DistanceField")
      .def("at", &DistanceField::at, py::arg("i"), py::arg("j"))
      .def_property_readonly("values", &DistanceField::values)
      .def_property_readonly("source", &DistanceField::source);

  m.def("distance_field", &distance_field, py::arg("grid"), py::arg("src_i"),
        py::arg("src_j"));
  m.def("origin_distance_field", &origin_distance_field, py::arg("grid"));
  m.def("ball_measure", &ball_measure, py::arg("field"), py::arg("r"));
  m.def("doubling_ratio", &doubling_ratio, py::arg("field"), py::arg("r"));
  m.def("volume_asymptotic", &volume_asymptotic, py::arg("profile"), py::arg("r"));
  m.def("detour_distance", &detour_distance, py::arg("profile"), py::arg("x"),
        py::arg("y"), py::arg("x_cap"));
  m.def("column_thickness", &column_thickness, py::arg("profile"), py::arg("x"),
        py::arg("s"));
  m.def("column_thickness_argmax", &column_thickness_argmax, py::arg("profile"),
        py::arg("x"), py::arg("s"));
  m.def("profile_ball_volume", &profile_ball_volume, py::arg("grid"), py::arg("r"));
  m.def("profile_doubling_ratio", &profile_doubling_ratio, py::arg("grid"),
        py::arg("r"));

  py::class_<DoublingFit>(m, "DoublingFit")
      .def_readonly("divergent", &DoublingFit::divergent)
      .def_readonly("sigma_hat", &DoublingFit::sigma_hat)
      .def_readonly("level", &DoublingFit::level)
      .def_readonly("scale", &DoublingFit::scale)
      .def_readonly("drift", &DoublingFit::drift)
      .def_readonly("excess_variation", &DoublingFit::excess_variation)
      .def_readonly("naive_slope", &DoublingFit::naive_slope)
      .def_readonly("points", &DoublingFit::points);

  m.def("log_doubling_exponent_fit", &log_doubling_exponent_fit,
        py::arg("radii"), py::arg("ratios"));

  // ---- accumulation recursion ----
  py::class_<IterationTrace>(m, "IterationTrace")
      .def(py::init<>())
      .def_readwrite("mu_star", &IterationTrace::mu_star)
      .def_readwrite("mu_half", &IterationTrace::mu_half)
      .def_readwrite("c_tilde", &IterationTrace::c_tilde)
      .def_readwrite("gamma", &IterationTrace::gamma)
      .def_readwrite("radii", &IterationTrace::radii)
      .def_readwrite("measures", &IterationTrace::measures);

  m.def("pj_sequence", &pj_sequence, py::arg("trace"));

  py::class_<StepVerdict>(m, "StepVerdict")
      .def_readonly("j", &StepVerdict::j)
      .def_readonly("p_j", &StepVerdict::p_j)
      .def_readonly("setup_ok", &StepVerdict::setup_ok)
      .def_readonly("bump_active", &StepVerdict::bump_active)
      .def_readonly("p_next_bound", &StepVerdict::p_next_bound)
      .def_readonly("recursion_ok", &StepVerdict::recursion_ok);

  py::class_<RecursionReport>(m, "RecursionReport")
      .def_readonly("steps", &RecursionReport::steps)
      .def_readonly("all_setup_ok", &RecursionReport::all_setup_ok)
      .def_readonly("all_recursion_ok", &RecursionReport::all_recursion_ok)
      .def_readonly("first_recursion_failure",
                    &RecursionReport::first_recursion_failure);

  m.def("recursion_check", &recursion_check, py::arg("trace"), py::arg("phi"));

  py::class_<InductionThresholds>(m, "InductionThresholds")
      .def_readonly("closed_form", &InductionThresholds::closed_form)
      .def_readonly("sharper", &InductionThresholds::sharper)
      .def_readonly("argmax_j", &InductionThresholds::argmax_j);

  m.def("induction_threshold", &induction_threshold, py::arg("alpha"),
        py::arg("gamma"), py::arg("c_tilde"));
  m.def("doubling_bound", &doubling_bound, py::arg("alpha"), py::arg("gamma"),
        py::arg("c_tilde"));
  m.def("contradiction_scan", &contradiction_scan, py::arg("p1"),
        py::arg("alpha"), py::arg("gamma"), py::arg("c_tilde"),
        py::arg("ratio_star_half"), py::arg("j_max"));

  py::class_<SuperradiusBound>(m, "SuperradiusBound")
      .def_readonly("value", &SuperradiusBound::value)
      .def_readonly("gamma", &SuperradiusBound::gamma)
      .def_readonly("c_eps", &SuperradiusBound::c_eps)
      .def_readonly("exponent", &SuperradiusBound::exponent)
      .def_readonly("c_tilde_min", &SuperradiusBound::c_tilde_min)
      .def_readonly("vacuous", &SuperradiusBound::vacuous);

  m.def("superradius_lower_bound", &superradius_lower_bound, py::arg("alpha"),
        py::arg("eps"), py::arg("c_s"), py::arg("measure_ratio"),
        py::arg("gamma") = std::nullopt);
  m.def("superradius_lower_bound_sweep", &superradius_lower_bound_sweep,
        py::arg("alpha"), py::arg("eps"), py::arg("c_s"),
        py::arg("measure_ratio"), py::arg("grid_points") = 9);

  // ---- sobolev sampling ----
  m.def("superradius_formula", &superradius_formula, py::arg("sigma"),
        py::arg("alpha"), py::arg("r"));
  m.def("q_gradient", &q_gradient, py::arg("grid"), py::arg("u"));
  m.def("pp_sobolev_check", &pp_sobolev_check, py::arg("field"), py::arg("w"),
        py::arg("r"), py::arg("p"));

  py::class_<ShellQuadrature>(m, "ShellQuadrature")
      .def_readonly("mid", &ShellQuadrature::mid)
      .def_readonly("mass", &ShellQuadrature::mass)
      .def_readonly("q_mass", &ShellQuadrature::q_mass)
      .def_readonly("total", &ShellQuadrature::total);

  m.def("shell_quadrature", &shell_quadrature, py::arg("grid"), py::arg("R"),
        py::arg("shells") = 400);

  py::class_<SuperradiusSamplePoint>(m, "SuperradiusSamplePoint")
      .def_readonly("r", &SuperradiusSamplePoint::r)
      .def_readonly("max_ratio", &SuperradiusSamplePoint::max_ratio)
      .def_readonly("best_profile", &SuperradiusSamplePoint::best_profile)
      .def_readonly("phi_over_r", &SuperradiusSamplePoint::phi_over_r)
      .def_readonly("proxy", &SuperradiusSamplePoint::proxy)
      .def_readonly("band", &SuperradiusSamplePoint::band);

  py::class_<SuperradiusSweep>(m, "SuperradiusSweep")
      .def_readonly("points", &SuperradiusSweep::points)
      .def_readonly("slope", &SuperradiusSweep::slope);

  m.def("empirical_superradius", &empirical_superradius, py::arg("grid"),
        py::arg("phi"), py::arg("radii"), py::arg("gamma"));

  // ---- whole experiments ----
  m.def("run_json", [](const std::string& command, const py::dict& config) {
    ExperimentConfig cfg;
    for (auto item : config)
      cfg.set(py::str(item.first).cast<std::string>(),
              py::str(item.second).cast<std::string>());
    RunResult res;
    if (command == "volume") res = run_volume(cfg);
    else if (command == "doubling") res = run_doubling(cfg);
    else if (command == "superradius") res = run_superradius(cfg);
    else if (command == "sobolev") res = run_sobolev(cfg);
    else if (command == "report") res = run_report(cfg);
    else throw std::invalid_argument("run_json: unknown command '" + command + "'");
    return summary_to_py(res);
  }, py::arg("command"), py::arg("config") = py::dict(),
     "Run one experiment and return its summary document as plain "
     "dicts/lists; config values are passed through the key=value parser.");
}
