#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mwrc/ee_solver.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/sweeps.hpp"

#include <sstream>

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

std::string table_text(const mwrc::SweepTable &t, mwrc::TableFormat f) {
  std::ostringstream os;
  mwrc::write_table(os, t, f);
  return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sum rates and energy-efficient power allocation for the 3-user "
            "multi-way relay channel";

  py::register_exception<mwrc::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<mwrc::NonConvergence>(m, "NonConvergence",
                                               PyExc_RuntimeError);

  py::enum_<mwrc::Scheme>(m, "Scheme")
      .value("OuterBound", mwrc::Scheme::OuterBound)
      .value("AF", mwrc::Scheme::AF)
      .value("DF", mwrc::Scheme::DF)
      .value("NncSnd", mwrc::Scheme::NncSnd)
      .value("NncIan", mwrc::Scheme::NncIan);

  py::class_<mwrc::ChannelParams>(m, "ChannelParams")
      .def(py::init<double, double, double, double>(), "P"_a = 0.0,
           "P0"_a = 0.0, "N"_a = 1.0, "N0"_a = 1.0)
      .def_readwrite("P", &mwrc::ChannelParams::P)
      .def_readwrite("P0", &mwrc::ChannelParams::P0)
      .def_readwrite("N", &mwrc::ChannelParams::N)
      .def_readwrite("N0", &mwrc::ChannelParams::N0);

  py::class_<mwrc::PowerModel>(m, "PowerModel")
      .def(py::init<double, double, double>(), "phi"_a = 3.0, "psi"_a = 1.0,
           "Pc"_a = 1.0)
      .def_readwrite("phi", &mwrc::PowerModel::phi)
      .def_readwrite("psi", &mwrc::PowerModel::psi)
      .def_readwrite("Pc", &mwrc::PowerModel::Pc);

  py::class_<mwrc::BoxDomain>(m, "BoxDomain")
      .def(py::init<double, double>(), "Pmax"_a = 1.0, "P0max"_a = 1.0)
      .def_readwrite("Pmax", &mwrc::BoxDomain::Pmax)
      .def_readwrite("P0max", &mwrc::BoxDomain::P0max);

  py::class_<mwrc::SolverSettings>(m, "SolverSettings")
      .def(py::init<>())
      .def_readwrite("dinkelbach_tol", &mwrc::SolverSettings::dinkelbach_tol)
      .def_readwrite("am_tol", &mwrc::SolverSettings::am_tol)
      .def_readwrite("inner_tol", &mwrc::SolverSettings::inner_tol)
      .def_readwrite("max_outer_iters", &mwrc::SolverSettings::max_outer_iters)
      .def_readwrite("max_inner_iters", &mwrc::SolverSettings::max_inner_iters);

  py::class_<mwrc::Ee1Form>(m, "Ee1Form")
      .def_readonly("a1", &mwrc::Ee1Form::a1)
      .def_readonly("a2", &mwrc::Ee1Form::a2)
      .def_readonly("alpha1", &mwrc::Ee1Form::alpha1)
      .def_readonly("alpha2", &mwrc::Ee1Form::alpha2)
      .def("rate", &mwrc::Ee1Form::rate, "P"_a, "P0"_a);

  py::class_<mwrc::Ee2Form>(m, "Ee2Form")
      .def_readonly("alpha", &mwrc::Ee2Form::alpha)
      .def_readonly("a", &mwrc::Ee2Form::a)
      .def_readonly("b", &mwrc::Ee2Form::b)
      .def_readonly("c", &mwrc::Ee2Form::c)
      .def_readonly("d", &mwrc::Ee2Form::d)
      .def("rate", &mwrc::Ee2Form::rate, "P"_a, "P0"_a);

  py::class_<mwrc::DinkelbachResult>(m, "DinkelbachResult")
      .def_readonly("x", &mwrc::DinkelbachResult::x)
      .def_readonly("value", &mwrc::DinkelbachResult::value)
      .def_readonly("lambda_trace", &mwrc::DinkelbachResult::lambda_trace)
      .def_readonly("residual", &mwrc::DinkelbachResult::residual)
      .def_readonly("iterations", &mwrc::DinkelbachResult::iterations)
      .def_readonly("converged", &mwrc::DinkelbachResult::converged);

  py::class_<mwrc::OptResult>(m, "OptResult")
      .def_readonly("P_opt", &mwrc::OptResult::P_opt)
      .def_readonly("P0_opt", &mwrc::OptResult::P0_opt)
      .def_readonly("ee_value", &mwrc::OptResult::ee_value)
      .def_readonly("lambda_trace", &mwrc::OptResult::lambda_trace)
      .def_readonly("outer_iterations", &mwrc::OptResult::outer_iterations)
      .def_readonly("converged", &mwrc::OptResult::converged)
      .def_readonly("ee_trace", &mwrc::OptResult::ee_trace);

  m.def("capacity", &mwrc::capacity, "snr"_a);
  m.def("outer_bound", &mwrc::outer_bound, "p"_a);
  m.def("af_sum_rate", &mwrc::af_sum_rate, "p"_a);
  m.def("df_sum_rate", &mwrc::df_sum_rate, "p"_a);
  m.def("nnc_snd_sum_rate", &mwrc::nnc_snd_sum_rate, "p"_a);
  m.def("nnc_ian_sum_rate", &mwrc::nnc_ian_sum_rate, "p"_a);
  m.def("sum_rate", &mwrc::sum_rate, "scheme"_a, "p"_a);
  m.def("df_optimality_threshold", &mwrc::df_optimality_threshold);
  m.def("db_to_linear", &mwrc::db_to_linear, "db"_a);
  m.def("linear_to_db", &mwrc::linear_to_db, "linear"_a);

  m.def("total_power", &mwrc::total_power, "P"_a, "P0"_a, "model"_a);
  m.def("ee1_form_for", &mwrc::ee1_form_for, "scheme"_a, "N"_a, "N0"_a);
  m.def("ee2_form_for", &mwrc::ee2_form_for, "scheme"_a, "N"_a, "N0"_a);
  m.def("eval_ee", &mwrc::eval_ee, "scheme"_a, "p"_a, "model"_a);

  m.def("dinkelbach", &mwrc::dinkelbach, "numerator"_a, "denominator"_a,
        "lo"_a, "hi"_a, "settings"_a = mwrc::SolverSettings{},
        "Maximize numerator(x) / denominator(x) on [lo, hi].");
  m.def("solve_ee1", &mwrc::solve_ee1, "form"_a, "model"_a, "box"_a,
        "settings"_a = mwrc::SolverSettings{});
  m.def("solve_ee2", &mwrc::solve_ee2, "form"_a, "model"_a, "box"_a,
        "settings"_a, "P0_init"_a);
  m.def("solve_ee", &mwrc::solve_ee, "scheme"_a, "N"_a = 1.0, "N0"_a = 1.0,
        "model"_a = mwrc::PowerModel{}, "box"_a = mwrc::BoxDomain{},
        "settings"_a = mwrc::SolverSettings{}, "P0_init"_a = py::none());
  m.def("grid_oracle", &mwrc::grid_oracle, "scheme"_a, "N"_a, "N0"_a,
        "model"_a, "box"_a, "n_per_axis"_a);

  py::enum_<mwrc::SweepKind>(m, "SweepKind")
      .value("SpectralVsSnr", mwrc::SweepKind::SpectralVsSnr)
      .value("EeVsPmax", mwrc::SweepKind::EeVsPmax)
      .value("EeVsCircuitPower", mwrc::SweepKind::EeVsCircuitPower);

  py::enum_<mwrc::TableFormat>(m, "TableFormat")
      .value("Dat", mwrc::TableFormat::Dat)
      .value("Csv", mwrc::TableFormat::Csv)
      .value("Json", mwrc::TableFormat::Json);

  py::class_<mwrc::SweepSpec>(m, "SweepSpec")
      .def_readwrite("kind", &mwrc::SweepSpec::kind)
      .def_readwrite("x_start", &mwrc::SweepSpec::x_start)
      .def_readwrite("x_stop", &mwrc::SweepSpec::x_stop)
      .def_readwrite("x_step", &mwrc::SweepSpec::x_step)
      .def_readwrite("schemes", &mwrc::SweepSpec::schemes)
      .def_readwrite("N", &mwrc::SweepSpec::N)
      .def_readwrite("N0", &mwrc::SweepSpec::N0)
      .def_readwrite("power", &mwrc::SweepSpec::power)
      .def_readwrite("box", &mwrc::SweepSpec::box)
      .def_readwrite("settings", &mwrc::SweepSpec::settings);

  py::class_<mwrc::SweepTable>(m, "SweepTable")
      .def_readonly("x_label", &mwrc::SweepTable::x_label)
      .def_readonly("column_labels", &mwrc::SweepTable::column_labels)
      .def("xs", &mwrc::SweepTable::xs)
      .def("column", &mwrc::SweepTable::column, "label"_a)
      .def("to_text", &table_text, "format"_a = mwrc::TableFormat::Dat);

  py::class_<mwrc::Crossing>(m, "Crossing")
      .def_readonly("x_cross", &mwrc::Crossing::x_cross)
      .def_readonly("left_label", &mwrc::Crossing::left_label)
      .def_readonly("right_label", &mwrc::Crossing::right_label)
      .def_readonly("refined", &mwrc::Crossing::refined);

  py::class_<mwrc::Saturation>(m, "Saturation")
      .def_readonly("x", &mwrc::Saturation::x)
      .def_readonly("saturated", &mwrc::Saturation::saturated);

  m.def("default_sweep_spec", &mwrc::default_sweep_spec, "kind"_a);
  m.def("run_sweep", &mwrc::run_sweep, "spec"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep_difference", &mwrc::sweep_difference, "spec"_a, "a"_a, "b"_a);
  m.def("find_crossing", &mwrc::find_crossing, "table"_a, "column_a"_a,
        "column_b"_a, "refine"_a = std::function<double(double)>{});
  m.def("detect_saturation", &mwrc::detect_saturation, "table"_a, "column"_a,
        "rel_tol"_a = 1e-6);
}
