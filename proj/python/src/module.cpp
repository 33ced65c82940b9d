#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "rwlab/experiments.hpp"
#include "rwlab/parallel.hpp"
#include "rwlab/spectral.hpp"

namespace py = pybind11;
using namespace rwlab;

namespace
{

HalfPlane parse_half(const std::string &s)
{
  if (s == "plus")
    return HalfPlane::Plus;
  if (s == "minus")
    return HalfPlane::Minus;
  throw py::value_error("half must be 'plus' or 'minus'");
}

py::dict table_dict(const Table &t)
{
  py::dict d;
  d["columns"] = t.columns;
  d["rows"] = t.rows;
  return d;
}

py::dict run(const std::string &experiment, const std::string &config,
             const std::vector<std::string> &overrides, int threads, const std::string &out)
{
  ExperimentOutput result;
  ExperimentConfig cfg;
  {
    py::gil_scoped_release release;
    const Experiment e = parse_experiment(experiment);
    Config raw = Config::load(config);
    for (const std::string &o : overrides)
      raw.apply_override(o);
    cfg = resolve_config(e, raw);
    result = run_experiment(cfg, threads);
    if (!out.empty())
      write_outputs(result, cfg, out);
  }
  py::dict d;
  d["verdict"] = verdict_name(result.verdict);
  d["exit_code"] = exit_code(result.verdict);
  d["results"] = table_dict(result.results);
  d["solver_stats"] = table_dict(result.solver_stats);
  py::list diags;
  for (const auto &e : result.diagnostics.entries())
    diags.append(py::make_tuple(e.name, e.params, e.value));
  d["diagnostics"] = diags;
  d["notes"] = result.notes;
  if (result.last_field)
  {
    const Field &f = *result.last_field;
    const Grid &g = f.grid();
    std::vector<py::ssize_t> shape(static_cast<std::size_t>(g.dim()), g.points());
    py::array_t<cplx> a(shape);
    std::copy(f.values().begin(), f.values().end(), a.mutable_data());
    d["field"] = a;
    d["half_width"] = g.half_width();
  }
  else
  {
    d["field"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_rwlab, m)
{
  m.doc() = "Two-media reduced wave operator lab";
  m.attr("__version__") = RWLAB_VERSION;

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def(
      "k_at",
      [](double lambda, double eta, double mu, const std::string &half)
      { return k_at(SpectralParam(lambda, eta, parse_half(half)), mu); },
      py::arg("lam"), py::arg("eta"), py::arg("mu"), py::arg("half") = "plus",
      "Branch of sqrt(z mu) with Im k >= 0; on the real axis the limit from 'half'.");
  m.def(
      "branch_coefficients",
      [](double lambda, double eta, const std::string &half)
      {
        const BranchCoefficients b = branch_coefficients(SpectralParam(lambda, eta, parse_half(half)));
        return py::make_tuple(b.c_a, b.c_b, b.e_z);
      },
      py::arg("lam"), py::arg("eta"), py::arg("half") = "plus", "(c_a, c_b, e_z)");
  m.def(
      "dimension_constants",
      [](int N, double delta)
      {
        const DimensionConstants c = dimension_constants(N, delta);
        return py::make_tuple(c.c_N, c.c_delta);
      },
      py::arg("N"), py::arg("delta"), "(c_N, c_delta)");
  m.def("experiments",
        []
        {
          std::vector<std::string> out;
          for (Experiment e : {Experiment::Solve, Experiment::SweepEta, Experiment::ScanResolvent,
                               Experiment::CheckGeometry, Experiment::VerifyIdentity,
                               Experiment::RadiationProbe})
            out.push_back(experiment_name(e));
          return out;
        });
  m.def("default_threads", &default_thread_count);
  m.def("run", &run, py::arg("experiment"), py::arg("config"),
        py::arg("overrides") = std::vector<std::string>{}, py::arg("threads") = 1,
        py::arg("out") = std::string{},
        "Run an experiment from a config file. Returns a dict with verdict, exit_code, "
        "results, solver_stats, diagnostics, notes and field (numpy array or None).");
}
