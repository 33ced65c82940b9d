#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "rwlab/experiments.hpp"
#include "rwlab/parallel.hpp"

int main(int argc, char **argv)
{
  CLI::App app{"Two-media reduced wave operator lab"};
  app.set_version_flag("--version", std::string(RWLAB_VERSION));

  std::string experiment;
  std::string config_path;
  std::string out_dir = "rwlab-out";
  int threads = rwlab::default_thread_count();
  std::vector<std::string> overrides;
  bool quiet = false;

  app.add_option("experiment", experiment,
                 "solve, sweep-eta, scan-resolvent, check-geometry, verify-identity or "
                 "radiation-probe")
      ->required();
  app.add_option("--config", config_path, "key = value configuration file")->required();
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--threads", threads, "concurrent solves (default: RWLAB_THREADS or 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--override", overrides, "key=value replacing a config entry (repeatable)");
  app.add_flag("--quiet", quiet, "do not print the result table");

  CLI11_PARSE(app, argc, argv);

  try
  {
    const rwlab::Experiment e = rwlab::parse_experiment(experiment);
    rwlab::Config raw = rwlab::Config::load(config_path);
    for (const std::string &o : overrides)
      raw.apply_override(o);
    const rwlab::ExperimentConfig cfg = rwlab::resolve_config(e, raw);
    const rwlab::ExperimentOutput out = rwlab::run_experiment(cfg, threads);
    rwlab::write_outputs(out, cfg, out_dir);
    if (!quiet)
    {
      out.results.write_pretty(std::cout);
      if (!out.diagnostics.empty())
      {
        std::cout << '\n';
        out.diagnostics.write_pretty(std::cout);
      }
    }
    for (const std::string &note : out.notes)
      std::cerr << "note: " << note << '\n';
    std::cout << experiment << ": " << rwlab::verdict_name(out.verdict) << '\n';
    return rwlab::exit_code(out.verdict);
  }
  catch (const rwlab::ConfigError &ex)
  {
    std::cerr << "rwlab: configuration error: " << ex.what() << '\n';
    return 1;
  }
  catch (const std::exception &ex)
  {
    std::cerr << "rwlab: " << ex.what() << '\n';
    return 1;
  }
}
