#ifndef RWLAB_EXPERIMENTS_HPP
#define RWLAB_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rwlab/config.hpp"
#include "rwlab/diagnostics.hpp"
#include "rwlab/field.hpp"
#include "rwlab/geometry.hpp"
#include "rwlab/grid.hpp"
#include "rwlab/report.hpp"
#include "rwlab/solver.hpp"
#include "rwlab/weights.hpp"

namespace rwlab
{

enum class Experiment
{
  Solve,
  SweepEta,
  ScanResolvent,
  CheckGeometry,
  VerifyIdentity,
  RadiationProbe
};

Experiment parse_experiment(const std::string &name);
std::string experiment_name(Experiment e);

enum class SourceKind
{
  Gaussian,
  Zero,
  Manufactured
};

// Field examined by verify-identity and radiation-probe.
enum class TestFieldKind
{
  Green,
  Gaussian,
  Plane,
  Solved
};

struct Thresholds
{
  double cauchy_shrink = 0.05;
  double ratio_band = 10.0;
  double tail_growth = 1.2;
  double identity = 2e-2;
  int monotone_tail = 3;
};

struct ExperimentConfig
{
  Experiment experiment = Experiment::Solve;
  Geometry geometry{Cylinder{}, 3, MediumPair{}};
  Grid grid{3, 1.0, 16};
  // spectral.lambda + i spectral.eta for single-parameter experiments (eta is 0 otherwise).
  SpectralParam z{1.0, 1.0};
  // Half-plane of the eta ladder.
  HalfPlane half = HalfPlane::Plus;
  std::vector<double> eta_ladder;
  double c = 0.5;
  double d = 2.0;
  int lambda_count = 4;
  std::vector<double> scan_etas;
  double delta = 1.0;
  SolveConfig solver;
  SourceKind source = SourceKind::Gaussian;
  double source_width = 1.0;
  Point source_center{};
  TestFieldKind field = TestFieldKind::Green;
  Point field_center{};
  Point field_direction{1.0, 0.0, 0.0};
  std::vector<WeightProfile> profiles;
  double identity_r = 1.0;
  double identity_R = 2.0;
  AlphaChoice alpha = AlphaChoice::InverseSqrtMu;
  std::vector<double> probe_radii;
  double probe_alpha = 0.0;
  double probe_inner = 1.0;
  double check_radius = 1.0;
  int check_samples = 4096;
  Thresholds thresholds;
  bool timings = false;
  bool write_field = true;
  bool truncation_check = false;
  // Every key with the value actually used, defaults included.
  Config resolved;
};

// Validates and fills defaults. Throws ConfigError.
ExperimentConfig resolve_config(Experiment e, const Config &raw);

// The right-hand side f described by the source block at spectral parameter z.
Field make_source(const ExperimentConfig &cfg, const SpectralParam &z);

struct SweepRow
{
  SpectralParam z;
  double norm_u = 0.0;
  double resolvent_ratio = 0.0;
  double radiation_ratio = 0.0;
  double sobolev_ratio = 0.0;
  // Weighted distance to the previous row's field; NaN on the first row.
  double cauchy = 0.0;
  SolveReport report;
};

struct SweepResult
{
  std::vector<SweepRow> rows;
  bool solver_failed = false;
  std::string error;
  std::optional<Field> last_field;
};

// The spectral parameters a sweep-eta or scan-resolvent run visits, in output order.
std::vector<SpectralParam> sweep_parameters(const ExperimentConfig &cfg);
std::vector<SpectralParam> scan_parameters(const ExperimentConfig &cfg);

SweepResult run_sweep_eta(const ExperimentConfig &cfg, int threads);
SweepResult run_scan_resolvent(const ExperimentConfig &cfg, int threads);

bool sweep_passes(const SweepResult &r, const Thresholds &t);
bool scan_passes(const SweepResult &r, const ExperimentConfig &cfg);

enum class Verdict
{
  Pass,
  Fail,
  Completed,
  Unjudged,
  SolverFailure
};

std::string verdict_name(Verdict v);
// 0 for Pass, Completed and Unjudged, 2 for Fail, 3 for SolverFailure.
int exit_code(Verdict v);

struct ExperimentOutput
{
  Verdict verdict = Verdict::Completed;
  std::vector<std::string> notes;
  Table results;
  Table solver_stats;
  DiagnosticsReport diagnostics;
  std::optional<Field> last_field;
};

ExperimentOutput run_experiment(const ExperimentConfig &cfg, int threads);

// manifest.txt, results.csv, diagnostics.csv, solver_stats.csv (solving experiments) and
// field.rwf1 (when a field was produced) under dir.
void write_outputs(const ExperimentOutput &out, const ExperimentConfig &cfg,
                   const std::string &dir);

}  // namespace rwlab

#endif  // RWLAB_EXPERIMENTS_HPP
