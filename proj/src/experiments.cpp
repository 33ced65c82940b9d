#include "rwlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "rwlab/field_io.hpp"
#include "rwlab/oracles.hpp"

namespace rwlab
{

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::pair<Experiment, std::string>> &experiment_names()
{
  static const std::vector<std::pair<Experiment, std::string>> names{
      {Experiment::Solve, "solve"},
      {Experiment::SweepEta, "sweep-eta"},
      {Experiment::ScanResolvent, "scan-resolvent"},
      {Experiment::CheckGeometry, "check-geometry"},
      {Experiment::VerifyIdentity, "verify-identity"},
      {Experiment::RadiationProbe, "radiation-probe"},
  };
  return names;
}

// Reads keys from the raw config and records the value used (default or given).
class Resolver
{
public:
  explicit Resolver(const Config &raw) : raw_(raw) {}

  double num(const std::string &key, double fallback)
  {
    const double v = raw_.get_double(key, fallback);
    out_.set(key, format_double(v));
    return v;
  }
  int integer(const std::string &key, int fallback)
  {
    const int v = raw_.get_int(key, fallback);
    out_.set(key, std::to_string(v));
    return v;
  }
  bool flag(const std::string &key, bool fallback)
  {
    const bool v = raw_.get_bool(key, fallback);
    out_.set(key, v ? "true" : "false");
    return v;
  }
  std::string str(const std::string &key, const std::string &fallback)
  {
    const std::string v = raw_.get_string(key, fallback);
    out_.set(key, v);
    return v;
  }
  std::vector<double> nums(const std::string &key, const std::vector<double> &fallback)
  {
    const std::vector<double> v = raw_.get_doubles(key, fallback);
    std::string text;
    for (std::size_t i = 0; i < v.size(); ++i)
      text += (i ? "," : "") + format_double(v[i]);
    out_.set(key, text);
    return v;
  }
  std::vector<std::string> strs(const std::string &key, const std::vector<std::string> &fallback)
  {
    const std::vector<std::string> v = raw_.get_strings(key, fallback);
    std::string text;
    for (std::size_t i = 0; i < v.size(); ++i)
      text += (i ? "," : "") + v[i];
    out_.set(key, text);
    return v;
  }
  Point point(const std::string &key, int dim, const Point &fallback)
  {
    std::vector<double> def(fallback.begin(), fallback.begin() + dim);
    const std::vector<double> v = nums(key, def);
    if (static_cast<int>(v.size()) != dim)
    {
      throw ConfigError("config key '" + key + "' needs " + std::to_string(dim) + " entries");
    }
    Point p{0.0, 0.0, 0.0};
    std::copy(v.begin(), v.end(), p.begin());
    return p;
  }

  const Config &resolved() const { return out_; }

  void check_unknown() const
  {
    for (const auto &[key, value] : raw_.entries())
    {
      if (!out_.has(key))
        throw ConfigError("unknown config key '" + key + "'");
    }
  }

private:
  const Config &raw_;
  Config out_;
};

void require(bool ok, const std::string &message)
{
  if (!ok)
    throw ConfigError(message);
}

int axis_from(Resolver &r, const std::string &key, int dim)
{
  const int a = r.integer(key, dim);
  require(a >= 1 && a <= dim, "config key '" + key + "' must lie in 1.." + std::to_string(dim));
  return a - 1;
}

bool strictly_decreasing_positive(const std::vector<double> &v)
{
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    if (!(v[i] > 0.0) || (i > 0 && !(v[i] < v[i - 1])))
      return false;
  }
  return !v.empty();
}

std::vector<double> halving_ladder(int steps)
{
  std::vector<double> v;
  for (int k = 0; k <= steps; ++k)
    v.push_back(std::ldexp(1.0, -k));
  return v;
}

Geometry resolve_geometry(Resolver &r, int dim)
{
  const std::string kind = r.str("geometry.kind", "cylinder");
  const double mu1 = r.num("media.mu1", 1.0), mu2 = r.num("media.mu2", 2.0);
  const bool complement = r.flag("geometry.complement", false);
  // Read every geometry key so that one config file can be switched between kinds.
  const double radius = r.num("geometry.radius", 1.0);
  const int axis = axis_from(r, "geometry.axis", dim);
  const double half_angle = r.num("geometry.half_angle", 0.5);
  const int plane_index = axis_from(r, "geometry.plane_index", dim);
  const double offset = r.num("geometry.offset", 0.0);
  GeometryKind gk;
  if (kind == "cylinder")
    gk = Cylinder{radius, axis};
  else if (kind == "cone")
    gk = Cone{half_angle, axis};
  else if (kind == "halfspace" || kind == "plane")
    gk = HalfSpace{plane_index, offset};
  else if (kind == "ball")
    gk = Ball{radius};
  else
    throw ConfigError("geometry.kind must be cylinder, cone, halfspace or ball");
  try
  {
    return Geometry(gk, dim, MediumPair(mu1, mu2), complement);
  }
  catch (const std::invalid_argument &e)
  {
    throw ConfigError(e.what());
  }
}

std::vector<WeightProfile> resolve_profiles(Resolver &r, int dim, double delta, double rr,
                                            double RR)
{
  const std::vector<std::string> def =
      dim == 3 ? std::vector<std::string>{"truncated", "power_delta", "two_d_delta"}
               : std::vector<std::string>{"truncated", "two_d_alpha", "two_d_delta"};
  const std::vector<std::string> names = r.strs("identity.profiles", def);
  const double R0 = r.num("identity.R0", 0.5 * (rr + RR));
  const double r0 = r.num("identity.r0", 1.0);
  const double alpha = r.num("identity.alpha_exponent", 0.5);
  std::vector<WeightProfile> out;
  for (const std::string &n : names)
  {
    if (n == "truncated")
      out.emplace_back(TruncatedWeight{R0});
    else if (n == "power_delta")
      out.emplace_back(PowerDeltaWeight{delta});
    else if (n == "two_d_alpha")
      out.emplace_back(TwoDAlphaWeight{r0, alpha});
    else if (n == "two_d_delta")
      out.emplace_back(TwoDDeltaWeight{delta});
    else
      throw ConfigError("identity.profiles: unknown profile '" + n + "'");
    try
    {
      validate_weight(out.back());
    }
    catch (const std::invalid_argument &e)
    {
      throw ConfigError(e.what());
    }
  }
  return out;
}

double attenuation(const ExperimentConfig &cfg, const SpectralParam &z)
{
  const BranchCoefficients b = branch_coefficients(z);
  return std::exp(-b.c_b * std::sqrt(cfg.geometry.media().mu0()) * cfg.grid.half_width());
}

std::string spectral_text(const SpectralParam &z)
{
  return format_double(z.lambda) + (z.side() == HalfPlane::Plus ? "+" : "-") + "i" +
         format_double(std::abs(z.eta));
}

struct SignCheck
{
  bool available = false;
  ConditionReport report;
};

SignCheck sign_condition(const ExperimentConfig &cfg)
{
  SignCheck s;
  const double reach = cfg.grid.half_width() * std::sqrt(static_cast<double>(cfg.grid.dim()));
  const std::vector<SurfaceSample> samples = sample_surface(cfg.geometry, reach, 4096);
  if (samples.empty())
    return s;
  s.available = true;
  s.report = check_sign_condition(cfg.geometry, samples);
  return s;
}

void add_sign_notes(const SignCheck &s, ExperimentOutput &out)
{
  if (!s.available)
  {
    out.notes.push_back("separating surface does not meet the box");
    return;
  }
  out.diagnostics.add("sign_condition_min_product", "{}", s.report.min_product);
  if (!s.report.pass)
  {
    out.notes.push_back("sign condition (mu2 - mu1) x.n1 >= 0 violated on S; ratios are "
                        "reported without a PASS/FAIL judgment");
  }
}

void add_attenuation_note(const ExperimentConfig &cfg, std::span<const SpectralParam> zs,
                          ExperimentOutput &out)
{
  int count = 0;
  double worst = 0.0;
  for (const SpectralParam &z : zs)
  {
    const double a = attenuation(cfg, z);
    worst = std::max(worst, a);
    if (a > cfg.solver.tolerance)
      ++count;
  }
  out.diagnostics.add("box_attenuation_max", "{}", worst);
  if (count > 0)
  {
    out.notes.push_back("box truncation: exp(-c_b sqrt(mu0) L) exceeds the solver tolerance for " +
                        std::to_string(count) + " of " + std::to_string(zs.size()) +
                        " spectral parameters (max " + format_double(worst) + ")");
  }
}

SweepRow row_metrics(const ExperimentConfig &cfg, const SpectralParam &z, const Field &u,
                     const Field &f, double fnorm)
{
  SweepRow row;
  row.z = z;
  row.norm_u = weighted_norm(u, -cfg.delta);
  if (fnorm > 0.0)
  {
    row.resolvent_ratio = std::sqrt(z.abs_z()) * row.norm_u / fnorm;
    row.radiation_ratio =
        radiation_estimate_ratio(u, f, cfg.geometry, RadiationVariant::signed_k(z), cfg.delta);
    row.sobolev_ratio = sobolev_norm(u, 2, -cfg.delta) / fnorm;
  }
  return row;
}

SweepResult solve_rows(const ExperimentConfig &cfg, std::span<const SpectralParam> zs,
                       int threads, bool cauchy)
{
  SweepResult result;
  const Field f = make_source(cfg, zs.front());
  const double fnorm = weighted_norm(f, cfg.delta);
  const std::size_t batch = static_cast<std::size_t>(std::max(1, threads));
  std::optional<Field> prev;
  for (std::size_t start = 0; start < zs.size(); start += batch)
  {
    const std::size_t count = std::min(batch, zs.size() - start);
    std::vector<SweepEntry> entries =
        resolvent_sweep(cfg.grid, cfg.geometry, zs.subspan(start, count), f, cfg.solver, threads);
    for (SweepEntry &e : entries)
    {
      if (!e.ok())
      {
        SweepRow row;
        row.z = e.z;
        row.report = e.report;
        row.norm_u = row.resolvent_ratio = row.radiation_ratio = row.sobolev_ratio = kNaN;
        row.cauchy = kNaN;
        result.rows.push_back(row);
        result.solver_failed = true;
        result.error = "solve at z = " + spectral_text(e.z) + " failed: " + e.error;
        result.last_field = std::move(prev);
        return result;
      }
      SweepRow row = row_metrics(cfg, e.z, *e.u, f, fnorm);
      row.report = e.report;
      row.cauchy = (cauchy && prev) ? weighted_norm(*e.u - *prev, -cfg.delta) : kNaN;
      result.rows.push_back(row);
      prev = std::move(e.u);
    }
  }
  result.last_field = std::move(prev);
  return result;
}

Table sweep_table(const SweepResult &r, bool cauchy)
{
  Table t;
  t.columns = {"z_re", "z_im", "norm_u", "resolvent_ratio", "radiation_ratio", "sobolev_ratio"};
  if (cauchy)
    t.columns.push_back("cauchy");
  t.columns.insert(t.columns.end(), {"iterations", "final_residual"});
  for (const SweepRow &row : r.rows)
  {
    std::vector<std::string> cells{format_double(row.z.lambda),        format_double(row.z.eta),
                                   format_double(row.norm_u),          format_double(row.resolvent_ratio),
                                   format_double(row.radiation_ratio), format_double(row.sobolev_ratio)};
    if (cauchy)
      cells.push_back(format_double(row.cauchy));
    cells.push_back(std::to_string(row.report.iterations));
    cells.push_back(format_double(row.report.final_residual));
    t.add_row(std::move(cells));
  }
  return t;
}

Table stats_table(const SweepResult &r, int n, bool timings)
{
  Table t{{"z_re", "z_im", "n", "iterations", "final_residual", "wall_seconds"}, {}};
  for (const SweepRow &row : r.rows)
  {
    t.add_row({format_double(row.z.lambda), format_double(row.z.eta), std::to_string(n),
               std::to_string(row.report.iterations), format_double(row.report.final_residual),
               timings ? format_double(row.report.wall_seconds) : std::string("nan")});
  }
  return t;
}

// Solve on the box enlarged by 1.5 at the same spacing and compare on the original box.
double truncation_sensitivity(const ExperimentConfig &cfg, const SpectralParam &z, const Field &u)
{
  const Grid &g = cfg.grid;
  const int n_big = 1 + static_cast<int>(std::lround(1.5 * (g.points() - 1)));
  const Grid big(g.dim(), g.spacing() * (n_big - 1) / 2.0, n_big);
  ExperimentConfig c2 = cfg;
  c2.grid = big;
  c2.solver.method = preferred_method(big);
  const Field f = make_source(c2, z);
  const DiscreteOperator op = assemble(big, cfg.geometry, z, c2.solver);
  const SolveResult res = apply_resolvent(op, f, c2.solver);
  Field diff(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    diff[i] = u[i] - interpolate(big, res.u.values(), g.position(i));
  const double base = weighted_norm(u, -cfg.delta);
  return base > 0.0 ? weighted_norm(diff, -cfg.delta) / base : 0.0;
}

AnalyticField test_field(const ExperimentConfig &cfg, const SpectralParam &z)
{
  const int dim = cfg.grid.dim();
  const double mu = cfg.geometry.mu(cfg.field_center);
  switch (cfg.field)
  {
  case TestFieldKind::Green:
    if (dim == 3)
      return {SphericalWave3D{k_at(z, mu), cfg.field_center}, 3};
    if (z.eta != 0.0)
      throw ConfigError("the two-dimensional Green's function needs spectral.eta = 0");
    return {HankelWave2D{std::sqrt(z.lambda * mu), cfg.field_center}, 2};
  case TestFieldKind::Gaussian:
    return {GaussianBump{cfg.source_width, cfg.field_center}, dim};
  case TestFieldKind::Plane:
    return {PlaneWave{k_at(z, mu), cfg.field_direction}, dim};
  case TestFieldKind::Solved:
    break;
  }
  throw ConfigError("no analytic field for field.kind = solved");
}

std::string field_kind_name(TestFieldKind k)
{
  switch (k)
  {
  case TestFieldKind::Green:
    return "green";
  case TestFieldKind::Gaussian:
    return "gaussian";
  case TestFieldKind::Plane:
    return "plane";
  case TestFieldKind::Solved:
    return "solved";
  }
  return "";
}

// Field and right-hand side for verify-identity / radiation-probe. Returns false on solver
// failure (message in error).
bool examined_field(const ExperimentConfig &cfg, std::optional<Field> &u, std::optional<Field> &f,
                    SolveReport &report, std::string &error)
{
  const Grid &grid = cfg.grid;
  if (cfg.field == TestFieldKind::Solved)
  {
    f = make_source(cfg, cfg.z);
    try
    {
      const DiscreteOperator op = assemble(grid, cfg.geometry, cfg.z, cfg.solver);
      SolveResult res = apply_resolvent(op, *f, cfg.solver);
      report = res.report;
      u = std::move(res.u);
    }
    catch (const SolveError &e)
    {
      report = e.report();
      error = e.what();
      return false;
    }
    return true;
  }
  const AnalyticField a = test_field(cfg, cfg.z);
  if (cfg.field == TestFieldKind::Gaussian)
  {
    auto [us, fs] = manufactured_pair(a, cfg.z, cfg.geometry, grid);
    u = std::move(us);
    f = std::move(fs);
    return true;
  }
  u = sample_analytic(a, grid);
  f = Field(grid);
  return true;
}

}  // namespace

Experiment parse_experiment(const std::string &name)
{
  for (const auto &[e, n] : experiment_names())
  {
    if (n == name)
      return e;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

std::string experiment_name(Experiment e)
{
  for (const auto &[x, n] : experiment_names())
  {
    if (x == e)
      return n;
  }
  return "";
}

ExperimentConfig resolve_config(Experiment e, const Config &raw)
{
  Resolver r(raw);
  ExperimentConfig cfg;
  cfg.experiment = e;

  const int dim = r.integer("dimension", 3);
  require(dim == 2 || dim == 3, "dimension must be 2 or 3");
  cfg.geometry = resolve_geometry(r, dim);
  const double L = r.num("grid.L", 4.0);
  const int n = r.integer("grid.n", 65);
  require(L > 0.0, "grid.L must be positive");
  require(n >= 16, "grid.n must be at least 16");
  cfg.grid = Grid(dim, L, n);

  const double lambda = r.num("spectral.lambda", 1.0);
  const double eta = r.num("spectral.eta", 1.0);
  const std::string half = r.str("spectral.half", "plus");
  require(half == "plus" || half == "minus", "spectral.half must be plus or minus");
  require(lambda >= 0.0, "spectral.lambda must be >= 0");
  const HalfPlane hp = half == "plus" ? HalfPlane::Plus : HalfPlane::Minus;
  const bool uses_eta = e == Experiment::Solve || e == Experiment::VerifyIdentity ||
                        e == Experiment::RadiationProbe;
  require(!uses_eta || eta == 0.0 || (eta > 0.0) == (hp == HalfPlane::Plus),
          "spectral.eta sign disagrees with spectral.half");
  cfg.half = hp;
  cfg.z = SpectralParam(lambda, uses_eta ? eta : 0.0, hp);
  cfg.eta_ladder = r.nums("spectral.eta_ladder", halving_ladder(10));
  require(strictly_decreasing_positive(cfg.eta_ladder),
          "spectral.eta_ladder must be strictly decreasing and positive");
  cfg.c = r.num("spectral.c", 0.5);
  cfg.d = r.num("spectral.d", 2.0);
  require(cfg.c > 0.0 && cfg.c < cfg.d, "need 0 < spectral.c < spectral.d");
  cfg.lambda_count = r.integer("spectral.lambda_count", 4);
  require(cfg.lambda_count >= 1, "spectral.lambda_count must be positive");
  cfg.scan_etas = r.nums("spectral.scan_etas", {1.0, 0.1, 0.01, 1e-3});
  require(strictly_decreasing_positive(cfg.scan_etas) && cfg.scan_etas.front() <= 1.0,
          "spectral.scan_etas must be strictly decreasing in (0, 1]");

  cfg.delta = r.num("delta", 1.0);
  require(cfg.delta > 0.5 && cfg.delta <= 1.0, "delta must lie in (1/2, 1]");

  const std::string method = r.str("solver.method", "auto");
  if (method == "auto")
    cfg.solver.method = preferred_method(cfg.grid);
  else if (method == "direct")
    cfg.solver.method = SolveMethod::Direct;
  else if (method == "iterative")
    cfg.solver.method = SolveMethod::Iterative;
  else
    throw ConfigError("solver.method must be auto, direct or iterative");
  cfg.solver.tolerance = r.num("solver.tolerance", 1e-8);
  cfg.solver.max_iterations = r.integer("solver.max_iterations", 2000);
  const std::string closure = r.str("solver.closure", "sommerfeld");
  if (closure == "sommerfeld")
    cfg.solver.closure = BoundaryClosure::SommerfeldFirstOrder;
  else if (closure == "dirichlet")
    cfg.solver.closure = BoundaryClosure::Dirichlet;
  else
    throw ConfigError("solver.closure must be sommerfeld or dirichlet");
  cfg.solver.shift = r.num("solver.shift", 0.5);
  cfg.solver.smoothing_steps = r.integer("solver.smoothing_steps", 2);
  try
  {
    validate(cfg.solver);
  }
  catch (const std::invalid_argument &ex)
  {
    throw ConfigError(ex.what());
  }
  require(cfg.solver.method == SolveMethod::Iterative || cfg.grid.size() <= kDirectNodeLimit,
          "solver.method = direct is limited to 2e5 nodes");

  const std::string source = r.str("source.kind", "gaussian");
  if (source == "gaussian")
    cfg.source = SourceKind::Gaussian;
  else if (source == "zero")
    cfg.source = SourceKind::Zero;
  else if (source == "manufactured")
    cfg.source = SourceKind::Manufactured;
  else
    throw ConfigError("source.kind must be gaussian, zero or manufactured");
  cfg.source_width = r.num("source.width", 1.0);
  require(cfg.source_width > 0.0, "source.width must be positive");
  cfg.source_center = r.point("source.center", dim, {0.0, 0.0, 0.0});

  const std::string field = r.str("field.kind", "green");
  if (field == "green")
    cfg.field = TestFieldKind::Green;
  else if (field == "gaussian")
    cfg.field = TestFieldKind::Gaussian;
  else if (field == "plane")
    cfg.field = TestFieldKind::Plane;
  else if (field == "solved")
    cfg.field = TestFieldKind::Solved;
  else
    throw ConfigError("field.kind must be green, gaussian, plane or solved");
  cfg.field_center = r.point("field.center", dim, {0.3, 0.2, 0.1});
  cfg.field_direction = r.point("field.direction", dim, {1.0, 0.0, 0.0});
  require(norm(cfg.field_direction) > 0.0, "field.direction must be nonzero");
  {
    const double s = norm(cfg.field_direction);
    for (double &c : cfg.field_direction)
      c /= s;
  }

  cfg.identity_r = r.num("identity.r", 0.25 * L);
  cfg.identity_R = r.num("identity.R", 0.75 * L);
  cfg.profiles = resolve_profiles(r, dim, cfg.delta, cfg.identity_r, cfg.identity_R);
  const std::string alpha = r.str("identity.alpha", "inverse_sqrt_mu");
  if (alpha == "inverse_sqrt_mu")
    cfg.alpha = AlphaChoice::InverseSqrtMu;
  else if (alpha == "unit")
    cfg.alpha = AlphaChoice::Unit;
  else
    throw ConfigError("identity.alpha must be inverse_sqrt_mu or unit");

  cfg.probe_radii = r.nums("probe.radii", {0.25 * L, 0.5 * L, 0.75 * L});
  cfg.probe_alpha = r.num("probe.alpha", 0.0);
  cfg.probe_inner = r.num("probe.inner_radius", 1.0);
  require(cfg.probe_alpha >= 0.0, "probe.alpha must be >= 0");
  require(cfg.probe_inner > 0.0, "probe.inner_radius must be positive");

  cfg.check_radius = r.num("check.radius", L);
  cfg.check_samples = r.integer("check.samples", 4096);
  require(cfg.check_radius > 0.0, "check.radius must be positive");
  require(cfg.check_samples >= 8, "check.samples must be at least 8");

  cfg.thresholds.cauchy_shrink = r.num("thresholds.cauchy_shrink", 0.05);
  cfg.thresholds.ratio_band = r.num("thresholds.ratio_band", 10.0);
  cfg.thresholds.tail_growth = r.num("thresholds.tail_growth", 1.2);
  cfg.thresholds.identity = r.num("thresholds.identity", 2e-2);
  cfg.thresholds.monotone_tail = r.integer("thresholds.monotone_tail", 3);
  require(cfg.thresholds.monotone_tail >= 1, "thresholds.monotone_tail must be positive");

  cfg.timings = r.flag("output.timings", false);
  cfg.write_field = r.flag("output.field", true);
  cfg.truncation_check = r.flag("sweep.truncation_check", false);

  r.check_unknown();

  // Experiment-specific checks.
  switch (e)
  {
  case Experiment::SweepEta:
    require(cfg.eta_ladder.size() >= 2, "spectral.eta_ladder needs at least two entries");
    [[fallthrough]];
  case Experiment::ScanResolvent:
    require(cfg.source != SourceKind::Manufactured,
            "source.kind = manufactured depends on z; use it with the solve experiment");
    break;
  case Experiment::VerifyIdentity:
    require(cfg.identity_r > cfg.grid.spacing() && cfg.identity_r < cfg.identity_R &&
                cfg.identity_R < L,
            "need h < identity.r < identity.R < grid.L");
    require(cfg.field != TestFieldKind::Green || norm(cfg.field_center) < cfg.identity_r,
            "field.center must lie inside |x| < identity.r for the Green's function");
    require(cfg.field != TestFieldKind::Plane, "verify-identity needs green, gaussian or solved");
    [[fallthrough]];
  case Experiment::RadiationProbe:
    require(cfg.field == TestFieldKind::Solved || cfg.z.eta == 0.0 ||
                cfg.experiment == Experiment::VerifyIdentity,
            "analytic probe fields need spectral.eta = 0");
    for (double R : cfg.probe_radii)
      require(R > 0.0 && R < L, "probe.radii must lie in (0, grid.L)");
    require(cfg.z.lambda > 0.0, "spectral.lambda must be positive");
    break;
  default:
    break;
  }
  require(cfg.solver.closure == BoundaryClosure::Dirichlet || !uses_eta || cfg.z.abs_z() > 0.0,
          "the Sommerfeld closure needs z != 0");
  cfg.resolved = r.resolved();
  return cfg;
}

Field make_source(const ExperimentConfig &cfg, const SpectralParam &z)
{
  const AnalyticField bump{GaussianBump{cfg.source_width, cfg.source_center}, cfg.grid.dim()};
  switch (cfg.source)
  {
  case SourceKind::Zero:
    return Field(cfg.grid);
  case SourceKind::Gaussian:
    return sample_analytic(bump, cfg.grid);
  case SourceKind::Manufactured:
    return manufactured_pair(bump, z, cfg.geometry, cfg.grid).second;
  }
  return Field(cfg.grid);
}

std::vector<SpectralParam> sweep_parameters(const ExperimentConfig &cfg)
{
  const bool plus = cfg.half == HalfPlane::Plus;
  std::vector<SpectralParam> zs;
  for (double eta : cfg.eta_ladder)
    zs.emplace_back(cfg.z.lambda, plus ? eta : -eta, cfg.half);
  return zs;
}

std::vector<SpectralParam> scan_parameters(const ExperimentConfig &cfg)
{
  std::vector<double> lambdas;
  if (cfg.lambda_count == 1)
    lambdas.push_back(cfg.c);
  for (int i = 0; cfg.lambda_count > 1 && i < cfg.lambda_count; ++i)
    lambdas.push_back(cfg.c + (cfg.d - cfg.c) * i / (cfg.lambda_count - 1));
  std::vector<SpectralParam> zs;
  for (double eta : cfg.scan_etas)
  {
    for (double lambda : lambdas)
    {
      zs.emplace_back(lambda, eta, HalfPlane::Plus);
      zs.emplace_back(lambda, -eta, HalfPlane::Minus);
    }
  }
  return zs;
}

SweepResult run_sweep_eta(const ExperimentConfig &cfg, int threads)
{
  const std::vector<SpectralParam> zs = sweep_parameters(cfg);
  return solve_rows(cfg, zs, threads, true);
}

SweepResult run_scan_resolvent(const ExperimentConfig &cfg, int threads)
{
  const std::vector<SpectralParam> zs = scan_parameters(cfg);
  return solve_rows(cfg, zs, threads, false);
}

bool sweep_passes(const SweepResult &r, const Thresholds &t)
{
  if (r.solver_failed || r.rows.size() < 2)
    return false;
  std::vector<double> d;
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    d.push_back(r.rows[i].cauchy);
  if (std::all_of(d.begin(), d.end(), [](double v) { return v == 0.0; }))
    return true;
  if (!(d.front() > 0.0) || !(d.back() / d.front() <= t.cauchy_shrink))
    return false;
  const std::size_t tail = std::min<std::size_t>(static_cast<std::size_t>(t.monotone_tail), d.size());
  for (std::size_t i = d.size() - tail + 1; i < d.size(); ++i)
  {
    if (!(d[i] <= d[i - 1]))
      return false;
  }
  return true;
}

bool scan_passes(const SweepResult &r, const ExperimentConfig &cfg)
{
  if (r.solver_failed || r.rows.empty())
    return false;
  const Thresholds &t = cfg.thresholds;
  const std::array<double SweepRow::*, 3> cols{&SweepRow::resolvent_ratio,
                                               &SweepRow::radiation_ratio,
                                               &SweepRow::sobolev_ratio};
  for (auto col : cols)
  {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const SweepRow &row : r.rows)
    {
      lo = std::min(lo, row.*col);
      hi = std::max(hi, row.*col);
    }
    if (hi > 0.0 && !(hi <= t.ratio_band * lo))
      return false;
  }
  // Rows come as (eta, lambda, sign) with eta outermost.
  const std::size_t per_eta = r.rows.size() / cfg.scan_etas.size();
  if (cfg.scan_etas.size() >= 2)
  {
    const std::size_t last = (cfg.scan_etas.size() - 1) * per_eta;
    const std::size_t prev = last - per_eta;
    for (std::size_t j = 0; j < per_eta; ++j)
    {
      for (auto col : cols)
      {
        const double a = r.rows[prev + j].*col, b = r.rows[last + j].*col;
        if (a == 0.0 ? b != 0.0 : !(b <= t.tail_growth * a))
          return false;
      }
    }
  }
  return true;
}

std::string verdict_name(Verdict v)
{
  switch (v)
  {
  case Verdict::Pass:
    return "PASS";
  case Verdict::Fail:
    return "FAIL";
  case Verdict::Completed:
    return "COMPLETED";
  case Verdict::Unjudged:
    return "UNJUDGED";
  case Verdict::SolverFailure:
    return "SOLVER_FAILURE";
  }
  return "";
}

int exit_code(Verdict v)
{
  switch (v)
  {
  case Verdict::Fail:
    return 2;
  case Verdict::SolverFailure:
    return 3;
  default:
    return 0;
  }
}

ExperimentOutput run_experiment(const ExperimentConfig &cfg, int threads)
{
  ExperimentOutput out;
  const Grid &grid = cfg.grid;
  const SignCheck sign = sign_condition(cfg);

  switch (cfg.experiment)
  {
  case Experiment::CheckGeometry:
  {
    const std::vector<SurfaceSample> samples =
        sample_surface(cfg.geometry, cfg.check_radius, cfg.check_samples);
    out.results.columns = {"geometry", "samples", "pass", "min_product"};
    for (int j = 0; j < grid.dim(); ++j)
      out.results.columns.push_back("worst_x" + std::to_string(j + 1));
    if (samples.empty())
    {
      out.notes.push_back("separating surface does not meet the ball of radius check.radius");
      out.verdict = Verdict::Completed;
      return out;
    }
    const ConditionReport rep = check_sign_condition(cfg.geometry, samples);
    std::vector<std::string> row{cfg.geometry.describe(), std::to_string(samples.size()),
                                 rep.pass ? "true" : "false", format_double(rep.min_product)};
    for (int j = 0; j < grid.dim(); ++j)
      row.push_back(format_double(rep.worst_point[j]));
    out.results.add_row(std::move(row));
    out.diagnostics.add("sign_condition_min_product",
                        Params().add("radius", cfg.check_radius).str(), rep.min_product);
    out.verdict = rep.pass ? Verdict::Pass : Verdict::Fail;
    return out;
  }
  case Experiment::Solve:
  {
    add_sign_notes(sign, out);
    const std::vector<SpectralParam> zs{cfg.z};
    add_attenuation_note(cfg, zs, out);
    SweepResult r = solve_rows(cfg, zs, 1, false);
    out.results = sweep_table(r, false);
    out.solver_stats = stats_table(r, grid.points(), cfg.timings);
    if (r.solver_failed)
    {
      out.notes.push_back(r.error);
      out.verdict = Verdict::SolverFailure;
      return out;
    }
    if (cfg.source == SourceKind::Manufactured)
    {
      const AnalyticField bump{GaussianBump{cfg.source_width, cfg.source_center}, grid.dim()};
      const Field exact = sample_analytic(bump, grid);
      const double err = weighted_norm(*r.last_field - exact, 0.0) / weighted_norm(exact, 0.0);
      out.diagnostics.add("manufactured_relative_l2_error", Params().add("n", grid.points()).str(),
                          err);
    }
    out.diagnostics.add("norm_u", Params().add("t", -cfg.delta).str(), r.rows[0].norm_u);
    out.last_field = std::move(r.last_field);
    out.verdict = Verdict::Completed;
    return out;
  }
  case Experiment::SweepEta:
  case Experiment::ScanResolvent:
  {
    add_sign_notes(sign, out);
    const bool sweep = cfg.experiment == Experiment::SweepEta;
    const std::vector<SpectralParam> zs = sweep ? sweep_parameters(cfg) : scan_parameters(cfg);
    add_attenuation_note(cfg, zs, out);
    SweepResult r = solve_rows(cfg, zs, threads, sweep);
    out.results = sweep_table(r, sweep);
    out.solver_stats = stats_table(r, grid.points(), cfg.timings);
    if (r.solver_failed)
    {
      out.notes.push_back(r.error);
      out.last_field = std::move(r.last_field);
      out.verdict = Verdict::SolverFailure;
      return out;
    }
    bool pass = false;
    if (sweep)
    {
      pass = sweep_passes(r, cfg.thresholds);
      const double first = r.rows[1].cauchy, last = r.rows.back().cauchy;
      out.diagnostics.add("cauchy_shrink", Params().add("delta", cfg.delta).str(),
                          first > 0.0 ? last / first : 0.0);
      if (cfg.truncation_check)
      {
        try
        {
          out.diagnostics.add("truncation_sensitivity",
                              Params().add("factor", 1.5).add("eta", zs.back().eta).str(),
                              truncation_sensitivity(cfg, zs.back(), *r.last_field));
        }
        catch (const SolveError &e)
        {
          out.notes.push_back(std::string("truncation check failed: ") + e.what());
        }
      }
    }
    else
    {
      pass = scan_passes(r, cfg);
    }
    out.last_field = std::move(r.last_field);
    if (sign.available && !sign.report.pass)
      out.verdict = Verdict::Unjudged;
    else
      out.verdict = pass ? Verdict::Pass : Verdict::Fail;
    return out;
  }
  case Experiment::VerifyIdentity:
  {
    add_sign_notes(sign, out);
    std::optional<Field> u, f;
    SolveReport report;
    std::string error;
    const bool ok = examined_field(cfg, u, f, report, error);
    if (cfg.field == TestFieldKind::Solved)
    {
      SweepResult r;
      SweepRow row;
      row.z = cfg.z;
      row.report = report;
      r.rows.push_back(row);
      out.solver_stats = stats_table(r, grid.points(), cfg.timings);
    }
    if (!ok)
    {
      out.notes.push_back(error);
      out.verdict = Verdict::SolverFailure;
      return out;
    }
    out.results.columns = {"profile", "r",    "R",    "lhs1", "lhs2", "lhs3",          "lhs4",
                           "rhs1",    "rhs2", "rhs3", "rhs4", "interface_jump", "residual"};
    const GradField gu = discrete_gradient(*u);
    IdentityOptions opt;
    opt.alpha = cfg.alpha;
    bool pass = true;
    for (const WeightProfile &p : cfg.profiles)
    {
      const IdentityReport rep =
          identity_residual(gu, *f, cfg.z, cfg.geometry, p, cfg.identity_r, cfg.identity_R, opt);
      std::vector<std::string> row{weight_name(p), format_double(cfg.identity_r),
                                   format_double(cfg.identity_R)};
      for (double v : rep.lhs_terms)
        row.push_back(format_double(v));
      for (double v : rep.rhs_terms)
        row.push_back(format_double(v));
      row.push_back(format_double(rep.interface_jump));
      row.push_back(format_double(rep.residual));
      out.results.add_row(std::move(row));
      out.diagnostics.add("identity_residual",
                          Params()
                              .add("profile", weight_name(p))
                              .add("field", field_kind_name(cfg.field))
                              .add("n", grid.points())
                              .str(),
                          rep.residual);
      pass = pass && rep.residual <= cfg.thresholds.identity;
    }
    out.last_field = std::move(u);
    out.verdict = pass ? Verdict::Pass : Verdict::Fail;
    return out;
  }
  case Experiment::RadiationProbe:
  {
    add_sign_notes(sign, out);
    std::optional<Field> u, f;
    SolveReport report;
    std::string error;
    if (!examined_field(cfg, u, f, report, error))
    {
      out.notes.push_back(error);
      out.verdict = Verdict::SolverFailure;
      return out;
    }
    const double lambda = cfg.z.lambda;
    const auto energy =
        surface_decay_probe(*u, cfg.geometry, lambda, cfg.probe_radii, cfg.probe_alpha,
                            DecayMode::Energy);
    const auto plus = surface_decay_probe(*u, cfg.geometry, lambda, cfg.probe_radii,
                                          cfg.probe_alpha, DecayMode::RadiationPlus);
    const auto minus = surface_decay_probe(*u, cfg.geometry, lambda, cfg.probe_radii,
                                           cfg.probe_alpha, DecayMode::RadiationMinus);
    out.results.columns = {"R",       "energy",   "radiation_plus", "radiation_minus",
                           "rz_plus", "rz_minus", "radial_energy"};
    for (std::size_t i = 0; i < cfg.probe_radii.size(); ++i)
    {
      const double R = cfg.probe_radii[i];
      const double radial = R > cfg.probe_inner
                                ? radial_radiation_energy(*u, cfg.geometry, lambda,
                                                          cfg.probe_inner, R)
                                : 0.0;
      out.results.add_row({format_double(R), format_double(energy[i].value),
                           format_double(plus[i].value), format_double(minus[i].value),
                           format_double(rz_radiation_residual(*u, lambda, cfg.geometry, R, 1)),
                           format_double(rz_radiation_residual(*u, lambda, cfg.geometry, R, -1)),
                           format_double(radial)});
    }
    out.last_field = std::move(u);
    out.verdict = Verdict::Completed;
    return out;
  }
  }
  return out;
}

void write_outputs(const ExperimentOutput &out, const ExperimentConfig &cfg,
                   const std::string &dir)
{
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path base(dir);
  auto open = [&](const char *name)
  {
    std::ofstream os(base / name, std::ios::binary);
    if (!os)
      throw std::runtime_error("cannot write " + (base / name).string());
    return os;
  };
  {
    std::ofstream os = open("manifest.txt");
    os << "rwlab " << RWLAB_VERSION << '\n';
    os << "experiment = " << experiment_name(cfg.experiment) << '\n';
    os << "verdict = " << verdict_name(out.verdict) << '\n';
    for (const std::string &note : out.notes)
      os << "note = " << note << '\n';
    os << "[resolved config]\n";
    for (const auto &[key, value] : cfg.resolved.entries())
      os << key << " = " << value << '\n';
  }
  {
    std::ofstream os = open("results.csv");
    out.results.write_csv(os);
  }
  {
    std::ofstream os = open("diagnostics.csv");
    out.diagnostics.write_csv(os);
  }
  if (!out.solver_stats.columns.empty())
  {
    std::ofstream os = open("solver_stats.csv");
    out.solver_stats.write_csv(os);
  }
  if (out.last_field && cfg.write_field)
  {
    save_rwf1((base / "field.rwf1").string(), *out.last_field);
  }
}

}  // namespace rwlab
