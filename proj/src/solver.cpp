#include "rwlab/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "rwlab/direct.hpp"
#include "rwlab/field_io.hpp"
#include "rwlab/multigrid.hpp"
#include "rwlab/parallel.hpp"

namespace rwlab
{

void validate(const SolveConfig &cfg)
{
  if (!(cfg.tolerance > 0.0) || cfg.tolerance > 1e-2)
  {
    throw std::invalid_argument("solver tolerance must lie in (0, 1e-2]");
  }
  if (cfg.max_iterations < 1)
  {
    throw std::invalid_argument("solver max_iterations must be positive");
  }
  if (!(cfg.shift > 0.0) || !std::isfinite(cfg.shift))
  {
    throw std::invalid_argument("solver shift must be positive");
  }
  if (cfg.smoothing_steps < 1)
  {
    throw std::invalid_argument("solver smoothing_steps must be positive");
  }
}

SolveMethod preferred_method(const Grid &grid)
{
  return grid.size() <= kDirectNodeLimit ? SolveMethod::Direct : SolveMethod::Iterative;
}

DiscreteOperator assemble(const Grid &grid, const Geometry &g, const SpectralParam &z,
                          const SolveConfig &cfg)
{
  validate(cfg);
  if (cfg.method == SolveMethod::Direct && grid.size() > kDirectNodeLimit)
  {
    throw std::invalid_argument("direct method limited to 2e5 nodes; use the iterative method");
  }
  return DiscreteOperator(grid, g, z, cfg.closure);
}

namespace
{

using Clock = std::chrono::steady_clock;

cplx dotc(std::span<const cplx> a, std::span<const cplx> b)
{
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(std::span<const cplx> a)
{
  double s = 0.0;
  for (const cplx &v : a)
    s += std::norm(v);
  return std::sqrt(s);
}

// Right-preconditioned BiCGSTAB. x holds the result; returns iterations used.
int bicgstab(const DiscreteOperator &op, ShiftedMultigrid &mg, std::span<const cplx> b,
             std::vector<cplx> &x, double tol, int max_iterations, double &residual)
{
  const std::size_t n = b.size();
  const double bnorm = norm2(b);
  std::vector<cplx> r(b.begin(), b.end()), r0(r), p(n), v(n), y(n), t(n);
  std::fill(x.begin(), x.end(), cplx(0.0));
  cplx rho = 1.0, alpha = 1.0, omega = 1.0;

  auto true_residual = [&]
  {
    op.apply(x, t);
    for (std::size_t i = 0; i < n; ++i)
      r[i] = b[i] - t[i];
    return norm2(r) / bnorm;
  };

  for (int it = 1; it <= max_iterations; ++it)
  {
    const cplx rho_new = dotc(r0, r);
    if (std::abs(rho_new) == 0.0)
    {
      r0 = r;
      rho = alpha = omega = 1.0;
      std::fill(p.begin(), p.end(), cplx(0.0));
      std::fill(v.begin(), v.end(), cplx(0.0));
      continue;
    }
    const cplx beta = (rho_new / rho) * (alpha / omega);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = r[i] + beta * (p[i] - omega * v[i]);
    mg.apply(p, y);
    op.apply(y, v);
    const cplx denom = dotc(r0, v);
    if (std::abs(denom) == 0.0)
    {
      residual = true_residual();
      r0 = r;
      rho = alpha = omega = 1.0;
      std::fill(p.begin(), p.end(), cplx(0.0));
      std::fill(v.begin(), v.end(), cplx(0.0));
      continue;
    }
    alpha = rho_new / denom;
    for (std::size_t i = 0; i < n; ++i)
    {
      x[i] += alpha * y[i];
      r[i] -= alpha * v[i];
    }
    if (norm2(r) / bnorm <= tol)
    {
      residual = true_residual();
      if (residual <= tol)
        return it;
    }
    mg.apply(r, y);
    op.apply(y, t);
    const double tt = std::real(dotc(t, t));
    omega = tt > 0.0 ? dotc(t, r) / tt : cplx(0.0);
    for (std::size_t i = 0; i < n; ++i)
    {
      x[i] += omega * y[i];
      r[i] -= omega * t[i];
    }
    rho = rho_new;
    residual = norm2(r) / bnorm;
    if (residual <= tol)
    {
      residual = true_residual();
      if (residual <= tol)
        return it;
    }
    if (omega == cplx(0.0))
    {
      r0 = r;
      rho = alpha = omega = 1.0;
      std::fill(p.begin(), p.end(), cplx(0.0));
      std::fill(v.begin(), v.end(), cplx(0.0));
    }
  }
  residual = true_residual();
  return max_iterations;
}

}  // namespace

double relative_residual(const DiscreteOperator &op, const Field &u, std::span<const cplx> b)
{
  std::vector<cplx> au(u.size());
  op.apply(u.values(), au);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < au.size(); ++i)
  {
    num += std::norm(au[i] - b[i]);
    den += std::norm(b[i]);
  }
  if (den == 0.0)
  {
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::sqrt(num / den);
}

SolveResult apply_resolvent(const DiscreteOperator &op, const Field &f, const SolveConfig &cfg,
                            const Field *trace)
{
  validate(cfg);
  if (cfg.closure != op.closure())
  {
    throw std::invalid_argument("apply_resolvent: closure differs from the assembled operator");
  }
  if (cfg.method == SolveMethod::Direct && op.grid().size() > kDirectNodeLimit)
  {
    throw std::invalid_argument("direct method limited to 2e5 nodes; use the iterative method");
  }
  const auto start = Clock::now();
  std::vector<cplx> b = op.rhs(f, trace);
  SolveReport report;
  std::vector<cplx> x(b.size());
  if (norm2(b) == 0.0)
  {
    report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return {Field(op.grid(), std::move(x)), report};
  }
  if (cfg.method == SolveMethod::Direct)
  {
    try
    {
      DirectFactor lu(op.to_csr());
      lu.solve(b, x);
    }
    catch (const std::runtime_error &e)
    {
      report.converged = false;
      throw SolveError(e.what(), report);
    }
    report.iterations = 1;
    report.final_residual = relative_residual(op, Field(op.grid(), x), b);
  }
  else
  {
    ShiftedMultigrid mg(op, cfg.shift, cfg.smoothing_steps);
    report.iterations =
        bicgstab(op, mg, b, x, cfg.tolerance, cfg.max_iterations, report.final_residual);
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  bool finite = std::isfinite(report.final_residual);
  for (const cplx &v : x)
    finite = finite && std::isfinite(v.real()) && std::isfinite(v.imag());
  if (!finite || report.final_residual > cfg.tolerance)
  {
    report.converged = false;
    throw SolveError("solver did not reach tolerance (relative residual " +
                         format_double(report.final_residual) + ")",
                     report);
  }
  return {Field(op.grid(), std::move(x)), report};
}

std::vector<SweepEntry> resolvent_sweep(const Grid &grid, const Geometry &g,
                                        std::span<const SpectralParam> zs, const Field &f,
                                        const SolveConfig &cfg, int threads)
{
  if (zs.empty())
  {
    throw std::invalid_argument("resolvent_sweep: empty parameter list");
  }
  std::vector<SweepEntry> out(zs.size());
  parallel_for(zs.size(), threads,
               [&](std::size_t i)
               {
                 out[i].z = zs[i];
                 try
                 {
                   const DiscreteOperator op = assemble(grid, g, zs[i], cfg);
                   SolveResult res = apply_resolvent(op, f, cfg);
                   out[i].u = std::move(res.u);
                   out[i].report = res.report;
                 }
                 catch (const SolveError &e)
                 {
                   out[i].report = e.report();
                   out[i].error = e.what();
                 }
                 catch (const std::exception &e)
                 {
                   out[i].report.converged = false;
                   out[i].error = e.what();
                 }
               });
  return out;
}

void write_solver_stats_csv(std::ostream &os, std::span<const SweepEntry> entries, int n,
                            bool timings)
{
  os << "z_re,z_im,n,iterations,final_residual,wall_seconds\n";
  for (const SweepEntry &e : entries)
  {
    os << format_double(e.z.lambda) << ',' << format_double(e.z.eta) << ',' << n << ','
       << e.report.iterations << ',' << format_double(e.report.final_residual) << ','
       << (timings ? format_double(e.report.wall_seconds) : std::string("nan")) << '\n';
  }
}

}  // namespace rwlab
