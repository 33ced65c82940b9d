#ifndef RWLAB_SOLVER_HPP
#define RWLAB_SOLVER_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rwlab/discrete_operator.hpp"
#include "rwlab/field.hpp"

namespace rwlab
{

enum class SolveMethod
{
  Direct,
  Iterative
};

// Largest node count accepted by the direct method.
inline constexpr std::size_t kDirectNodeLimit = 200000;

struct SolveConfig
{
  SolveMethod method = SolveMethod::Direct;
  double tolerance = 1e-8;
  int max_iterations = 2000;
  BoundaryClosure closure = BoundaryClosure::SommerfeldFirstOrder;
  // Damping of the preconditioner shift z + i beta |z|.
  double shift = 0.5;
  int smoothing_steps = 2;
};

// Throws std::invalid_argument on out-of-range fields.
void validate(const SolveConfig &cfg);

// Direct if the grid is small enough for it, iterative otherwise.
SolveMethod preferred_method(const Grid &grid);

struct SolveReport
{
  int iterations = 0;
  double final_residual = 0.0;
  double wall_seconds = 0.0;
  bool converged = true;
};

class SolveError : public std::runtime_error
{
public:
  SolveError(const std::string &what, SolveReport report)
    : std::runtime_error(what), report_(report)
  {
  }
  const SolveReport &report() const { return report_; }

private:
  SolveReport report_;
};

DiscreteOperator assemble(const Grid &grid, const Geometry &g, const SpectralParam &z,
                          const SolveConfig &cfg);

struct SolveResult
{
  Field u;
  SolveReport report;
};

// Solves A u = b where b = mu f on interior rows and closure data on face rows (a Dirichlet
// trace if given). Throws SolveError when the tolerance is not met.
SolveResult apply_resolvent(const DiscreteOperator &op, const Field &f, const SolveConfig &cfg,
                            const Field *trace = nullptr);

// ||A u - b|| / ||b|| (0 when b = 0 and A u = 0).
double relative_residual(const DiscreteOperator &op, const Field &u, std::span<const cplx> b);

struct SweepEntry
{
  SpectralParam z;
  std::optional<Field> u;
  SolveReport report;
  std::string error;

  bool ok() const { return u.has_value(); }
};

// One independent solve per z, run on up to `threads` threads; results keep the order of zs
// and failures are recorded per entry.
std::vector<SweepEntry> resolvent_sweep(const Grid &grid, const Geometry &g,
                                        std::span<const SpectralParam> zs, const Field &f,
                                        const SolveConfig &cfg, int threads = 1);

// Columns z_re, z_im, n, iterations, final_residual, wall_seconds. Without timings the last
// column is written as nan so that repeated runs give identical bytes.
void write_solver_stats_csv(std::ostream &os, std::span<const SweepEntry> entries, int n,
                            bool timings);

}  // namespace rwlab

#endif  // RWLAB_SOLVER_HPP
