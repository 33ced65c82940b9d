#ifndef RWLAB_MULTIGRID_HPP
#define RWLAB_MULTIGRID_HPP

#include <memory>
#include <span>
#include <vector>

#include "rwlab/direct.hpp"
#include "rwlab/discrete_operator.hpp"

namespace rwlab
{

// z + i beta |z| on the side of z's half-plane.
SpectralParam damped_shift(const SpectralParam &z, double beta);

// Full weighting from a fine grid to its coarsening (weights renormalized at the box faces).
void restrict_full_weighting(const Grid &fine, std::span<const cplx> in, std::span<cplx> out);
// Multilinear interpolation from a coarse grid to its refinement, added onto out.
void prolong_add(const Grid &coarse, const Grid &fine, std::span<const cplx> in,
                 std::span<cplx> out);

//
// One V-cycle of geometric multigrid for the operator at a damped shift, used as a
// preconditioner. Damped Jacobi smoothing, rediscretized coarse operators, sparse LU on the
// coarsest grid. Holds its own workspace, so one instance serves one solve at a time.
//
class ShiftedMultigrid
{
public:
  ShiftedMultigrid(const DiscreteOperator &op, double beta, int smoothing_steps = 2,
                   double damping = 0.7, std::size_t coarsest_nodes = 5000);

  // e ~ A_shift^{-1} r.
  void apply(std::span<const cplx> r, std::span<cplx> e);

  int levels() const { return static_cast<int>(levels_.size()); }

private:
  struct Level
  {
    DiscreteOperator op;
    std::vector<cplx> inv_diag;
    std::vector<cplx> b, x, res;
  };

  void cycle(std::size_t l, std::span<const cplx> b, std::span<cplx> x);
  void smooth(const Level &lv, std::span<const cplx> b, std::span<cplx> x,
              std::span<cplx> res) const;

  std::vector<Level> levels_;
  std::unique_ptr<DirectFactor> coarse_;
  int steps_;
  double omega_;
};

}  // namespace rwlab

#endif  // RWLAB_MULTIGRID_HPP
