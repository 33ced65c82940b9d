#include "rwlab/multigrid.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rwlab
{

SpectralParam damped_shift(const SpectralParam &z, double beta)
{
  const double s = z.side() == HalfPlane::Plus ? 1.0 : -1.0;
  return SpectralParam(z.lambda, z.eta + s * beta * z.abs_z(), z.side());
}

namespace
{

struct AxisTaps
{
  int count = 0;
  std::array<int, 3> index{};
  std::array<double, 3> weight{};
};

// Full-weighting taps of fine nodes around coarse node ic on one axis of n fine points.
AxisTaps restriction_taps(int ic, int n)
{
  AxisTaps t;
  const int c = 2 * ic;
  double total = 0.0;
  const std::array<std::pair<int, double>, 3> base{{{c - 1, 0.25}, {c, 0.5}, {c + 1, 0.25}}};
  for (const auto &[j, w] : base)
  {
    if (j >= 0 && j < n)
    {
      t.index[t.count] = j;
      t.weight[t.count] = w;
      ++t.count;
      total += w;
    }
  }
  for (int k = 0; k < t.count; ++k)
    t.weight[k] /= total;
  return t;
}

AxisTaps prolongation_taps(int jf)
{
  AxisTaps t;
  if (jf % 2 == 0)
  {
    t.count = 1;
    t.index[0] = jf / 2;
    t.weight[0] = 1.0;
  }
  else
  {
    t.count = 2;
    t.index = {jf / 2, jf / 2 + 1, 0};
    t.weight = {0.5, 0.5, 0.0};
  }
  return t;
}

}  // namespace

void restrict_full_weighting(const Grid &fine, std::span<const cplx> in, std::span<cplx> out)
{
  const Grid coarse = fine.coarsened();
  if (in.size() != fine.size() || out.size() != coarse.size())
  {
    throw std::invalid_argument("restrict_full_weighting: size mismatch");
  }
  const int N = fine.dim();
  const int nc = coarse.points(), nf = fine.points();
  std::vector<AxisTaps> taps(nc);
  for (int i = 0; i < nc; ++i)
    taps[i] = restriction_taps(i, nf);
  for (std::size_t ci = 0; ci < coarse.size(); ++ci)
  {
    const Index I = coarse.unravel(ci);
    const AxisTaps &a = taps[I[0]];
    const AxisTaps &b = taps[I[1]];
    cplx acc = 0.0;
    for (int p = 0; p < a.count; ++p)
    {
      for (int q = 0; q < b.count; ++q)
      {
        const double w = a.weight[p] * b.weight[q];
        const std::size_t base = a.index[p] * fine.stride(0) + b.index[q] * fine.stride(1);
        if (N == 2)
        {
          acc += w * in[base];
          continue;
        }
        const AxisTaps &c = taps[I[2]];
        for (int r = 0; r < c.count; ++r)
          acc += (w * c.weight[r]) * in[base + c.index[r]];
      }
    }
    out[ci] = acc;
  }
}

void prolong_add(const Grid &coarse, const Grid &fine, std::span<const cplx> in,
                 std::span<cplx> out)
{
  if (fine.coarsened() != coarse || in.size() != coarse.size() || out.size() != fine.size())
  {
    throw std::invalid_argument("prolong_add: grid mismatch");
  }
  const int N = fine.dim();
  const int nf = fine.points();
  std::vector<AxisTaps> taps(nf);
  for (int j = 0; j < nf; ++j)
    taps[j] = prolongation_taps(j);
  for (std::size_t fi = 0; fi < fine.size(); ++fi)
  {
    const Index J = fine.unravel(fi);
    const AxisTaps &a = taps[J[0]];
    const AxisTaps &b = taps[J[1]];
    cplx acc = 0.0;
    for (int p = 0; p < a.count; ++p)
    {
      for (int q = 0; q < b.count; ++q)
      {
        const double w = a.weight[p] * b.weight[q];
        const std::size_t base = a.index[p] * coarse.stride(0) + b.index[q] * coarse.stride(1);
        if (N == 2)
        {
          acc += w * in[base];
          continue;
        }
        const AxisTaps &c = taps[J[2]];
        for (int r = 0; r < c.count; ++r)
          acc += (w * c.weight[r]) * in[base + c.index[r]];
      }
    }
    out[fi] += acc;
  }
}

ShiftedMultigrid::ShiftedMultigrid(const DiscreteOperator &op, double beta, int smoothing_steps,
                                   double damping, std::size_t coarsest_nodes)
  : steps_(smoothing_steps), omega_(damping)
{
  if (!(beta >= 0.0) || smoothing_steps < 0 || !(damping > 0.0))
  {
    throw std::invalid_argument("ShiftedMultigrid: bad parameters");
  }
  const SpectralParam shifted = damped_shift(op.z(), beta);
  Grid g = op.grid();
  while (true)
  {
    Level lv{DiscreteOperator(g, op.geometry(), shifted, op.closure()), {}, {}, {}, {}};
    const bool last = !g.can_coarsen() || g.size() <= coarsest_nodes;
    if (!last)
    {
      lv.inv_diag.resize(g.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        lv.inv_diag[i] = 1.0 / lv.op.diagonal(i);
      lv.res.resize(g.size());
      if (!levels_.empty())
      {
        lv.b.resize(g.size());
        lv.x.resize(g.size());
      }
    }
    else if (!levels_.empty())
    {
      lv.b.resize(g.size());
      lv.x.resize(g.size());
    }
    levels_.push_back(std::move(lv));
    if (last)
      break;
    g = g.coarsened();
  }
  coarse_ = std::make_unique<DirectFactor>(levels_.back().op.to_csr());
}

void ShiftedMultigrid::apply(std::span<const cplx> r, std::span<cplx> e)
{
  cycle(0, r, e);
}

void ShiftedMultigrid::smooth(const Level &lv, std::span<const cplx> b, std::span<cplx> x,
                              std::span<cplx> res) const
{
  for (int s = 0; s < steps_; ++s)
  {
    lv.op.apply(x, res);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] += omega_ * lv.inv_diag[i] * (b[i] - res[i]);
  }
}

void ShiftedMultigrid::cycle(std::size_t l, std::span<const cplx> b, std::span<cplx> x)
{
  if (l + 1 == levels_.size())
  {
    coarse_->solve(b, x);
    return;
  }
  Level &lv = levels_[l];
  Level &next = levels_[l + 1];
  std::fill(x.begin(), x.end(), cplx(0.0));
  smooth(lv, b, x, lv.res);
  lv.op.apply(x, lv.res);
  for (std::size_t i = 0; i < x.size(); ++i)
    lv.res[i] = b[i] - lv.res[i];
  restrict_full_weighting(lv.op.grid(), lv.res, next.b);
  cycle(l + 1, next.b, next.x);
  prolong_add(next.op.grid(), lv.op.grid(), next.x, x);
  smooth(lv, b, x, lv.res);
}

}  // namespace rwlab
