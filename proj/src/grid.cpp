#include "rwlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rwlab
{

Grid::Grid(int N, double half_width, int points_per_axis)
  : dim_(N), L_(half_width), n_(points_per_axis)
{
  if (dim_ != 2 && dim_ != 3)
  {
    throw std::invalid_argument("Grid: dimension must be 2 or 3");
  }
  if (!(L_ > 0.0) || !std::isfinite(L_))
  {
    throw std::invalid_argument("Grid: half width must be positive");
  }
  if (n_ < 3)
  {
    throw std::invalid_argument("Grid: need at least 3 points per axis");
  }
  h_ = 2.0 * L_ / (n_ - 1);
  std::size_t s = 1;
  for (int d = 2; d >= 0; --d)
  {
    if (d >= dim_)
    {
      strides_[d] = 0;
      continue;
    }
    strides_[d] = s;
    s *= static_cast<std::size_t>(n_);
  }
  size_ = s;
}

Index Grid::unravel(std::size_t linear) const
{
  Index idx{0, 0, 0};
  for (int d = 0; d < dim_; ++d)
  {
    idx[d] = static_cast<int>(linear / strides_[d]);
    linear -= static_cast<std::size_t>(idx[d]) * strides_[d];
  }
  return idx;
}

Point Grid::position(const Index &idx) const
{
  Point p{0.0, 0.0, 0.0};
  for (int d = 0; d < dim_; ++d)
  {
    p[d] = coord(idx[d]);
  }
  return p;
}

double Grid::node_weight(const Index &idx) const
{
  double w = 1.0;
  for (int d = 0; d < dim_; ++d)
  {
    w *= (idx[d] == 0 || idx[d] == n_ - 1) ? 0.5 * h_ : h_;
  }
  return w;
}

bool Grid::on_boundary(const Index &idx) const
{
  for (int d = 0; d < dim_; ++d)
  {
    if (idx[d] == 0 || idx[d] == n_ - 1)
    {
      return true;
    }
  }
  return false;
}

Grid Grid::coarsened() const
{
  if (n_ % 2 == 0)
  {
    throw std::logic_error("Grid: cannot coarsen a grid with an even point count");
  }
  return Grid(dim_, L_, (n_ + 1) / 2);
}

}  // namespace rwlab
