#ifndef RWLAB_GRID_HPP
#define RWLAB_GRID_HPP

#include <array>
#include <cstddef>

#include "rwlab/geometry.hpp"

namespace rwlab
{

using Index = std::array<int, 3>;

//
// Uniform vertex grid on the box [-L, L]^N with n nodes per axis, stored row-major with the
// first axis slowest.
//
class Grid
{
public:
  Grid(int N, double half_width, int points_per_axis);

  int dim() const { return dim_; }
  double half_width() const { return L_; }
  int points() const { return n_; }
  double spacing() const { return h_; }
  std::size_t size() const { return size_; }

  double coord(int i) const { return -L_ + i * h_; }
  std::size_t stride(int axis) const { return strides_[axis]; }

  std::size_t index(const Index &idx) const
  {
    return idx[0] * strides_[0] + idx[1] * strides_[1] + idx[2] * strides_[2];
  }
  Index unravel(std::size_t linear) const;
  Point position(const Index &idx) const;
  Point position(std::size_t linear) const { return position(unravel(linear)); }

  // Trapezoid node weight: h^N with a factor 1/2 per axis on which the node is a face node.
  double node_weight(const Index &idx) const;

  bool on_boundary(const Index &idx) const;

  bool operator==(const Grid &o) const
  {
    return dim_ == o.dim_ && n_ == o.n_ && L_ == o.L_;
  }
  bool operator!=(const Grid &o) const { return !(*this == o); }

  // Grid with (n + 1) / 2 nodes on the same box; requires odd n.
  Grid coarsened() const;
  bool can_coarsen() const { return n_ % 2 == 1 && n_ >= 5; }

private:
  int dim_;
  double L_;
  int n_;
  double h_;
  std::size_t size_;
  std::array<std::size_t, 3> strides_{};
};

}  // namespace rwlab

#endif  // RWLAB_GRID_HPP
