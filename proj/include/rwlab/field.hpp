#ifndef RWLAB_FIELD_HPP
#define RWLAB_FIELD_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "rwlab/geometry.hpp"
#include "rwlab/grid.hpp"
#include "rwlab/spectral.hpp"

namespace rwlab
{

//
// Complex grid function, one value per node of the grid.
//
class Field
{
public:
  explicit Field(const Grid &grid);
  Field(const Grid &grid, std::vector<cplx> values);

  // Samples fn at every node.
  static Field sample(const Grid &grid, const std::function<cplx(const Point &)> &fn);

  const Grid &grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  cplx &operator[](std::size_t i) { return values_[i]; }
  const cplx &operator[](std::size_t i) const { return values_[i]; }

  std::span<cplx> values() { return values_; }
  std::span<const cplx> values() const { return values_; }

  bool all_finite() const;

  Field conj() const;
  Field &operator*=(cplx c);
  Field &operator+=(const Field &o);
  Field &operator-=(const Field &o);

private:
  Grid grid_;
  std::vector<cplx> values_;
};

Field operator-(Field a, const Field &b);
Field operator*(cplx c, Field a);

//
// A field together with its gradient at the nodes. The gradient either comes from
// central differences (discrete_gradient) or from an analytic expression.
//
struct GradField
{
  Field u;
  std::vector<Field> grad;

  const Grid &grid() const { return u.grid(); }
};

// Central differences in the interior, one-sided second-order differences on box faces.
GradField discrete_gradient(const Field &u);

// Multilinear interpolation of nodal values at x; x must lie inside the box.
cplx interpolate(const Grid &grid, std::span<const cplx> values, const Point &x);
double interpolate(const Grid &grid, std::span<const double> values, const Point &x);

// (int (1 + |x|)^{2t} |u|^2 dx)^{1/2}, trapezoid node weights.
double weighted_norm(const Field &u, double t);

// (int mu(x) |u|^2 dx)^{1/2}.
double x_norm(const Field &u, const Geometry &g);

// Weighted H^1 (order 1) or H^2 (order 2) norm with finite-difference derivatives.
double sobolev_norm(const Field &u, int order, double t);

// (int_{|x|<1} |x| |u|^2 + int_{|x|>1} (1 + |x|)^{2t} |u|^2)^{1/2}; N = 2 only.
double starred_norm(const Field &u, double t);

// Integral of the interpolated integrand over the sphere |x| = R.
cplx sphere_integral(const Field &integrand, double R);
double sphere_integral(const Grid &grid, std::span<const double> integrand, double R);

// Node sum over r < |x| < R with trapezoid weights.
cplx annulus_integral(const Field &integrand, double r, double R);
double annulus_integral(const Grid &grid, std::span<const double> integrand, double r, double R);

// Angular resolution used for S_R on this grid: at least 512 angles (N = 2) or 64 x 128
// (N = 3), refined so neighbouring points are no further apart than h / 2.
int sphere_points_for(const Grid &grid, double R);

// Pointwise |.| of a vector field given by components.
Field magnitude(std::span<const Field> components);

}  // namespace rwlab

#endif  // RWLAB_FIELD_HPP
