#include "rwlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rwlab/quadrature.hpp"
#include "rwlab/stencil.hpp"

namespace rwlab
{

namespace stencil
{

namespace
{

// Offsets (relative node positions) and weights for the first-derivative stencil at i.
struct D1Stencil
{
  int off[3];
  double w[3];
};

D1Stencil d1_stencil(int i, int n)
{
  if (i == 0)
    return {{0, 1, 2}, {-1.5, 2.0, -0.5}};
  if (i == n - 1)
    return {{0, -1, -2}, {1.5, -2.0, 0.5}};
  return {{-1, 0, 1}, {-0.5, 0.0, 0.5}};
}

}  // namespace

cplx d1(const Grid &g, std::span<const cplx> v, const Index &idx, int axis)
{
  const D1Stencil s = d1_stencil(idx[axis], g.points());
  const std::size_t base = g.index(idx);
  const std::ptrdiff_t st = static_cast<std::ptrdiff_t>(g.stride(axis));
  cplx acc = 0.0;
  for (int k = 0; k < 3; ++k)
  {
    if (s.w[k] != 0.0)
      acc += s.w[k] * v[base + s.off[k] * st];
  }
  return acc / g.spacing();
}

cplx d2(const Grid &g, std::span<const cplx> v, const Index &idx, int axis)
{
  const int i = idx[axis], n = g.points();
  const std::size_t base = g.index(idx);
  const std::ptrdiff_t st = static_cast<std::ptrdiff_t>(g.stride(axis));
  const double h2 = g.spacing() * g.spacing();
  auto at = [&](int off) { return v[base + off * st]; };
  if (i == 0)
    return (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) / h2;
  if (i == n - 1)
    return (2.0 * at(0) - 5.0 * at(-1) + 4.0 * at(-2) - at(-3)) / h2;
  return (at(1) - 2.0 * at(0) + at(-1)) / h2;
}

cplx d11(const Grid &g, std::span<const cplx> v, const Index &idx, int a, int b)
{
  const D1Stencil s = d1_stencil(idx[a], g.points());
  cplx acc = 0.0;
  for (int k = 0; k < 3; ++k)
  {
    if (s.w[k] == 0.0)
      continue;
    Index j = idx;
    j[a] += s.off[k];
    acc += s.w[k] * d1(g, v, j, b);
  }
  return acc / g.spacing();
}

}  // namespace stencil

Field::Field(const Grid &grid) : grid_(grid), values_(grid.size(), cplx(0.0, 0.0)) {}

Field::Field(const Grid &grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values))
{
  if (values_.size() != grid_.size())
  {
    throw std::invalid_argument("Field: value count does not match grid");
  }
}

Field Field::sample(const Grid &grid, const std::function<cplx(const Point &)> &fn)
{
  Field f(grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    f.values_[i] = fn(grid.position(i));
  }
  return f;
}

bool Field::all_finite() const
{
  return std::all_of(values_.begin(), values_.end(),
                     [](const cplx &c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

Field Field::conj() const
{
  Field out(*this);
  for (auto &c : out.values_)
    c = std::conj(c);
  return out;
}

Field &Field::operator*=(cplx c)
{
  for (auto &v : values_)
    v *= c;
  return *this;
}

Field &Field::operator+=(const Field &o)
{
  if (o.grid_ != grid_)
    throw std::invalid_argument("Field: grid mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += o.values_[i];
  return *this;
}

Field &Field::operator-=(const Field &o)
{
  if (o.grid_ != grid_)
    throw std::invalid_argument("Field: grid mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= o.values_[i];
  return *this;
}

Field operator-(Field a, const Field &b)
{
  a -= b;
  return a;
}

Field operator*(cplx c, Field a)
{
  a *= c;
  return a;
}

GradField discrete_gradient(const Field &u)
{
  const Grid &g = u.grid();
  GradField out{u, {}};
  for (int d = 0; d < g.dim(); ++d)
  {
    Field gd(g);
    for (std::size_t i = 0; i < g.size(); ++i)
    {
      gd[i] = stencil::d1(g, u.values(), g.unravel(i), d);
    }
    out.grad.push_back(std::move(gd));
  }
  return out;
}

namespace
{

struct Cell
{
  std::size_t base;
  double frac[3];
};

Cell locate(const Grid &g, const Point &x)
{
  const double L = g.half_width(), h = g.spacing();
  const double slack = 1e-9 * h;
  Cell c{0, {0.0, 0.0, 0.0}};
  Index idx{0, 0, 0};
  for (int d = 0; d < g.dim(); ++d)
  {
    if (!(x[d] >= -L - slack && x[d] <= L + slack))
    {
      throw std::out_of_range("interpolate: point outside the grid box");
    }
    const double s = (x[d] + L) / h;
    int i = static_cast<int>(std::floor(s));
    i = std::clamp(i, 0, g.points() - 2);
    idx[d] = i;
    c.frac[d] = std::clamp(s - i, 0.0, 1.0);
  }
  c.base = g.index(idx);
  return c;
}

template <class T>
T interpolate_impl(const Grid &g, std::span<const T> v, const Point &x)
{
  const Cell c = locate(g, x);
  const int N = g.dim();
  T acc{};
  for (int corner = 0; corner < (1 << N); ++corner)
  {
    double w = 1.0;
    std::size_t off = c.base;
    for (int d = 0; d < N; ++d)
    {
      if (corner & (1 << d))
      {
        w *= c.frac[d];
        off += g.stride(d);
      }
      else
      {
        w *= 1.0 - c.frac[d];
      }
    }
    acc += w * v[off];
  }
  return acc;
}

double radius_of(const Point &p)
{
  return norm(p);
}

template <class T>
T sphere_integral_impl(const Grid &g, std::span<const T> v, double R)
{
  if (!(R > 0.0) || !(R < g.half_width()))
  {
    throw std::invalid_argument("sphere_integral: need 0 < R < L");
  }
  T acc{};
  for (const QuadPoint &q : sphere_rule(g.dim(), R, sphere_points_for(g, R)))
  {
    acc += q.weight * interpolate_impl<T>(g, v, q.x);
  }
  return acc;
}

template <class T>
T annulus_integral_impl(const Grid &g, std::span<const T> v, double r, double R)
{
  if (!(r >= 0.0 && r < R && R < g.half_width() * (1.0 - 1e-9)))
  {
    throw std::invalid_argument("annulus_integral: need 0 <= r < R < L");
  }
  T acc{};
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Index idx = g.unravel(i);
    const double rho = radius_of(g.position(idx));
    if (rho > r && rho < R)
    {
      acc += g.node_weight(idx) * v[i];
    }
  }
  return acc;
}

}  // namespace

cplx interpolate(const Grid &grid, std::span<const cplx> values, const Point &x)
{
  return interpolate_impl<cplx>(grid, values, x);
}

double interpolate(const Grid &grid, std::span<const double> values, const Point &x)
{
  return interpolate_impl<double>(grid, values, x);
}

int sphere_points_for(const Grid &grid, double R)
{
  return sphere_resolution(grid.dim(), R, 0.5 * grid.spacing(), grid.dim() == 2 ? 512 : 64);
}

double weighted_norm(const Field &u, double t)
{
  const Grid &g = u.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Index idx = g.unravel(i);
    double w = g.node_weight(idx);
    if (t != 0.0)
    {
      w *= std::pow(1.0 + radius_of(g.position(idx)), 2.0 * t);
    }
    acc += w * std::norm(u[i]);
  }
  return std::sqrt(acc);
}

double x_norm(const Field &u, const Geometry &geo)
{
  const Grid &g = u.grid();
  if (geo.dimension() != g.dim())
  {
    throw std::invalid_argument("x_norm: geometry and grid dimensions differ");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Index idx = g.unravel(i);
    acc += g.node_weight(idx) * geo.mu(g.position(idx)) * std::norm(u[i]);
  }
  return std::sqrt(acc);
}

double sobolev_norm(const Field &u, int order, double t)
{
  if (order != 1 && order != 2)
  {
    throw std::invalid_argument("sobolev_norm: order must be 1 or 2");
  }
  const Grid &g = u.grid();
  if (g.points() < 5)
  {
    throw std::invalid_argument("sobolev_norm: grid too small for the difference stencils");
  }
  const int N = g.dim();
  const auto v = u.values();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Index idx = g.unravel(i);
    double s = std::norm(v[i]);
    for (int a = 0; a < N; ++a)
    {
      s += std::norm(stencil::d1(g, v, idx, a));
    }
    if (order == 2)
    {
      for (int a = 0; a < N; ++a)
      {
        s += std::norm(stencil::d2(g, v, idx, a));
        for (int b = a + 1; b < N; ++b)
        {
          s += std::norm(stencil::d11(g, v, idx, a, b));
        }
      }
    }
    double w = g.node_weight(idx);
    if (t != 0.0)
    {
      w *= std::pow(1.0 + radius_of(g.position(idx)), 2.0 * t);
    }
    acc += w * s;
  }
  return std::sqrt(acc);
}

double starred_norm(const Field &u, double t)
{
  const Grid &g = u.grid();
  if (g.dim() != 2)
  {
    throw std::invalid_argument("starred_norm: defined for N = 2 only");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Index idx = g.unravel(i);
    const double r = radius_of(g.position(idx));
    const double w = r < 1.0 ? r : std::pow(1.0 + r, 2.0 * t);
    acc += g.node_weight(idx) * w * std::norm(u[i]);
  }
  return std::sqrt(acc);
}

cplx sphere_integral(const Field &integrand, double R)
{
  return sphere_integral_impl<cplx>(integrand.grid(), integrand.values(), R);
}

double sphere_integral(const Grid &grid, std::span<const double> integrand, double R)
{
  return sphere_integral_impl<double>(grid, integrand, R);
}

cplx annulus_integral(const Field &integrand, double r, double R)
{
  return annulus_integral_impl<cplx>(integrand.grid(), integrand.values(), r, R);
}

double annulus_integral(const Grid &grid, std::span<const double> integrand, double r, double R)
{
  return annulus_integral_impl<double>(grid, integrand, r, R);
}

Field magnitude(std::span<const Field> components)
{
  if (components.empty())
  {
    throw std::invalid_argument("magnitude: no components");
  }
  Field out(components[0].grid());
  for (std::size_t i = 0; i < out.size(); ++i)
  {
    double s = 0.0;
    for (const Field &c : components)
      s += std::norm(c[i]);
    out[i] = std::sqrt(s);
  }
  return out;
}

}  // namespace rwlab
