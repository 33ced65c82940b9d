#include "rwlab/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rwlab/bessel.hpp"

namespace rwlab
{

namespace
{

constexpr cplx I{0.0, 1.0};

Point diff(const Point &a, const Point &b)
{
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

double radial(const Point &d, int dim)
{
  double s = 0.0;
  for (int j = 0; j < dim; ++j)
    s += d[j] * d[j];
  return std::sqrt(s);
}

double singular_distance(double s)
{
  if (!(s > 0.0))
  {
    throw std::domain_error("analytic field evaluated at its singular point");
  }
  return s;
}

struct TransmissionLocal
{
  cplx k1, k2, R, T;
};

TransmissionLocal transmission_local(const TransmissionPlane1D &t)
{
  const TransmissionCoefficients c = transmission_coefficients(t.mu1, t.mu2, t.z);
  return {k_at(t.z, t.mu1), k_at(t.z, t.mu2), c.reflection, c.transmission};
}

}  // namespace

TransmissionCoefficients transmission_coefficients(double mu1, double mu2, const SpectralParam &z)
{
  if (!(mu1 > 0.0) || !(mu2 > 0.0))
  {
    throw std::invalid_argument("transmission_coefficients: mu must be positive");
  }
  const cplx k1 = k_at(z, mu1), k2 = k_at(z, mu2);
  return {(k1 - k2) / (k1 + k2), 2.0 * k1 / (k1 + k2)};
}

TransmissionCoefficients transmission_coefficients(double mu1, double mu2, double lambda)
{
  if (!(lambda > 0.0))
  {
    throw std::invalid_argument("transmission_coefficients: lambda must be positive");
  }
  return transmission_coefficients(mu1, mu2, SpectralParam(lambda, 0.0));
}

cplx eval_analytic(const AnalyticField &a, const Point &x)
{
  return std::visit(
      [&](const auto &k) -> cplx
      {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SphericalWave3D>)
        {
          const double s = singular_distance(radial(diff(x, k.center), a.dim));
          return std::exp(I * k.k * s) / (4.0 * std::numbers::pi * s);
        }
        else if constexpr (std::is_same_v<T, HankelWave2D>)
        {
          const double s = singular_distance(radial(diff(x, k.center), a.dim));
          return bessel::hankel1_0(k.k * s);
        }
        else if constexpr (std::is_same_v<T, PlaneWave>)
        {
          return std::exp(I * k.k * dot(k.direction, x));
        }
        else if constexpr (std::is_same_v<T, GaussianBump>)
        {
          const double s = radial(diff(x, k.center), a.dim);
          return std::exp(-s * s / (k.width * k.width));
        }
        else
        {
          const TransmissionLocal t = transmission_local(k);
          const double s = x[k.index] - k.offset;
          if (s < 0.0)
            return std::exp(I * t.k1 * s) + t.R * std::exp(-I * t.k1 * s);
          return t.T * std::exp(I * t.k2 * s);
        }
      },
      a.kind);
}

Vec3c eval_analytic_gradient(const AnalyticField &a, const Point &x)
{
  return std::visit(
      [&](const auto &k) -> Vec3c
      {
        using T = std::decay_t<decltype(k)>;
        Vec3c g{0.0, 0.0, 0.0};
        if constexpr (std::is_same_v<T, SphericalWave3D>)
        {
          const Point d = diff(x, k.center);
          const double s = singular_distance(radial(d, a.dim));
          const cplx u = std::exp(I * k.k * s) / (4.0 * std::numbers::pi * s);
          const cplx ur = (I * k.k - 1.0 / s) * u;
          for (int j = 0; j < a.dim; ++j)
            g[j] = ur * (d[j] / s);
        }
        else if constexpr (std::is_same_v<T, HankelWave2D>)
        {
          const Point d = diff(x, k.center);
          const double s = singular_distance(radial(d, a.dim));
          const cplx ur = -k.k * bessel::hankel1_1(k.k * s);
          for (int j = 0; j < a.dim; ++j)
            g[j] = ur * (d[j] / s);
        }
        else if constexpr (std::is_same_v<T, PlaneWave>)
        {
          const cplx u = std::exp(I * k.k * dot(k.direction, x));
          for (int j = 0; j < a.dim; ++j)
            g[j] = I * k.k * k.direction[j] * u;
        }
        else if constexpr (std::is_same_v<T, GaussianBump>)
        {
          const Point d = diff(x, k.center);
          const double s = radial(d, a.dim);
          const double w2 = k.width * k.width;
          const double u = std::exp(-s * s / w2);
          for (int j = 0; j < a.dim; ++j)
            g[j] = -2.0 * d[j] / w2 * u;
        }
        else
        {
          const TransmissionLocal t = transmission_local(k);
          const double s = x[k.index] - k.offset;
          if (s < 0.0)
            g[k.index] = I * t.k1 * (std::exp(I * t.k1 * s) - t.R * std::exp(-I * t.k1 * s));
          else
            g[k.index] = I * t.k2 * t.T * std::exp(I * t.k2 * s);
        }
        return g;
      },
      a.kind);
}

cplx eval_analytic_laplacian(const AnalyticField &a, const Point &x)
{
  return std::visit(
      [&](const auto &k) -> cplx
      {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SphericalWave3D>)
        {
          return -k.k * k.k * eval_analytic(a, x);
        }
        else if constexpr (std::is_same_v<T, HankelWave2D>)
        {
          return -k.k * k.k * eval_analytic(a, x);
        }
        else if constexpr (std::is_same_v<T, PlaneWave>)
        {
          return -k.k * k.k * eval_analytic(a, x);
        }
        else if constexpr (std::is_same_v<T, GaussianBump>)
        {
          const double s = radial(diff(x, k.center), a.dim);
          const double w2 = k.width * k.width;
          return (4.0 * s * s / (w2 * w2) - 2.0 * a.dim / w2) * std::exp(-s * s / w2);
        }
        else
        {
          const TransmissionLocal t = transmission_local(k);
          const cplx kk = x[k.index] - k.offset < 0.0 ? t.k1 : t.k2;
          return -kk * kk * eval_analytic(a, x);
        }
      },
      a.kind);
}

Field sample_analytic(const AnalyticField &a, const Grid &grid)
{
  if (a.dim != grid.dim())
  {
    throw std::invalid_argument("sample_analytic: dimension mismatch");
  }
  return Field::sample(grid, [&](const Point &x) { return eval_analytic(a, x); });
}

GradField sample_analytic_with_gradient(const AnalyticField &a, const Grid &grid)
{
  GradField out{sample_analytic(a, grid), {}};
  for (int d = 0; d < grid.dim(); ++d)
  {
    out.grad.emplace_back(grid);
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const Vec3c g = eval_analytic_gradient(a, grid.position(i));
    for (int d = 0; d < grid.dim(); ++d)
    {
      out.grad[d][i] = g[d];
    }
  }
  return out;
}

std::pair<Field, Field> manufactured_pair(const AnalyticField &u_star, const SpectralParam &z,
                                          const Geometry &g, const Grid &grid)
{
  if (u_star.dim != grid.dim() || g.dimension() != grid.dim())
  {
    throw std::invalid_argument("manufactured_pair: dimension mismatch");
  }
  const double L = grid.half_width();
  auto center_inside = [&](const Point &c)
  {
    for (int d = 0; d < grid.dim(); ++d)
      if (std::abs(c[d]) > L)
        return false;
    return true;
  };
  std::visit(
      [&](const auto &k)
      {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SphericalWave3D> || std::is_same_v<T, HankelWave2D>)
        {
          if (center_inside(k.center))
            throw std::domain_error("manufactured_pair: singular point inside the box");
        }
        else if constexpr (std::is_same_v<T, TransmissionPlane1D>)
        {
          throw std::domain_error(
              "manufactured_pair: transmission field is not twice differentiable");
        }
      },
      u_star.kind);

  Field u(grid), f(grid);
  const cplx zz = z.z();
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const Point x = grid.position(i);
    const cplx val = eval_analytic(u_star, x);
    const double mu = g.mu(x);
    u[i] = val;
    f[i] = -eval_analytic_laplacian(u_star, x) / mu - zz * val;
  }
  return {std::move(u), std::move(f)};
}

}  // namespace rwlab
