#include "rwlab/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "rwlab/stencil.hpp"

namespace rwlab
{

namespace
{

constexpr cplx I{0.0, 1.0};

double radius(const Point &x, int dim)
{
  double s = 0.0;
  for (int d = 0; d < dim; ++d)
    s += x[d] * x[d];
  return std::sqrt(s);
}

void check_dims(const Grid &grid, const Geometry &g)
{
  if (grid.dim() != g.dimension())
  {
    throw std::invalid_argument("diagnostics: geometry and grid dimensions differ");
  }
}

void check_radii(const Grid &grid, std::span<const double> radii)
{
  for (double R : radii)
  {
    if (!(R > 0.0) || !(R < grid.half_width()))
    {
      throw std::invalid_argument("diagnostics: radii must lie in (0, L)");
    }
  }
}

}  // namespace

RadiationVariant RadiationVariant::signed_k(const SpectralParam &z)
{
  RadiationVariant v;
  v.kind = Kind::SignedK;
  v.z = z;
  v.lambda = z.lambda;
  return v;
}

RadiationVariant RadiationVariant::plus_limit(double lambda)
{
  if (!(lambda > 0.0))
  {
    throw std::invalid_argument("RadiationVariant: lambda must be positive");
  }
  RadiationVariant v;
  v.kind = Kind::PlusLimit;
  v.z = SpectralParam(lambda, 0.0, HalfPlane::Plus);
  v.lambda = lambda;
  return v;
}

RadiationVariant RadiationVariant::minus_limit(double lambda)
{
  if (!(lambda > 0.0))
  {
    throw std::invalid_argument("RadiationVariant: lambda must be positive");
  }
  RadiationVariant v;
  v.kind = Kind::MinusLimit;
  v.z = SpectralParam(lambda, 0.0, HalfPlane::Minus);
  v.lambda = lambda;
  return v;
}

cplx RadiationVariant::k(double mu) const
{
  switch (kind)
  {
  case Kind::SignedK:
    return k_at(z, mu);
  case Kind::PlusLimit:
    return std::sqrt(lambda * mu);
  case Kind::MinusLimit:
    return -std::sqrt(lambda * mu);
  }
  return 0.0;
}

RadiationField radiation_term(const Field &u, const Geometry &g, const RadiationVariant &v)
{
  return radiation_term(discrete_gradient(u), g, v);
}

RadiationField radiation_term(const GradField &u, const Geometry &g, const RadiationVariant &v)
{
  const Grid &grid = u.grid();
  check_dims(grid, g);
  const int N = grid.dim();
  const double h = grid.spacing();
  RadiationField out{{}, Field(grid), std::vector<std::uint8_t>(grid.size(), 0), v};
  for (int j = 0; j < N; ++j)
    out.components.emplace_back(grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const Point x = grid.position(i);
    const double r = radius(x, N);
    if (r <= h)
    {
      out.mask[i] = 1;
      continue;
    }
    const cplx k = v.k(g.mu(x));
    const cplx c = (N - 1) / (2.0 * r) - I * k;
    cplx radial = 0.0;
    for (int j = 0; j < N; ++j)
    {
      const double xt = x[j] / r;
      const cplx d = u.grad[j][i] + c * xt * u.u[i];
      out.components[j][i] = d;
      radial += d * xt;
    }
    out.radial[i] = radial;
  }
  return out;
}

double rz_radiation_residual(const Field &u, double lambda, const Geometry &g, double R, int sign)
{
  const Grid &grid = u.grid();
  check_dims(grid, g);
  if (sign != 1 && sign != -1)
  {
    throw std::invalid_argument("rz_radiation_residual: sign must be +1 or -1");
  }
  if (!(lambda > 0.0))
  {
    throw std::invalid_argument("rz_radiation_residual: lambda must be positive");
  }
  const GradField gu = discrete_gradient(u);
  const int N = grid.dim();
  std::vector<double> integrand(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const Point x = grid.position(i);
    const double r = radius(x, N);
    const double k = std::sqrt(lambda * g.mu(x));
    double s = 0.0;
    for (int j = 0; j < N; ++j)
    {
      const double xt = r > 0.0 ? x[j] / r : 0.0;
      s += std::norm(gu.grad[j][i] - static_cast<double>(sign) * I * k * xt * u[i]);
    }
    integrand[i] = s;
  }
  return annulus_integral(grid, integrand, 0.0, R) / R;
}

namespace
{

std::vector<double> decay_integrand(const GradField &u, const Geometry &g, double lambda,
                                    DecayMode mode)
{
  const Grid &grid = u.grid();
  const int N = grid.dim();
  std::vector<double> out(grid.size(), 0.0);
  if (mode == DecayMode::Energy)
  {
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
      const Point x = grid.position(i);
      const double r = radius(x, N);
      cplx dr = 0.0;
      if (r > 0.0)
      {
        for (int j = 0; j < N; ++j)
          dr += u.grad[j][i] * (x[j] / r);
      }
      out[i] = std::norm(dr) + std::norm(u.u[i]);
    }
    return out;
  }
  const RadiationVariant v = mode == DecayMode::RadiationPlus
                                 ? RadiationVariant::plus_limit(lambda)
                                 : RadiationVariant::minus_limit(lambda);
  const RadiationField d = radiation_term(u, g, v);
  for (std::size_t i = 0; i < grid.size(); ++i)
    out[i] = std::norm(d.radial[i]);
  return out;
}

}  // namespace

std::vector<RadiusValue> surface_decay_probe(const Field &u, const Geometry &g, double lambda,
                                             std::span<const double> radii, double alpha,
                                             DecayMode mode)
{
  return surface_decay_probe(discrete_gradient(u), g, lambda, radii, alpha, mode);
}

std::vector<RadiusValue> surface_decay_probe(const GradField &u, const Geometry &g,
                                             double lambda, std::span<const double> radii,
                                             double alpha, DecayMode mode)
{
  const Grid &grid = u.grid();
  check_dims(grid, g);
  check_radii(grid, radii);
  if (!(alpha >= 0.0))
  {
    throw std::invalid_argument("surface_decay_probe: alpha must be >= 0");
  }
  const std::vector<double> integrand = decay_integrand(u, g, lambda, mode);
  std::vector<RadiusValue> out;
  for (double R : radii)
  {
    out.push_back({R, std::pow(R, alpha) * sphere_integral(grid, integrand, R)});
  }
  return out;
}

double radial_radiation_energy(const Field &u, const Geometry &g, double lambda, double r,
                               double R)
{
  const RadiationField d = radiation_term(u, g, RadiationVariant::plus_limit(lambda));
  const Grid &grid = u.grid();
  std::vector<double> integrand(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    if (d.mask[i])
      continue;
    integrand[i] = std::norm(d.radial[i]) / radius(grid.position(i), grid.dim());
  }
  return annulus_integral(grid, integrand, r, R);
}

std::vector<RadiusValue> flux_conservation(const Field &u, std::span<const double> radii)
{
  return flux_conservation(discrete_gradient(u), radii);
}

std::vector<RadiusValue> flux_conservation(const GradField &u, std::span<const double> radii)
{
  const Grid &grid = u.grid();
  check_radii(grid, radii);
  const int N = grid.dim();
  std::vector<double> integrand(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const Point x = grid.position(i);
    const double r = radius(x, N);
    if (r == 0.0)
      continue;
    cplx dr = 0.0;
    for (int j = 0; j < N; ++j)
      dr += u.grad[j][i] * (x[j] / r);
    integrand[i] = std::imag(dr * std::conj(u.u[i]));
  }
  std::vector<RadiusValue> out;
  for (double R : radii)
    out.push_back({R, sphere_integral(grid, integrand, R)});
  return out;
}

double radiation_norm(const Field &u, const Geometry &g, const RadiationVariant &v, double t)
{
  const Grid &grid = u.grid();
  check_dims(grid, g);
  const int N = grid.dim();
  const double h = grid.spacing();
  const auto values = u.values();
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const Index idx = grid.unravel(i);
    const Point x = grid.position(idx);
    const double r = radius(x, N);
    if (r <= h)
      continue;
    const cplx c = (N - 1) / (2.0 * r) - I * v.k(g.mu(x));
    double s = 0.0;
    for (int j = 0; j < N; ++j)
      s += std::norm(stencil::d1(grid, values, idx, j) + c * (x[j] / r) * values[i]);
    double w = N == 2 && r < 1.0 ? r : std::pow(1.0 + r, 2.0 * t);
    acc += grid.node_weight(idx) * w * s;
  }
  return std::sqrt(acc);
}

double radiation_estimate_ratio(const Field &u, const Field &f, const Geometry &g,
                                const RadiationVariant &v, double delta)
{
  if (!(delta > 0.5 && delta <= 1.0))
  {
    throw std::invalid_argument("radiation_estimate_ratio: need 1/2 < delta <= 1");
  }
  if (u.grid() != f.grid())
  {
    throw std::invalid_argument("radiation_estimate_ratio: grid mismatch");
  }
  const double num = radiation_norm(u, g, v, delta - 1.0);
  double den = weighted_norm(f, delta);
  if (!(den > 0.0))
  {
    throw std::domain_error("radiation_estimate_ratio: f vanishes");
  }
  if (u.grid().dim() == 2)
  {
    den += weighted_norm(u, -delta);
  }
  return num / den;
}

}  // namespace rwlab
