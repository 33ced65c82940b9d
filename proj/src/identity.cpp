#include <cmath>
#include <stdexcept>

#include "rwlab/diagnostics.hpp"
#include "rwlab/quadrature.hpp"

namespace rwlab
{

namespace
{

constexpr cplx I{0.0, 1.0};

struct Sampled
{
  cplx u;
  std::array<cplx, 3> grad{};
  cplx f;
};

struct Context
{
  const GradField &u;
  const Field &f;
  SpectralParam z;
  const Geometry &g;
  const WeightProfile &profile;
  AlphaChoice alpha;
  int N;
  double cN;

  Sampled at(const Point &x) const
  {
    const Grid &grid = u.grid();
    Sampled s;
    s.u = interpolate(grid, u.u.values(), x);
    for (int j = 0; j < N; ++j)
      s.grad[j] = interpolate(grid, u.grad[j].values(), x);
    s.f = interpolate(grid, f.values(), x);
    return s;
  }

  double alpha_of(double mu) const
  {
    return alpha == AlphaChoice::Unit ? 1.0 : 1.0 / std::sqrt(mu);
  }
};

double radius(const Point &x, int dim)
{
  double s = 0.0;
  for (int d = 0; d < dim; ++d)
    s += x[d] * x[d];
  return std::sqrt(s);
}

struct PointTerms
{
  double d2 = 0.0;   // |D u|^2
  double dr2 = 0.0;  // |D_r u|^2
  cplx dr = 0.0;     // D_r u
};

PointTerms radiation_at(const Context &c, const Sampled &s, const Point &x, double r, cplx k)
{
  PointTerms t;
  const cplx coef = (c.N - 1) / (2.0 * r) - I * k;
  for (int j = 0; j < c.N; ++j)
  {
    const double xt = x[j] / r;
    const cplx d = s.grad[j] + coef * xt * s.u;
    t.d2 += std::norm(d);
    t.dr += d * xt;
  }
  t.dr2 = std::norm(t.dr);
  return t;
}

double sphere_term(const Context &c, double R)
{
  const Grid &grid = c.u.grid();
  double acc = 0.0;
  for (const QuadPoint &q : sphere_rule(c.N, R, sphere_points_for(grid, R)))
  {
    const double mu = c.g.mu(q.x);
    const cplx k = k_at(c.z, mu);
    const double phi = c.alpha_of(mu) * eval_weight(c.profile, R).xi;
    const Sampled s = c.at(q.x);
    const PointTerms t = radiation_at(c, s, q.x, R, k);
    acc += q.weight * 0.5 * phi * (2.0 * t.dr2 - t.d2 - c.cN / (R * R) * std::norm(s.u));
  }
  return acc;
}

}  // namespace

double IdentityReport::lhs_sum() const
{
  return lhs_terms[0] + lhs_terms[1] + lhs_terms[2] + lhs_terms[3];
}

double IdentityReport::rhs_sum() const
{
  return rhs_terms[0] + rhs_terms[1] + rhs_terms[2] + rhs_terms[3] + interface_jump;
}

IdentityReport identity_residual(const Field &u, const Field &f, const SpectralParam &z,
                                 const Geometry &g, const WeightProfile &profile, double r,
                                 double R, const IdentityOptions &opt)
{
  return identity_residual(discrete_gradient(u), f, z, g, profile, r, R, opt);
}

IdentityReport identity_residual(const GradField &u, const Field &f, const SpectralParam &z,
                                 const Geometry &g, const WeightProfile &profile, double r,
                                 double R, const IdentityOptions &opt)
{
  const Grid &grid = u.grid();
  if (grid != f.grid() || grid.dim() != g.dimension())
  {
    throw std::invalid_argument("identity_residual: grid or dimension mismatch");
  }
  if (!(r > grid.spacing()) || !(r < R) || !(R < grid.half_width()))
  {
    throw std::invalid_argument("identity_residual: need h < r < R < L");
  }
  if (!(opt.spacing_factor > 0.0))
  {
    throw std::invalid_argument("identity_residual: spacing factor must be positive");
  }
  validate_weight(profile);
  const int N = grid.dim();
  const Context c{u, f, z, g, profile, opt.alpha, N, c_dimension(N)};
  IdentityReport rep;

  // Volume terms over the shell.
  const std::vector<double> breaks = weight_breakpoints(profile);
  double l1 = 0.0, l3 = 0.0, l4 = 0.0, r1 = 0.0;
  visit_shell_rule(N, r, R, breaks, opt.spacing_factor * grid.spacing(),
                   [&](const QuadPoint &q)
                   {
                     const double rho = radius(q.x, N);
                     const double mu = g.mu(q.x);
                     const cplx k = k_at(z, mu);
                     const double a = c.alpha_of(mu);
                     const WeightValue wv = eval_weight(profile, rho);
                     const double phi = a * wv.xi, dphi = a * wv.xi_prime;
                     const Sampled s = c.at(q.x);
                     const PointTerms t = radiation_at(c, s, q.x, rho, k);
                     const double b = k.imag();
                     l1 += q.weight * (b * phi + 0.5 * dphi) * t.d2;
                     l3 += q.weight * (phi / rho - dphi) * (t.d2 - t.dr2);
                     l4 += q.weight * c.cN / (rho * rho) * (phi / rho - 0.5 * dphi + b * phi) *
                           std::norm(s.u);
                     r1 += q.weight * std::real(phi * mu * s.f * std::conj(t.dr));
                   });

  // Interface S inside the shell, both sides.
  const int count = opt.surface_samples > 0 ? opt.surface_samples : (N == 2 ? 4096 : 200000);
  double l2 = 0.0, r2 = 0.0, jump = 0.0;
  const MediumPair &m = g.media();
  for (const SurfaceSample &p : sample_surface_shell(g, r, R, count))
  {
    const double rho = radius(p.point, N);
    if (!(rho > r) || !(rho < R))
      continue;
    const Sampled s = c.at(p.point);
    cplx dn = 0.0, dr = 0.0;
    double grad2 = 0.0, xn = 0.0;
    for (int j = 0; j < N; ++j)
    {
      const double xt = p.point[j] / rho;
      dn += s.grad[j] * p.normal1[j];
      dr += s.grad[j] * xt;
      grad2 += std::norm(s.grad[j]);
      xn += xt * p.normal1[j];
    }
    const double xi = eval_weight(profile, rho).xi;
    const double u2 = std::norm(s.u);
    const std::array<double, 2> mus{m.mu1, m.mu2};
    for (int side = 0; side < 2; ++side)
    {
      const double sgn = side == 0 ? 1.0 : -1.0;
      const cplx k = k_at(z, mus[side]);
      const double phi = c.alpha_of(mus[side]) * xi;
      l2 += p.area_weight * phi * std::imag(std::conj(k) * sgn * dn * std::conj(s.u));
      r2 += p.area_weight * 0.5 * phi *
            ((N - 1) * k.imag() / rho + std::norm(k)) * sgn * xn * u2;
    }
    const double gN = (N - 1) / (2.0 * rho);
    const double K = std::real(std::conj(dr) * dn) - 0.5 * xn * grad2 +
                     gN * std::real(std::conj(s.u) * dn) +
                     0.5 * (gN * gN - c.cN / (rho * rho)) * xn * u2;
    jump += p.area_weight * (c.alpha_of(m.mu1) - c.alpha_of(m.mu2)) * xi * K;
  }

  rep.lhs_terms = {l1, l2, l3, l4};
  rep.rhs_terms = {r1, r2, sphere_term(c, R), -sphere_term(c, r)};
  rep.interface_jump = jump;
  const double a = rep.lhs_sum(), b = rep.rhs_sum();
  rep.residual = std::abs(a - b) / (std::abs(a) + std::abs(b) + 1e-300);
  return rep;
}

}  // namespace rwlab
