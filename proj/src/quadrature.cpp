#include "rwlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rwlab
{

GaussRule gauss_legendre(int m)
{
  if (m < 1)
  {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  GaussRule rule;
  rule.nodes.assign(m, 0.0);
  rule.weights.assign(m, 0.0);
  if (m == 1)
  {
    rule.weights[0] = 2.0;
    return rule;
  }
  const double pi = std::numbers::pi;
  for (int i = 0; i < (m + 1) / 2; ++i)
  {
    double x = std::cos(pi * (i + 0.75) / (m + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it)
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k)
      {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
      {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1)
  {
    rule.nodes[m / 2] = 0.0;
  }
  return rule;
}

int sphere_resolution(int N, double R, double spacing, int minimum)
{
  const double pi = std::numbers::pi;
  const double len = N == 2 ? 2.0 * pi * R : pi * R;
  return std::max(minimum, static_cast<int>(std::ceil(len / spacing)));
}

std::vector<QuadPoint> sphere_rule(int N, double R, int m_angle)
{
  const double pi = std::numbers::pi;
  std::vector<QuadPoint> pts;
  if (N == 2)
  {
    pts.reserve(m_angle);
    const double dphi = 2.0 * pi / m_angle;
    for (int j = 0; j < m_angle; ++j)
    {
      const double phi = (j + 0.5) * dphi;
      pts.push_back({Point{R * std::cos(phi), R * std::sin(phi), 0.0}, R * dphi});
    }
    return pts;
  }
  if (N != 3)
  {
    throw std::invalid_argument("sphere_rule: N must be 2 or 3");
  }
  const GaussRule gl = gauss_legendre(m_angle);
  const int m_phi = 2 * m_angle;
  const double dphi = 2.0 * pi / m_phi;
  pts.reserve(static_cast<std::size_t>(m_angle) * m_phi);
  for (int i = 0; i < m_angle; ++i)
  {
    const double c = gl.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double w = R * R * gl.weights[i] * dphi;
    for (int j = 0; j < m_phi; ++j)
    {
      const double phi = (j + 0.5) * dphi;
      pts.push_back({Point{R * s * std::cos(phi), R * s * std::sin(phi), R * c}, w});
    }
  }
  return pts;
}

void visit_shell_rule(int N, double r, double R, std::span<const double> breakpoints,
                      double spacing, const std::function<void(const QuadPoint &)> &visit)
{
  if (!(r >= 0.0 && r < R) || !(spacing > 0.0))
  {
    throw std::invalid_argument("shell_rule: need 0 <= r < R and spacing > 0");
  }
  std::vector<double> cuts{r};
  for (double b : breakpoints)
  {
    if (b > r && b < R)
    {
      cuts.push_back(b);
    }
  }
  cuts.push_back(R);
  std::sort(cuts.begin(), cuts.end());

  for (std::size_t s = 0; s + 1 < cuts.size(); ++s)
  {
    const double a = cuts[s], b = cuts[s + 1];
    const int m = std::max(4, static_cast<int>(std::ceil((b - a) / spacing)));
    const GaussRule gl = gauss_legendre(m);
    for (int i = 0; i < m; ++i)
    {
      const double rho = 0.5 * (b - a) * gl.nodes[i] + 0.5 * (a + b);
      const double wr = 0.5 * (b - a) * gl.weights[i];
      const int ma = sphere_resolution(N, rho, spacing, N == 2 ? 64 : 16);
      for (const QuadPoint &q : sphere_rule(N, rho, ma))
      {
        visit({q.x, q.weight * wr});
      }
    }
  }
}

std::vector<QuadPoint> shell_rule(int N, double r, double R, std::span<const double> breakpoints,
                                  double spacing)
{
  std::vector<QuadPoint> pts;
  visit_shell_rule(N, r, R, breakpoints, spacing, [&](const QuadPoint &q) { pts.push_back(q); });
  return pts;
}

}  // namespace rwlab
