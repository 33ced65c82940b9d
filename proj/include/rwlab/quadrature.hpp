#ifndef RWLAB_QUADRATURE_HPP
#define RWLAB_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "rwlab/geometry.hpp"

namespace rwlab
{

struct QuadPoint
{
  Point x{};
  double weight = 0.0;
};

struct GaussRule
{
  std::vector<double> nodes;
  std::vector<double> weights;
};

// m-point Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int m);

// Sphere S_R in R^N. N = 2: m_angle uniform angles. N = 3: Gauss-Legendre in cos(theta)
// with m_theta nodes times 2 m_theta uniform longitudes (offset by half a step so the rule is
// symmetric under x -> -x).
std::vector<QuadPoint> sphere_rule(int N, double R, int m_angle);

// Shell r < |x| < R as radial Gauss-Legendre panels (split at breakpoints) times sphere rules
// whose angular resolution tracks the requested point spacing.
std::vector<QuadPoint> shell_rule(int N, double r, double R, std::span<const double> breakpoints,
                                  double spacing);

// Same points as shell_rule, streamed to a callback in a fixed order.
void visit_shell_rule(int N, double r, double R, std::span<const double> breakpoints,
                      double spacing, const std::function<void(const QuadPoint &)> &visit);

// Angular resolution used by sphere_rule for a sphere of radius R at the given point spacing.
int sphere_resolution(int N, double R, double spacing, int minimum);

}  // namespace rwlab

#endif  // RWLAB_QUADRATURE_HPP
