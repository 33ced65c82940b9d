#include "rwlab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace rwlab
{

SpectralParam::SpectralParam(double lambda_, double eta_, HalfPlane half_)
  : lambda(lambda_), eta(eta_), half(half_)
{
  if (!std::isfinite(lambda) || !std::isfinite(eta))
  {
    throw std::invalid_argument("SpectralParam: non-finite component");
  }
  if (lambda < 0.0)
  {
    throw std::invalid_argument("SpectralParam: lambda < 0 is not supported");
  }
}

double SpectralParam::abs_z() const
{
  return std::hypot(lambda, eta);
}

HalfPlane SpectralParam::side() const
{
  if (eta > 0.0)
  {
    return HalfPlane::Plus;
  }
  if (eta < 0.0)
  {
    return HalfPlane::Minus;
  }
  return half;
}

SpectralParam SpectralParam::conj() const
{
  return SpectralParam(lambda, -eta,
                       side() == HalfPlane::Plus ? HalfPlane::Minus : HalfPlane::Plus);
}

BranchCoefficients branch_coefficients(const SpectralParam &z)
{
  const double az = z.abs_z();
  if (az == 0.0)
  {
    throw std::invalid_argument("branch_coefficients: z = 0");
  }
  BranchCoefficients bc;
  const double s = az + z.lambda;
  bc.e_z = std::sqrt(2.0 * s);
  const double sign = z.side() == HalfPlane::Plus ? 1.0 : -1.0;
  bc.c_a = sign * std::sqrt(0.5 * s);
  bc.c_b = std::abs(z.eta) / bc.e_z;
  return bc;
}

cplx k_at(const SpectralParam &z, double mu)
{
  if (!(mu > 0.0))
  {
    throw std::invalid_argument("k_at: mu must be positive");
  }
  const BranchCoefficients bc = branch_coefficients(z);
  const double root = std::sqrt(mu);
  return {root * bc.c_a, root * bc.c_b};
}

double c_dimension(int N)
{
  if (N < 2)
  {
    throw std::invalid_argument("c_dimension: N must be >= 2");
  }
  return static_cast<double>((N - 1) * (N - 3)) / 4.0;
}

DimensionConstants dimension_constants(int N, double delta)
{
  const double cN = c_dimension(N);
  if (!(delta > 0.5 && delta <= 1.0))
  {
    throw std::invalid_argument("dimension_constants: delta must lie in (1/2, 1]");
  }
  DimensionConstants dc;
  dc.c_N = cN;
  dc.c_delta = (2.0 * delta - 1.0) / std::pow(2.0, 2.0 * delta - 1.0);
  return dc;
}

}  // namespace rwlab
