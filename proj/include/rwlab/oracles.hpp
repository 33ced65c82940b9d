#ifndef RWLAB_ORACLES_HPP
#define RWLAB_ORACLES_HPP

#include <array>
#include <utility>
#include <variant>

#include "rwlab/field.hpp"
#include "rwlab/geometry.hpp"
#include "rwlab/grid.hpp"
#include "rwlab/spectral.hpp"

namespace rwlab
{

// e^{ik|x-c|} / (4 pi |x-c|).
struct SphericalWave3D
{
  cplx k{1.0, 0.0};
  Point center{};
};

// H_0^(1)(k |x-c|), real k > 0.
struct HankelWave2D
{
  double k = 1.0;
  Point center{};
};

// e^{i k d.x} with unit direction d.
struct PlaneWave
{
  cplx k{1.0, 0.0};
  Point direction{1.0, 0.0, 0.0};
};

// e^{-|x-c|^2 / w^2}.
struct GaussianBump
{
  double width = 1.0;
  Point center{};
};

// Normal-incidence plane wave across the plane x_index = offset, incident from Omega_1
// (x_index < offset): e^{ik1 s} + R e^{-ik1 s} on the left, T e^{ik2 s} on the right, with
// k_l = k(z, mu_l) and s = x_index - offset.
struct TransmissionPlane1D
{
  double mu1 = 1.0;
  double mu2 = 4.0;
  SpectralParam z{1.0, 0.0};
  int index = 0;
  double offset = 0.0;
};

using AnalyticKind =
    std::variant<SphericalWave3D, HankelWave2D, PlaneWave, GaussianBump, TransmissionPlane1D>;

struct AnalyticField
{
  AnalyticKind kind;
  int dim = 3;
};

using Vec3c = std::array<cplx, 3>;

cplx eval_analytic(const AnalyticField &a, const Point &x);
Vec3c eval_analytic_gradient(const AnalyticField &a, const Point &x);
cplx eval_analytic_laplacian(const AnalyticField &a, const Point &x);

// Nodal samples. Throws if a singular point coincides with a node.
Field sample_analytic(const AnalyticField &a, const Grid &grid);

// Nodal samples together with the exact gradient.
GradField sample_analytic_with_gradient(const AnalyticField &a, const Grid &grid);

struct TransmissionCoefficients
{
  cplx reflection;
  cplx transmission;
};

// R = (k1 - k2) / (k1 + k2), T = 2 k1 / (k1 + k2), k_l = k(z, mu_l).
TransmissionCoefficients transmission_coefficients(double mu1, double mu2, double lambda);
TransmissionCoefficients transmission_coefficients(double mu1, double mu2, const SpectralParam &z);

// (u*, f*) with f* = mu^{-1} (-Laplacian u* - z mu u*), Laplacian evaluated analytically.
std::pair<Field, Field> manufactured_pair(const AnalyticField &u_star, const SpectralParam &z,
                                          const Geometry &g, const Grid &grid);

}  // namespace rwlab

#endif  // RWLAB_ORACLES_HPP
