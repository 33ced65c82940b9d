#ifndef RWLAB_SPECTRAL_HPP
#define RWLAB_SPECTRAL_HPP

#include <complex>

namespace rwlab
{

using cplx = std::complex<double>;

// Which closed half-plane a real spectral parameter is approached from. Only consulted
// when eta == 0; otherwise the sign of eta decides.
enum class HalfPlane
{
  Plus,
  Minus
};

//
// Spectral parameter z = lambda + i eta with lambda >= 0.
//
struct SpectralParam
{
  double lambda = 1.0;
  double eta = 1.0;
  HalfPlane half = HalfPlane::Plus;

  SpectralParam() = default;
  SpectralParam(double lambda_, double eta_, HalfPlane half_ = HalfPlane::Plus);

  cplx z() const { return {lambda, eta}; }
  double abs_z() const;

  // Half-plane the parameter belongs to: sign of eta, or the tag on the real axis.
  HalfPlane side() const;

  // Complex conjugate, landing in the opposite closed half-plane.
  SpectralParam conj() const;
};

struct BranchCoefficients
{
  double c_a = 0.0;
  double c_b = 0.0;
  double e_z = 0.0;
};

struct DimensionConstants
{
  double c_N = 0.0;
  double c_delta = 0.0;
};

// Closed-form decomposition k(x, z) = sqrt(mu(x)) (c_a + i c_b), Im k >= 0. On the real axis
// the limit from the tagged half-plane is returned (c_a = +sqrt(lambda) or -sqrt(lambda)).
BranchCoefficients branch_coefficients(const SpectralParam &z);

// k = [z mu]^{1/2} on the branch Im k >= 0.
cplx k_at(const SpectralParam &z, double mu);

// c_N alone; no delta needed.
double c_dimension(int N);

// c_N = (N-1)(N-3)/4 and c_delta = (2 delta - 1) / 2^{2 delta - 1}, 1/2 < delta <= 1.
DimensionConstants dimension_constants(int N, double delta);

}  // namespace rwlab

#endif  // RWLAB_SPECTRAL_HPP
