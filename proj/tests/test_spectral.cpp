#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "rwlab/spectral.hpp"

using namespace rwlab;

namespace
{

// Principal root of z mu with the branch flipped so that Im k >= 0; an independent route to
// the closed-form coefficients.
cplx reference_k(cplx z, double mu)
{
  cplx k = std::sqrt(z * mu);
  if (k.imag() < 0.0)
    k = -k;
  return k;
}

}  // namespace

TEST_CASE("branch coefficients of 3+4i")
{
  const BranchCoefficients bc = branch_coefficients(SpectralParam(3.0, 4.0));
  CHECK(bc.c_a == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(bc.c_b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bc.e_z == doctest::Approx(4.0).epsilon(1e-15));
  const cplx k(bc.c_a, bc.c_b);
  CHECK(std::abs(k * k - cplx(3.0, 4.0)) < 1e-14);
}

TEST_CASE("real-axis limits from each half-plane")
{
  const BranchCoefficients plus = branch_coefficients(SpectralParam(9.0, 0.0, HalfPlane::Plus));
  CHECK(plus.c_a == 3.0);
  CHECK(plus.c_b == 0.0);
  const BranchCoefficients minus = branch_coefficients(SpectralParam(9.0, 0.0, HalfPlane::Minus));
  CHECK(minus.c_a == -3.0);
  CHECK(minus.c_b == 0.0);
}

TEST_CASE("branch coefficients of i")
{
  const BranchCoefficients bc = branch_coefficients(SpectralParam(0.0, 1.0));
  CHECK(bc.c_a == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(bc.c_b == doctest::Approx(1.0 / std::sqrt(2.0)));
  const cplx k(bc.c_a, bc.c_b);
  CHECK(std::abs(k * k - cplx(0.0, 1.0)) < 1e-15);
}

TEST_CASE("k_at examples")
{
  const cplx k1 = k_at(SpectralParam(3.0, 4.0), 1.0);
  CHECK(std::abs(k1 - cplx(2.0, 1.0)) < 1e-15);
  CHECK(std::norm(k1) == doctest::Approx(5.0));
  CHECK(std::abs(k_at(SpectralParam(1.0, 0.0), 4.0) - cplx(2.0, 0.0)) < 1e-15);
  const cplx k3 = k_at(SpectralParam(0.0, 1.0), 2.0);
  CHECK(std::abs(k3 - cplx(1.0, 1.0)) < 1e-15);
  CHECK(std::abs(k3 * k3 - cplx(0.0, 2.0)) < 1e-14);
}

TEST_CASE("k_at agrees with the principal root and keeps Im k > 0 off the axis")
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lexp(-6.0, 6.0), sgn(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i)
  {
    const double lambda = std::pow(10.0, lexp(rng));
    double eta = std::pow(10.0, lexp(rng));
    if (sgn(rng) < 0.0)
      eta = -eta;
    const double mu = std::pow(10.0, 0.5 * lexp(rng));
    const SpectralParam z(lambda, eta);
    const cplx k = k_at(z, mu);
    CHECK(k.imag() > 0.0);
    const cplx zmu = z.z() * mu;
    CHECK(std::abs(k * k - zmu) <= 1e-14 * std::abs(zmu));
    CHECK(std::abs(k - reference_k(z.z(), mu)) <= 1e-13 * std::abs(k));
  }
}

TEST_CASE("conjugate parameter flips the real part of k")
{
  for (double eta : {2.0, 1e-3, 0.0})
  {
    const SpectralParam z(1.7, eta, HalfPlane::Plus);
    const cplx k = k_at(z, 3.0);
    const cplx kc = k_at(z.conj(), 3.0);
    CHECK(std::abs(kc + std::conj(k)) < 1e-15);
  }
}

TEST_CASE("branch coefficients are continuous up to the real axis on each side")
{
  const BranchCoefficients edge = branch_coefficients(SpectralParam(2.0, 0.0, HalfPlane::Minus));
  const BranchCoefficients near = branch_coefficients(SpectralParam(2.0, -1e-12));
  CHECK(near.c_a == doctest::Approx(edge.c_a).epsilon(1e-12));
  CHECK(near.c_b < 1e-11);
}

TEST_CASE("dimension constants")
{
  CHECK(c_dimension(3) == 0.0);
  CHECK(c_dimension(2) == -0.25);
  CHECK(dimension_constants(3, 1.0).c_delta == 0.5);
  CHECK(dimension_constants(2, 0.75).c_delta == doctest::Approx(0.5 / std::sqrt(2.0)));
  CHECK_THROWS_AS(dimension_constants(3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(dimension_constants(3, 1.1), std::invalid_argument);
}

TEST_CASE("invalid parameters")
{
  CHECK_THROWS_AS(branch_coefficients(SpectralParam(0.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(SpectralParam(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(k_at(SpectralParam(1.0, 1.0), 0.0), std::invalid_argument);
}
