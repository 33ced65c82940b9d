#include "rwlab/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace rwlab::bessel
{

namespace
{

using real = long double;

constexpr real kPi = 3.141592653589793238462643383279502884L;
constexpr real kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr double kSeriesLimit = 20.0;

struct Pair
{
  real j;
  real y;
};

void check_argument(double x)
{
  if (!(x > 0.0) || !std::isfinite(x))
  {
    throw std::domain_error("bessel: argument must be positive and finite");
  }
}

// Series for J_0, Y_0.
Pair series0(real x)
{
  const real q = x * x / 4;
  real term = 1, j = 1, s = 0, harmonic = 0;
  for (int k = 1; k < 200; ++k)
  {
    term *= -q / (static_cast<real>(k) * k);
    harmonic += 1.0L / k;
    j += term;
    s += -term * harmonic;
    if (std::fabs(term) * (1 + harmonic) < 1e-22L * std::fabs(j))
      break;
  }
  const real y = (2 / kPi) * ((std::log(x / 2) + kEulerGamma) * j + s);
  return {j, y};
}

// Series for J_1, Y_1.
Pair series1(real x)
{
  const real q = x * x / 4;
  real term = 1;  // (-q)^k / (k! (k+1)!)
  real j = 1;
  real psi_k = -kEulerGamma;       // psi(k + 1)
  real psi_k1 = 1 - kEulerGamma;   // psi(k + 2)
  real s = psi_k + psi_k1;
  for (int k = 1; k < 200; ++k)
  {
    term *= -q / (static_cast<real>(k) * (k + 1));
    psi_k += 1.0L / k;
    psi_k1 += 1.0L / (k + 1);
    j += term;
    s += term * (psi_k + psi_k1);
    if (std::fabs(term) * std::fabs(psi_k + psi_k1) < 1e-22L * std::fabs(s) &&
        std::fabs(term) < 1e-22L * std::fabs(j))
      break;
  }
  const real half = x / 2;
  const real J = half * j;
  const real Y = -2 / (kPi * x) + (2 / kPi) * std::log(half) * J - (1 / kPi) * half * s;
  return {J, Y};
}

// Hankel asymptotic expansion for order nu in {0, 1}.
Pair asymptotic(real x, int nu)
{
  const real mu = 4.0L * nu * nu;
  real t = 1, P = 1, Q = 0, last = 1;
  for (int k = 1; k < 200; ++k)
  {
    const real odd = 2.0L * k - 1;
    const real next = t * (mu - odd * odd) / (k * 8 * x);
    if (std::fabs(next) > last && k > 2)
      break;
    last = std::fabs(next);
    t = next;
    switch (k % 4)
    {
    case 1: Q += t; break;
    case 2: P -= t; break;
    case 3: Q -= t; break;
    default: P += t; break;
    }
    if (std::fabs(t) < 1e-24L)
      break;
  }
  const real chi = x - (nu / 2.0L + 0.25L) * kPi;
  const real amp = std::sqrt(2 / (kPi * x));
  return {amp * (P * std::cos(chi) - Q * std::sin(chi)),
          amp * (P * std::sin(chi) + Q * std::cos(chi))};
}

Pair order0(double x)
{
  check_argument(x);
  return x < kSeriesLimit ? series0(x) : asymptotic(x, 0);
}

Pair order1(double x)
{
  check_argument(x);
  return x < kSeriesLimit ? series1(x) : asymptotic(x, 1);
}

}  // namespace

double j0(double x)
{
  return static_cast<double>(order0(x).j);
}

double y0(double x)
{
  return static_cast<double>(order0(x).y);
}

double j1(double x)
{
  return static_cast<double>(order1(x).j);
}

double y1(double x)
{
  return static_cast<double>(order1(x).y);
}

std::complex<double> hankel1_0(double x)
{
  const Pair p = order0(x);
  return {static_cast<double>(p.j), static_cast<double>(p.y)};
}

std::complex<double> hankel1_1(double x)
{
  const Pair p = order1(x);
  return {static_cast<double>(p.j), static_cast<double>(p.y)};
}

}  // namespace rwlab::bessel
