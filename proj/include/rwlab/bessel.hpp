#ifndef RWLAB_BESSEL_HPP
#define RWLAB_BESSEL_HPP

#include <complex>

namespace rwlab::bessel
{

// Bessel functions of the first and second kind, orders 0 and 1, for real x > 0.
// Power series (extended precision) below x = 20, Hankel asymptotic expansion above.
double j0(double x);
double j1(double x);
double y0(double x);
double y1(double x);

// H_0^(1)(x) = J_0(x) + i Y_0(x), H_1^(1)(x) = J_1(x) + i Y_1(x).
std::complex<double> hankel1_0(double x);
std::complex<double> hankel1_1(double x);

}  // namespace rwlab::bessel

#endif  // RWLAB_BESSEL_HPP
