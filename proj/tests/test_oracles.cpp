#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rwlab/bessel.hpp"
#include "rwlab/oracles.hpp"

using namespace rwlab;

namespace
{

const double pi = std::numbers::pi;

struct BesselRow
{
  double x, j0, j1, y0, y1;
};

// Reference values from a 30-digit arbitrary-precision evaluation.
const BesselRow kTable[] = {
    {0.1, 0.99750156206604003, 0.049937526036242, -1.5342386513503668, -6.4589510947020266},
    {1, 0.76519768655796655, 0.44005058574493352, 0.088256964215676958, -0.78121282130028872},
    {5, -0.1775967713143383, -0.32757913759146522, -0.30851762524903378, 0.14786314339122684},
    {12.5, 0.1468840547004211, -0.16548380461475972, -0.17121430684466929, -0.15383825653750118},
    {19.9, 0.17287775639261846, 0.050117424807379741, 0.045762094159385479, -0.17178303121049256},
    {20.1, 0.15953606793729709, 0.082801005760209763, 0.078810592428750293, -0.15762598074781154},
    {35, -0.12684568275631257, 0.04399094217962564, 0.045797987195155641, 0.12751273354559012},
    {50, 0.055812327669251815, -0.097511828125175138, -0.098064995470077079, -0.056795668562014768},
};

// J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt; the trapezoid rule converges geometrically.
double bessel_j_integral(int n, double x)
{
  const int m = 400;
  double s = 0.0;
  for (int i = 0; i <= m; ++i)
  {
    const double t = pi * i / m;
    const double w = (i == 0 || i == m) ? 0.5 : 1.0;
    s += w * std::cos(n * t - x * std::sin(t));
  }
  return s / m;
}

Vec3c fd_gradient(const AnalyticField &a, const Point &x, double h)
{
  Vec3c g{};
  for (int j = 0; j < a.dim; ++j)
  {
    Point p = x, m = x;
    p[j] += h;
    m[j] -= h;
    g[j] = (eval_analytic(a, p) - eval_analytic(a, m)) / (2.0 * h);
  }
  return g;
}

cplx fd_laplacian(const AnalyticField &a, const Point &x, double h)
{
  cplx s = 0.0;
  const cplx c = eval_analytic(a, x);
  for (int j = 0; j < a.dim; ++j)
  {
    Point p = x, m = x;
    p[j] += h;
    m[j] -= h;
    s += (eval_analytic(a, p) - 2.0 * c + eval_analytic(a, m)) / (h * h);
  }
  return s;
}

}  // namespace

TEST_CASE("bessel functions against reference values")
{
  for (const BesselRow &r : kTable)
  {
    CAPTURE(r.x);
    CHECK(bessel::j0(r.x) == doctest::Approx(r.j0).epsilon(1e-12).scale(1.0));
    CHECK(bessel::j1(r.x) == doctest::Approx(r.j1).epsilon(1e-12).scale(1.0));
    CHECK(bessel::y0(r.x) == doctest::Approx(r.y0).epsilon(1e-12).scale(1.0));
    CHECK(bessel::y1(r.x) == doctest::Approx(r.y1).epsilon(1e-12).scale(1.0));
    CHECK(std::abs(bessel::hankel1_0(r.x) - cplx(r.j0, r.y0)) < 1e-12);
    CHECK(std::abs(bessel::hankel1_1(r.x) - cplx(r.j1, r.y1)) < 1e-12);
  }
}

TEST_CASE("bessel J against the integral representation")
{
  for (double x = 0.1; x < 50.0; x += 0.37)
  {
    CAPTURE(x);
    CHECK(std::abs(bessel::j0(x) - bessel_j_integral(0, x)) < 1e-12);
    CHECK(std::abs(bessel::j1(x) - bessel_j_integral(1, x)) < 1e-12);
  }
}

TEST_CASE("Wronskian J0 Y0' - J0' Y0 = 2 / (pi x)")
{
  for (double x = 0.1; x <= 50.0; x += 0.1)
  {
    const double w = bessel::j1(x) * bessel::y0(x) - bessel::j0(x) * bessel::y1(x);
    CHECK(std::abs(w - 2.0 / (pi * x)) < 1e-8);
  }
}

TEST_CASE("analytic field values")
{
  const AnalyticField s{SphericalWave3D{1.0, {}}, 3};
  const cplx v = eval_analytic(s, Point{0.0, 1.0, 0.0});
  CHECK(std::abs(v - std::exp(cplx(0.0, 1.0)) / (4.0 * pi)) < 1e-15);
  CHECK(std::abs(v) == doctest::Approx(0.0795775).epsilon(1e-6));

  const AnalyticField h{HankelWave2D{2.0, {}}, 2};
  const cplx hv = eval_analytic(h, Point{0.3, 0.4, 0.0});
  CHECK(hv.real() == doctest::Approx(0.76519768655796655).epsilon(1e-12));
  CHECK(hv.imag() == doctest::Approx(0.088256964215676958).epsilon(1e-12));

  const AnalyticField p{PlaneWave{1.7, {0.6, 0.8, 0.0}}, 3};
  for (double t = -5.0; t < 5.0; t += 0.7)
    CHECK(std::abs(eval_analytic(p, Point{t, -t, 2.0 * t})) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("analytic gradients and laplacians match finite differences")
{
  const SpectralParam z(1.3, 0.2);
  const AnalyticField fields[] = {
      {SphericalWave3D{k_at(z, 1.0), {0.3, 0.2, 0.1}}, 3},
      {HankelWave2D{1.4, {0.1, -0.2, 0.0}}, 2},
      {PlaneWave{cplx(1.1, 0.05), {0.0, 0.6, 0.8}}, 3},
      {GaussianBump{0.9, {0.2, 0.1, -0.3}}, 3},
      {GaussianBump{1.2, {0.0, 0.5, 0.0}}, 2},
      {TransmissionPlane1D{1.0, 4.0, z, 1, 0.25}, 3},
  };
  const Point pts[] = {{1.1, -0.7, 0.4}, {-2.0, 1.3, -0.6}, {0.5, 2.2, 1.9}};
  for (const AnalyticField &a : fields)
  {
    for (const Point &x : pts)
    {
      const Vec3c g = eval_analytic_gradient(a, x);
      const Vec3c fd = fd_gradient(a, x, 1e-5);
      for (int j = 0; j < a.dim; ++j)
        CHECK(std::abs(g[j] - fd[j]) < 1e-8 * (1.0 + std::abs(g[j])));
      const cplx lap = eval_analytic_laplacian(a, x);
      CHECK(std::abs(lap - fd_laplacian(a, x, 1e-4)) < 1e-5 * (1.0 + std::abs(lap)));
    }
  }
}

TEST_CASE("outgoing waves solve the Helmholtz equation")
{
  const cplx k(1.2, 0.3);
  const AnalyticField s{SphericalWave3D{k, {}}, 3};
  const AnalyticField h{HankelWave2D{1.2, {}}, 2};
  for (const Point &x : {Point{1.0, 2.0, -0.5}, Point{-3.0, 0.2, 1.0}})
  {
    CHECK(std::abs(eval_analytic_laplacian(s, x) + k * k * eval_analytic(s, x)) < 1e-14);
    CHECK(std::abs(eval_analytic_laplacian(h, x) + 1.44 * eval_analytic(h, x)) < 1e-12);
  }
}

TEST_CASE("discrete Helmholtz residual of the spherical wave is second order")
{
  const double k = 1.0;
  const AnalyticField s{SphericalWave3D{k, {}}, 3};
  auto residual = [&](int n)
  {
    const Grid g(3, 4.0, n);
    const Field u = sample_analytic(s, g);
    const double h = g.spacing();
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
    {
      const Index idx = g.unravel(i);
      const Point x = g.position(idx);
      const double r = norm(x);
      if (r < 1.0 || r > 3.0)
        continue;
      cplx lap = -2.0 * g.dim() * u[i];
      for (int a = 0; a < 3; ++a)
        lap += u[i + g.stride(a)] + u[i - g.stride(a)];
      acc += g.node_weight(idx) * std::norm(-lap / (h * h) - k * k * u[i]);
    }
    return std::sqrt(acc);
  };
  // Even n keeps the singular point off the nodes.
  const double coarse = residual(64), fine = residual(128);
  CHECK(std::log2(coarse / fine) > 1.8);
}

TEST_CASE("transmission coefficients")
{
  const auto same = transmission_coefficients(2.0, 2.0, 1.0);
  CHECK(std::abs(same.reflection) < 1e-15);
  CHECK(std::abs(same.transmission - 1.0) < 1e-15);

  const auto tc = transmission_coefficients(1.0, 4.0, 1.0);
  CHECK(std::abs(tc.reflection - (-1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(tc.transmission - 2.0 / 3.0) < 1e-15);
  const double k1 = 1.0, k2 = 2.0;
  CHECK(k1 * (1.0 - std::norm(tc.reflection)) == doctest::Approx(k2 * std::norm(tc.transmission)));

  // Matching conditions at complex z, solved directly: 1 + R = T, k1 (1 - R) = k2 T.
  const SpectralParam z(0.8, -0.3);
  const cplx a = k_at(z, 1.5), b = k_at(z, 0.4);
  const auto c = transmission_coefficients(1.5, 0.4, z);
  CHECK(std::abs(1.0 + c.reflection - c.transmission) < 1e-15);
  CHECK(std::abs(a * (1.0 - c.reflection) - b * c.transmission) < 1e-14);
  const cplx t_direct = 2.0 * a / (a + b);
  CHECK(std::abs(c.transmission - t_direct) < 1e-15);
}

TEST_CASE("transmission field is continuous with continuous normal derivative")
{
  const SpectralParam z(1.0, 1e-3);
  const AnalyticField a{TransmissionPlane1D{1.0, 4.0, z, 0, 0.37}, 2};
  const double eps = 1e-9;
  const Point l{0.37 - eps, 0.5, 0.0}, r{0.37 + eps, 0.5, 0.0};
  CHECK(std::abs(eval_analytic(a, l) - eval_analytic(a, r)) < 1e-8);
  CHECK(std::abs(eval_analytic_gradient(a, l)[0] - eval_analytic_gradient(a, r)[0]) < 1e-8);
  // -u'' = z mu u on both sides.
  const Geometry g(HalfSpace{0, 0.37}, 2, MediumPair(1.0, 4.0));
  for (const Point &x : {Point{-1.0, 0.0, 0.0}, Point{2.0, 0.0, 0.0}})
  {
    const cplx res = -eval_analytic_laplacian(a, x) - z.z() * g.mu(x) * eval_analytic(a, x);
    CHECK(std::abs(res) < 1e-13);
  }
}

TEST_CASE("manufactured pair")
{
  const Grid grid(2, 4.0, 33);
  const Geometry g(Cylinder{1.0, 1}, 2, MediumPair(1.0, 3.0));
  const AnalyticField bump{GaussianBump{1.0, {}}, 2};
  const auto [u, f] = manufactured_pair(bump, SpectralParam(2.0, 0.0), g, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    CHECK(u[i].imag() == 0.0);
    CHECK(f[i].imag() == 0.0);
    const Point x = grid.position(i);
    const double r2 = x[0] * x[0] + x[1] * x[1];
    // -Laplacian of e^{-r^2} in 2D is (4 - 4 r^2) e^{-r^2}.
    const double expect = (4.0 - 4.0 * r2) * std::exp(-r2) / g.mu(x) - 2.0 * std::exp(-r2);
    CHECK(f[i].real() == doctest::Approx(expect).epsilon(1e-12).scale(1.0));
  }
  const AnalyticField tr{TransmissionPlane1D{}, 2};
  CHECK_THROWS(manufactured_pair(tr, SpectralParam(1.0, 0.0), g, grid));
  const AnalyticField on_node{SphericalWave3D{1.0, {}}, 3};
  CHECK_THROWS(sample_analytic(on_node, Grid(3, 1.0, 17)));
}
