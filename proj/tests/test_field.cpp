#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rwlab/field.hpp"
#include "rwlab/field_io.hpp"
#include "rwlab/grid.hpp"
#include "rwlab/quadrature.hpp"
#include "rwlab/stencil.hpp"
#include "rwlab/weights.hpp"

using namespace rwlab;

namespace
{

const double pi = std::numbers::pi;

Field constant(const Grid &g, cplx c)
{
  return Field::sample(g, [c](const Point &) { return c; });
}

double rad(const Point &x)
{
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

}  // namespace

TEST_CASE("grid layout")
{
  const Grid g(3, 2.0, 5);
  CHECK(g.spacing() == 1.0);
  CHECK(g.size() == 125);
  CHECK(g.stride(0) == 25);
  CHECK(g.stride(2) == 1);
  const Index idx{1, 2, 4};
  CHECK(g.unravel(g.index(idx)) == idx);
  const Point p = g.position(idx);
  CHECK(p[0] == -1.0);
  CHECK(p[1] == 0.0);
  CHECK(p[2] == 2.0);
  CHECK(g.on_boundary(idx));
  CHECK(!g.on_boundary(Index{1, 2, 3}));
  CHECK(g.node_weight(Index{1, 1, 1}) == 1.0);
  CHECK(g.node_weight(Index{0, 1, 4}) == 0.25);
  CHECK(g.coarsened().points() == 3);
  CHECK_THROWS_AS(Grid(4, 1.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(Grid(2, 0.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(Grid(2, 1.0, 16).coarsened(), std::logic_error);
}

TEST_CASE("weighted norm examples")
{
  const Grid g2(2, 1.0, 129);
  CHECK(weighted_norm(constant(g2, 1.0), 0.0) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(weighted_norm(Field(g2), 0.0) == 0.0);
  const Grid g3(3, 6.0, 97);
  const Field gauss = Field::sample(g3, [](const Point &x) { return std::exp(-rad(x) * rad(x)); });
  CHECK(weighted_norm(gauss, 0.0) == doctest::Approx(std::pow(pi / 2.0, 0.75)).epsilon(1e-3));
}

TEST_CASE("weighted norm grows with t")
{
  const Grid g(2, 3.0, 65);
  const Field u = Field::sample(g, [](const Point &x) { return cplx(std::cos(x[0]), x[1]); });
  double prev = 0.0;
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0})
  {
    const double v = weighted_norm(u, t);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("x norm")
{
  // Even point count keeps nodes off the interface x1 = 0.
  const Grid g(2, 1.0, 128);
  const Geometry half(HalfSpace{0, 0.0}, 2, MediumPair(1.0, 4.0));
  CHECK(x_norm(constant(g, 1.0), half) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-3));
  CHECK(x_norm(Field(g), half) == 0.0);

  const Geometry far(Ball{100.0}, 2, MediumPair(3.0, 5.0));
  const Field u = Field::sample(g, [](const Point &x) { return cplx(x[0], 1.0); });
  CHECK(x_norm(u, far) == doctest::Approx(std::sqrt(3.0) * weighted_norm(u, 0.0)).epsilon(1e-14));

  const Geometry cyl(Cylinder{0.4, 1}, 2, MediumPair(2.0, 5.0));
  const double w = weighted_norm(u, 0.0), x = x_norm(u, cyl);
  CHECK(x >= std::sqrt(2.0) * w);
  CHECK(x <= std::sqrt(5.0) * w);
}

TEST_CASE("sobolev norm")
{
  const Grid g(2, 1.0, 257);
  CHECK(sobolev_norm(constant(g, 3.0), 1, 0.0) == doctest::Approx(3.0 * 2.0).epsilon(1e-12));
  const Field s = Field::sample(g, [](const Point &x) { return std::sin(pi * x[0]); });
  CHECK(sobolev_norm(s, 1, 0.0) == doctest::Approx(std::sqrt(2.0 + 2.0 * pi * pi)).epsilon(0.01));
  // Second derivatives add pi^4 sin^2: integral 2 pi^4.
  CHECK(sobolev_norm(s, 2, 0.0) ==
        doctest::Approx(std::sqrt(2.0 + 2.0 * pi * pi + 2.0 * std::pow(pi, 4))).epsilon(0.01));
  CHECK(sobolev_norm(Field(g), 1, 0.0) == 0.0);
  CHECK(sobolev_norm(Field(g), 2, 0.0) == 0.0);
  CHECK_THROWS_AS(sobolev_norm(s, 3, 0.0), std::invalid_argument);
}

TEST_CASE("starred norm")
{
  const Grid g(2, 1.0, 257);
  CHECK(starred_norm(Field(g), 0.0) == 0.0);
  CHECK(starred_norm(constant(g, 1.0), 0.0) ==
        doctest::Approx(std::sqrt(2.0 * pi / 3.0 + 4.0 - pi)).epsilon(1e-2));
  // Support inside B_{1/2}: only the |x| moment remains. Radial integral 2 pi int r^2 e^{-2r^2/w^2}.
  const Grid big(2, 2.0, 401);
  const double w = 0.08;
  const Field b = Field::sample(big, [w](const Point &x) { return std::exp(-rad(x) * rad(x) / (w * w)); });
  const double moment = 2.0 * pi * std::sqrt(pi) / 4.0 * std::pow(w / std::sqrt(2.0), 3);
  CHECK(starred_norm(b, 3.0) == doctest::Approx(std::sqrt(moment)).epsilon(2e-2));
  CHECK_THROWS_AS(starred_norm(Field(Grid(3, 1.0, 16)), 0.0), std::invalid_argument);
}

TEST_CASE("sphere and annulus integrals")
{
  const Grid g3(3, 2.0, 33), g2(2, 3.0, 65);
  CHECK(std::abs(sphere_integral(constant(g3, 1.0), 1.0) - 4.0 * pi) < 1e-3 * 4.0 * pi);
  CHECK(std::abs(sphere_integral(constant(g2, 1.0), 2.0) - 4.0 * pi) < 1e-3 * 4.0 * pi);
  const Field x1 = Field::sample(g3, [](const Point &x) { return x[0]; });
  CHECK(std::abs(sphere_integral(x1, 1.5)) < 1e-10);

  const Grid a2(2, 1.5, 257), a3(3, 2.5, 97);
  CHECK(annulus_integral(constant(a2, 1.0), 0.0, 1.0).real() == doctest::Approx(pi).epsilon(0.02));
  CHECK(annulus_integral(constant(a3, 1.0), 1.0, 2.0).real() ==
        doctest::Approx(4.0 * pi / 3.0 * 7.0).epsilon(0.02));
  CHECK(std::abs(annulus_integral(constant(a2, 1.0), 1.0 - 1e-12, 1.0)) < 1e-3);
  CHECK_THROWS_AS(sphere_integral(constant(g3, 1.0), 3.0), std::invalid_argument);
}

TEST_CASE("integrals are linear in the integrand")
{
  const Grid g(3, 2.0, 33);
  const Field a = Field::sample(g, [](const Point &x) { return cplx(x[0] * x[0], x[1]); });
  const Field b = Field::sample(g, [](const Point &x) { return cplx(std::cos(x[2]), 1.0); });
  const cplx c(0.3, -1.2);
  Field comb = c * a;
  comb += b;
  for (double R : {0.7, 1.4})
  {
    const cplx lhs = sphere_integral(comb, R);
    const cplx rhs = c * sphere_integral(a, R) + sphere_integral(b, R);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
  }
  const cplx la = annulus_integral(comb, 0.5, 1.5);
  const cplx ra = c * annulus_integral(a, 0.5, 1.5) + annulus_integral(b, 0.5, 1.5);
  CHECK(std::abs(la - ra) < 1e-12 * (1.0 + std::abs(la)));
}

TEST_CASE("interpolation reproduces multilinear functions")
{
  const Grid g(3, 1.0, 9);
  auto fn = [](const Point &x) { return cplx(1.0 + 2.0 * x[0] - x[1] + 0.5 * x[0] * x[1] * x[2], x[2]); };
  const Field u = Field::sample(g, fn);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int i = 0; i < 200; ++i)
  {
    const Point p{d(rng), d(rng), d(rng)};
    CHECK(std::abs(interpolate(g, u.values(), p) - fn(p)) < 1e-13);
  }
  CHECK_THROWS_AS(interpolate(g, u.values(), Point{1.5, 0.0, 0.0}), std::out_of_range);
}

TEST_CASE("difference stencils are exact on low-degree polynomials")
{
  const Grid g(2, 1.0, 11);
  const Field q = Field::sample(g, [](const Point &x) { return cplx(x[0] * x[0] * x[0] + x[0] * x[1], x[1] * x[1]); });
  const auto v = q.values();
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Index idx = g.unravel(i);
    const Point x = g.position(idx);
    // d1 is second order: exact on quadratics, so test it on the quadratic part in x2.
    CHECK(std::abs(stencil::d1(g, v, idx, 1) - cplx(x[0], 2.0 * x[1])) < 1e-12);
    CHECK(std::abs(stencil::d2(g, v, idx, 0) - cplx(6.0 * x[0], 0.0)) < 1e-10);
    CHECK(std::abs(stencil::d2(g, v, idx, 1) - cplx(0.0, 2.0)) < 1e-10);
    CHECK(std::abs(stencil::d11(g, v, idx, 0, 1) - cplx(1.0, 0.0)) < 1e-12);
  }
  const GradField gq = discrete_gradient(Field::sample(g, [](const Point &x) { return cplx(x[0] * x[0], x[0] * x[1]); }));
  for (std::size_t i = 0; i < g.size(); ++i)
  {
    const Point x = g.position(i);
    CHECK(std::abs(gq.grad[0][i] - cplx(2.0 * x[0], x[1])) < 1e-12);
    CHECK(std::abs(gq.grad[1][i] - cplx(0.0, x[0])) < 1e-12);
  }
}

TEST_CASE("weight profile values")
{
  const WeightValue t = eval_weight(TruncatedWeight{1.0}, 2.0);
  CHECK(t.xi == 1.0);
  CHECK(t.xi_prime == 0.0);
  for (double delta : {0.6, 0.75, 1.0})
  {
    CHECK(eval_weight(PowerDeltaWeight{delta}, 1.0).xi == doctest::Approx(1.0));
    CHECK(eval_weight(PowerDeltaWeight{delta}, 1.0 + 1e-12).xi == doctest::Approx(1.0));
  }
  CHECK(eval_weight(TwoDAlphaWeight{2.0, 0.5}, 2.0).xi == doctest::Approx(4.0));
  CHECK(eval_weight(TwoDAlphaWeight{2.0, 0.5}, 2.0 + 1e-12).xi == doctest::Approx(4.0));
  CHECK_THROWS_AS(eval_weight(TruncatedWeight{1.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(validate_weight(PowerDeltaWeight{0.5}), std::invalid_argument);
}

TEST_CASE("two-dimensional delta weight is C1 and increasing across the join")
{
  for (double delta : {0.6, 0.75, 1.0})
  {
    const WeightProfile p = TwoDDeltaWeight{delta};
    for (double r0 : {0.5, 1.0})
    {
      const WeightValue lo = eval_weight(p, r0 - 1e-9), hi = eval_weight(p, r0 + 1e-9);
      CHECK(lo.xi == doctest::Approx(hi.xi).epsilon(1e-7));
      CHECK(lo.xi_prime == doctest::Approx(hi.xi_prime).epsilon(1e-6));
    }
    double prev = -1.0;
    for (double r = 0.0; r < 3.0; r += 0.01)
    {
      const WeightValue v = eval_weight(p, r);
      CHECK(v.xi >= prev);
      CHECK(v.xi_prime >= 0.0);
      prev = v.xi;
      // Finite-difference check of the derivative away from the joins.
      if (r > 0.02 && std::abs(r - 0.5) > 0.02 && std::abs(r - 1.0) > 0.02)
      {
        const double fd = (eval_weight(p, r + 1e-6).xi - eval_weight(p, r - 1e-6).xi) / 2e-6;
        CHECK(v.xi_prime == doctest::Approx(fd).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("gauss-legendre rules")
{
  for (int m : {1, 2, 5, 12})
  {
    const GaussRule r = gauss_legendre(m);
    for (int p = 0; p < 2 * m; ++p)
    {
      double s = 0.0;
      for (int i = 0; i < m; ++i)
        s += r.weights[i] * std::pow(r.nodes[i], p);
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("sphere and shell rules")
{
  double a3 = 0.0, a2 = 0.0, second = 0.0;
  for (const QuadPoint &q : sphere_rule(3, 2.0, 16))
  {
    a3 += q.weight;
    second += q.weight * q.x[2] * q.x[2];
  }
  CHECK(a3 == doctest::Approx(16.0 * pi).epsilon(1e-12));
  // int_{S_R} x3^2 = 4 pi R^4 / 3.
  CHECK(second == doctest::Approx(4.0 * pi * 16.0 / 3.0).epsilon(1e-12));
  for (const QuadPoint &q : sphere_rule(2, 2.0, 64))
    a2 += q.weight;
  CHECK(a2 == doctest::Approx(4.0 * pi).epsilon(1e-12));

  const std::vector<double> br{1.5};
  double vol = 0.0, moment = 0.0;
  for (const QuadPoint &q : shell_rule(3, 1.0, 2.0, br, 0.1))
  {
    vol += q.weight;
    moment += q.weight * rad(q.x);
  }
  CHECK(vol == doctest::Approx(4.0 * pi / 3.0 * 7.0).epsilon(1e-10));
  CHECK(moment == doctest::Approx(pi * 15.0).epsilon(1e-10));
  std::size_t streamed = 0;
  visit_shell_rule(3, 1.0, 2.0, br, 0.1, [&](const QuadPoint &) { ++streamed; });
  CHECK(streamed == shell_rule(3, 1.0, 2.0, br, 0.1).size());
}

TEST_CASE("field file round trip")
{
  const Grid g(2, 1.5, 17);
  const Field u = Field::sample(g, [](const Point &x) { return cplx(std::sin(x[0]) / 3.0, std::exp(x[1])); });
  std::stringstream ss;
  write_rwf1(ss, u);
  const std::string bytes = ss.str();
  CHECK(bytes.substr(0, 4) == "RWF1");
  CHECK(bytes.size() == 4 + 4 + 4 + 8 + g.size() * 16);
  const Field v = read_rwf1(ss);
  CHECK(v.grid() == g);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(v[i] == u[i]);
  std::istringstream bad("RWF2xxxxxxxxxxxxxxxx");
  CHECK_THROWS(read_rwf1(bad));
}

TEST_CASE("shortest round-trip formatting")
{
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i)
  {
    const double v = d(rng) * std::pow(10.0, i % 40 - 20);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("field csv layout")
{
  const Grid g(2, 1.0, 3);
  std::ostringstream os;
  write_field_csv(os, constant(g, cplx(1.0, -2.0)));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "i1,i2,x1,x2,re,im");
  std::getline(is, line);
  CHECK(line == "0,0,-1,-1,1,-2");
}
