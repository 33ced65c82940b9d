#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rwlab/geometry.hpp"

using namespace rwlab;

namespace
{

double total_area(const std::vector<SurfaceSample> &s)
{
  double a = 0.0;
  for (const auto &x : s)
    a += x.area_weight;
  return a;
}

std::vector<Geometry> stock_geometries()
{
  return {
      Geometry(Cylinder{1.0, 2}, 3, MediumPair(1.0, 2.0)),
      Geometry(Cylinder{1.0, 1}, 2, MediumPair(1.0, 2.0)),
      Geometry(Cone{0.6, 2}, 3, MediumPair(1.0, 3.0)),
      Geometry(HalfSpace{2, 0.3}, 3, MediumPair(1.0, 4.0)),
      Geometry(HalfSpace{0, -0.2}, 2, MediumPair(4.0, 1.0)),
      Geometry(Ball{1.0}, 3, MediumPair(2.0, 1.0)),
      Geometry(Ball{1.5}, 2, MediumPair(2.0, 1.0), true),
  };
}

}  // namespace

TEST_CASE("classify points around a cylinder")
{
  const Geometry g(Cylinder{1.0, 2}, 3, MediumPair(1.0, 4.0));
  const std::vector<double> on_axis{0.0, 0.0, 5.0}, outside{2.0, 0.0, 0.0}, on_s{1.0, 0.0, 0.0};
  CHECK(classify_point(g, on_axis) == Region::Omega1);
  CHECK(classify_point(g, outside) == Region::Omega2);
  CHECK(classify_point(g, on_s) == Region::Surface);
  CHECK(mu_at(g, on_axis) == 1.0);
  CHECK(mu_at(g, outside) == 4.0);
  CHECK(mu_at(g, on_s) == 4.0);
}

TEST_CASE("coordinate errors")
{
  const Geometry g(Cylinder{1.0, 2}, 3, MediumPair(1.0, 4.0));
  const std::vector<double> short_x{0.0, 0.0};
  CHECK_THROWS_AS(classify_point(g, short_x), std::invalid_argument);
  const std::vector<double> bad{0.0, NAN, 0.0};
  CHECK_THROWS_AS(mu_at(g, bad), std::invalid_argument);
  CHECK_THROWS_AS(MediumPair(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(MediumPair(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("surface areas of sampled pieces")
{
  const double pi = std::numbers::pi;
  const Geometry cyl(Cylinder{1.0, 2}, 3, MediumPair(1.0, 2.0));
  CHECK(total_area(sample_surface(cyl, 2.0, 20000)) ==
        doctest::Approx(2.0 * pi * 2.0 * std::sqrt(3.0)).epsilon(0.01));
  const Geometry plane(HalfSpace{2, 0.0}, 3, MediumPair(1.0, 2.0));
  CHECK(total_area(sample_surface(plane, 1.0, 20000)) == doctest::Approx(pi).epsilon(0.01));
  const Geometry ball(Ball{1.0}, 3, MediumPair(1.0, 2.0));
  CHECK(total_area(sample_surface(ball, 2.0, 20000)) == doctest::Approx(4.0 * pi).epsilon(0.01));
  // Cone x3 = |x| cos(a): lateral area pi R^2 sin(a) inside B_R.
  const Geometry cone(Cone{0.6, 2}, 3, MediumPair(1.0, 2.0));
  CHECK(total_area(sample_surface(cone, 2.0, 20000)) ==
        doctest::Approx(pi * 4.0 * std::sin(0.6)).epsilon(0.01));
  // Strip |x1| < 1 in the plane: two lines of length 2 sqrt(3) inside B_2.
  const Geometry strip(Cylinder{1.0, 1}, 2, MediumPair(1.0, 2.0));
  CHECK(total_area(sample_surface(strip, 2.0, 4000)) ==
        doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(0.01));
}

TEST_CASE("shell sampling restricts to r < |x| < R")
{
  const Geometry cyl(Cylinder{1.0, 2}, 3, MediumPair(1.0, 2.0));
  const auto s = sample_surface_shell(cyl, 1.5, 3.0, 20000);
  REQUIRE(!s.empty());
  for (const auto &x : s)
  {
    CHECK(norm(x.point) > 1.5);
    CHECK(norm(x.point) < 3.0);
  }
  const double h = [](double R) { return 2.0 * std::sqrt(R * R - 1.0); }(3.0) -
                   2.0 * std::sqrt(1.5 * 1.5 - 1.0);
  CHECK(total_area(s) == doctest::Approx(2.0 * std::numbers::pi * h).epsilon(1e-3));
  CHECK_THROWS_AS(sample_surface(cyl, 2.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(sample_surface(cyl, -1.0, 100), std::invalid_argument);
}

TEST_CASE("normals point from Omega1 into Omega2")
{
  for (const Geometry &g : stock_geometries())
  {
    const auto s = sample_surface(g, 3.0, 400);
    REQUIRE(!s.empty());
    for (const auto &x : s)
    {
      const double eps = 1e-6;
      Point in = x.point, out = x.point;
      for (int j = 0; j < 3; ++j)
      {
        in[j] -= eps * x.normal1[j];
        out[j] += eps * x.normal1[j];
      }
      CHECK(g.classify(in) == Region::Omega1);
      CHECK(g.classify(out) == Region::Omega2);
      CHECK(norm(x.normal1) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("sign condition on the standard cases")
{
  const Geometry cyl(Cylinder{1.0, 2}, 3, MediumPair(1.0, 2.0));
  const auto rc = check_sign_condition(cyl, sample_surface(cyl, 3.0, 4000));
  CHECK(rc.pass);
  CHECK(rc.min_product == doctest::Approx(1.0).epsilon(1e-12));

  const Geometry plane(HalfSpace{2, 0.0}, 3, MediumPair(1.0, 4.0));
  const auto rp = check_sign_condition(plane, sample_surface(plane, 3.0, 4000));
  CHECK(rp.pass);
  CHECK(std::abs(rp.min_product) < 1e-12);

  const Geometry ball(Ball{1.0}, 3, MediumPair(2.0, 1.0));
  const auto rb = check_sign_condition(ball, sample_surface(ball, 3.0, 4000));
  CHECK(!rb.pass);
  CHECK(rb.min_product == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(check_sign_condition(cyl, std::vector<SurfaceSample>{}),
                  std::invalid_argument);
}

TEST_CASE("sign condition is invariant under swapping the media")
{
  for (const Geometry &g : stock_geometries())
  {
    const Geometry w = g.swapped();
    const double a = check_sign_condition(g, sample_surface(g, 3.0, 400)).min_product;
    const double b = check_sign_condition(w, sample_surface(w, 3.0, 400)).min_product;
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("mu is constant along paths that stay in one medium")
{
  const Geometry g(Cone{0.6, 2}, 3, MediumPair(1.0, 3.0));
  // Along the axis the cone interior is Omega1.
  for (double t = 0.1; t < 5.0; t += 0.1)
    CHECK(g.mu(Point{0.0, 0.0, t}) == 1.0);
  for (double t = 0.1; t < 5.0; t += 0.1)
    CHECK(g.mu(Point{0.0, 0.0, -t}) == 3.0);
}
