#ifndef RWLAB_GEOMETRY_HPP
#define RWLAB_GEOMETRY_HPP

#include <array>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rwlab
{

// Coordinates in R^N, N in {2, 3}; trailing components are zero when N = 2.
using Point = std::array<double, 3>;

struct MediumPair
{
  double mu1 = 1.0;
  double mu2 = 2.0;

  MediumPair() = default;
  MediumPair(double mu1_, double mu2_);

  double M0() const { return mu1 > mu2 ? mu1 : mu2; }
  double mu0() const { return mu1 < mu2 ? mu1 : mu2; }
};

// Axis indices below are zero-based (axis = 2 is x_3).

// |x with the axis component removed| < radius. In N = 2 this is the strip |x_other| < radius.
struct Cylinder
{
  double radius = 1.0;
  int axis = 2;
};

// Vertex at the origin, opening around the positive axis direction.
struct Cone
{
  double half_angle = 0.5;
  int axis = 2;
};

// Omega_1 = { x_index < offset }.
struct HalfSpace
{
  int index = 2;
  double offset = 0.0;
};

struct Ball
{
  double radius = 1.0;
};

using GeometryKind = std::variant<Cylinder, Cone, HalfSpace, Ball>;

enum class Region
{
  Omega1,
  Omega2,
  Surface
};

//
// Two-media partition of R^N. Omega_1 is the set described by kind (or its exterior when
// complement is set); Omega_2 is the remaining open set.
//
class Geometry
{
public:
  Geometry(GeometryKind kind, int dimension, MediumPair media, bool complement = false);

  const GeometryKind &kind() const { return kind_; }
  int dimension() const { return dim_; }
  const MediumPair &media() const { return media_; }
  bool complement() const { return complement_; }

  // Same surface with the roles of (Omega_1, mu1) and (Omega_2, mu2) exchanged.
  Geometry swapped() const;

  // Signed function, negative in Omega_1, positive in Omega_2, with unit gradient near S.
  double signed_distance(const Point &x) const;

  // Unit outward normal of Omega_1 at a point on (or near) S.
  Point normal1(const Point &x) const;

  Region classify(const Point &x) const;
  double mu(const Point &x) const;

  std::string describe() const;

private:
  double raw_distance(const Point &x) const;
  Point raw_normal(const Point &x) const;

  GeometryKind kind_;
  int dim_;
  MediumPair media_;
  bool complement_;
};

struct SurfaceSample
{
  Point point{};
  Point normal1{};
  double area_weight = 0.0;
};

struct ConditionReport
{
  bool pass = false;
  double min_product = 0.0;
  Point worst_point{};
};

Region classify_point(const Geometry &g, std::span<const double> x);
double mu_at(const Geometry &g, std::span<const double> x);

// Quadrature samples of S inside the ball of radius region_radius.
std::vector<SurfaceSample> sample_surface(const Geometry &g, double region_radius,
                                          int target_count);

// Quadrature samples of S inside the shell inner_radius < |x| < outer_radius, built from
// analytic parameterizations restricted exactly to the shell.
std::vector<SurfaceSample> sample_surface_shell(const Geometry &g, double inner_radius,
                                                double outer_radius, int target_count);

// Sampled check of (mu2 - mu1)(x . n1) >= 0 on S.
ConditionReport check_sign_condition(const Geometry &g, std::span<const SurfaceSample> samples);

double dot(const Point &a, const Point &b);
double norm(const Point &a);

}  // namespace rwlab

#endif  // RWLAB_GEOMETRY_HPP
