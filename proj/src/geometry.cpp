#include "rwlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rwlab
{

namespace
{

constexpr double kSurfaceTol = 1e-12;
constexpr double kConditionTol = -1e-10;

// The two (N = 3) or one (N = 2) coordinate axes orthogonal to axis.
std::array<int, 2> perpendicular_axes(int axis, int dim)
{
  std::array<int, 2> out{-1, -1};
  int k = 0;
  for (int j = 0; j < dim; ++j)
  {
    if (j != axis)
    {
      out[k++] = j;
    }
  }
  return out;
}

double perp_radius(const Point &x, int axis, int dim)
{
  double s = 0.0;
  for (int j = 0; j < dim; ++j)
  {
    if (j != axis)
    {
      s += x[j] * x[j];
    }
  }
  return std::sqrt(s);
}

struct Interval
{
  double lo, hi;
};

// Values t >= 0 with lo^2 < c^2 + t^2 < hi^2, i.e. the part of a line at distance c from
// the origin inside the shell; returned as the non-negative branch.
bool shell_interval(double c, double inner, double outer, Interval &out)
{
  const double c2 = c * c;
  if (outer * outer <= c2)
  {
    return false;
  }
  out.lo = std::sqrt(std::max(inner * inner - c2, 0.0));
  out.hi = std::sqrt(outer * outer - c2);
  return out.hi > out.lo;
}

void push(std::vector<SurfaceSample> &out, const Geometry &g, const Point &p, double w)
{
  SurfaceSample s;
  s.point = p;
  s.normal1 = g.normal1(p);
  s.area_weight = w;
  out.push_back(s);
}

// Midpoint samples of [lo, hi] and its mirror [-hi, -lo].
void two_sided_line(std::vector<SurfaceSample> &out, const Geometry &g, const Interval &iv,
                    int m, const Point &base, int along)
{
  const double dt = (iv.hi - iv.lo) / m;
  for (int side : {-1, 1})
  {
    for (int i = 0; i < m; ++i)
    {
      Point p = base;
      p[along] = side * (iv.lo + (i + 0.5) * dt);
      push(out, g, p, dt);
    }
  }
}

}  // namespace

double dot(const Point &a, const Point &b)
{
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Point &a)
{
  return std::sqrt(dot(a, a));
}

MediumPair::MediumPair(double mu1_, double mu2_) : mu1(mu1_), mu2(mu2_)
{
  if (!(mu1 > 0.0) || !(mu2 > 0.0))
  {
    throw std::invalid_argument("MediumPair: mu1 and mu2 must be positive");
  }
  if (mu1 == mu2)
  {
    throw std::invalid_argument("MediumPair: mu1 must differ from mu2");
  }
}

Geometry::Geometry(GeometryKind kind, int dimension, MediumPair media, bool complement)
  : kind_(kind), dim_(dimension), media_(media), complement_(complement)
{
  if (dim_ != 2 && dim_ != 3)
  {
    throw std::invalid_argument("Geometry: dimension must be 2 or 3");
  }
  MediumPair check(media_.mu1, media_.mu2);
  (void)check;
  std::visit(
      [&](const auto &k)
      {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cylinder>)
        {
          if (!(k.radius > 0.0))
            throw std::invalid_argument("Cylinder: radius must be positive");
          if (k.axis < 0 || k.axis >= dim_)
            throw std::invalid_argument("Cylinder: axis out of range");
        }
        else if constexpr (std::is_same_v<T, Cone>)
        {
          if (!(k.half_angle > 0.0 && k.half_angle < 0.5 * std::numbers::pi))
            throw std::invalid_argument("Cone: half angle must lie in (0, pi/2)");
          if (k.axis < 0 || k.axis >= dim_)
            throw std::invalid_argument("Cone: axis out of range");
        }
        else if constexpr (std::is_same_v<T, HalfSpace>)
        {
          if (k.index < 0 || k.index >= dim_)
            throw std::invalid_argument("HalfSpace: coordinate index out of range");
          if (!std::isfinite(k.offset))
            throw std::invalid_argument("HalfSpace: offset must be finite");
        }
        else
        {
          if (!(k.radius > 0.0))
            throw std::invalid_argument("Ball: radius must be positive");
        }
      },
      kind_);
}

Geometry Geometry::swapped() const
{
  return Geometry(kind_, dim_, MediumPair(media_.mu2, media_.mu1), !complement_);
}

double Geometry::raw_distance(const Point &x) const
{
  return std::visit(
      [&](const auto &k) -> double
      {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cylinder>)
        {
          return perp_radius(x, k.axis, dim_) - k.radius;
        }
        else if constexpr (std::is_same_v<T, Cone>)
        {
          const double rho = perp_radius(x, k.axis, dim_);
          return rho * std::cos(k.half_angle) - x[k.axis] * std::sin(k.half_angle);
        }
        else if constexpr (std::is_same_v<T, HalfSpace>)
        {
          return x[k.index] - k.offset;
        }
        else
        {
          double s = 0.0;
          for (int j = 0; j < dim_; ++j)
            s += x[j] * x[j];
          return std::sqrt(s) - k.radius;
        }
      },
      kind_);
}

Point Geometry::raw_normal(const Point &x) const
{
  return std::visit(
      [&](const auto &k) -> Point
      {
        using T = std::decay_t<decltype(k)>;
        Point n{0.0, 0.0, 0.0};
        if constexpr (std::is_same_v<T, Cylinder> || std::is_same_v<T, Cone>)
        {
          const double rho = perp_radius(x, k.axis, dim_);
          const auto perp = perpendicular_axes(k.axis, dim_);
          if (rho > 0.0)
          {
            for (int j : perp)
              if (j >= 0)
                n[j] = x[j] / rho;
          }
          else
          {
            n[perp[0]] = 1.0;
          }
          if constexpr (std::is_same_v<T, Cone>)
          {
            const double c = std::cos(k.half_angle), s = std::sin(k.half_angle);
            for (auto &v : n)
              v *= c;
            n[k.axis] = -s;
          }
        }
        else if constexpr (std::is_same_v<T, HalfSpace>)
        {
          n[k.index] = 1.0;
        }
        else
        {
          double r = 0.0;
          for (int j = 0; j < dim_; ++j)
            r += x[j] * x[j];
          r = std::sqrt(r);
          if (r > 0.0)
          {
            for (int j = 0; j < dim_; ++j)
              n[j] = x[j] / r;
          }
          else
          {
            n[0] = 1.0;
          }
        }
        return n;
      },
      kind_);
}

double Geometry::signed_distance(const Point &x) const
{
  const double d = raw_distance(x);
  return complement_ ? -d : d;
}

Point Geometry::normal1(const Point &x) const
{
  Point n = raw_normal(x);
  if (complement_)
  {
    for (auto &v : n)
      v = -v;
  }
  return n;
}

Region Geometry::classify(const Point &x) const
{
  const double d = signed_distance(x);
  if (std::abs(d) <= kSurfaceTol)
  {
    return Region::Surface;
  }
  return d < 0.0 ? Region::Omega1 : Region::Omega2;
}

double Geometry::mu(const Point &x) const
{
  return classify(x) == Region::Omega1 ? media_.mu1 : media_.mu2;
}

std::string Geometry::describe() const
{
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto &k)
      {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cylinder>)
          os << "cylinder(radius=" << k.radius << ",axis=" << k.axis + 1 << ")";
        else if constexpr (std::is_same_v<T, Cone>)
          os << "cone(half_angle=" << k.half_angle << ",axis=" << k.axis + 1 << ")";
        else if constexpr (std::is_same_v<T, HalfSpace>)
          os << "halfspace(index=" << k.index + 1 << ",offset=" << k.offset << ")";
        else
          os << "ball(radius=" << k.radius << ")";
      },
      kind_);
  os << (complement_ ? " complement" : "") << " N=" << dim_ << " mu1=" << media_.mu1
     << " mu2=" << media_.mu2;
  return os.str();
}

namespace
{

Point to_point(const Geometry &g, std::span<const double> x)
{
  if (static_cast<int>(x.size()) != g.dimension())
  {
    throw std::invalid_argument("coordinate dimension does not match geometry dimension");
  }
  Point p{0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < x.size(); ++j)
  {
    if (!std::isfinite(x[j]))
      throw std::invalid_argument("coordinate is not finite");
    p[j] = x[j];
  }
  return p;
}

}  // namespace

Region classify_point(const Geometry &g, std::span<const double> x)
{
  return g.classify(to_point(g, x));
}

double mu_at(const Geometry &g, std::span<const double> x)
{
  return g.mu(to_point(g, x));
}

std::vector<SurfaceSample> sample_surface(const Geometry &g, double region_radius,
                                          int target_count)
{
  return sample_surface_shell(g, 0.0, region_radius, target_count);
}

std::vector<SurfaceSample> sample_surface_shell(const Geometry &g, double inner_radius,
                                                double outer_radius, int target_count)
{
  if (!(outer_radius > 0.0) || inner_radius < 0.0 || !(inner_radius < outer_radius))
  {
    throw std::invalid_argument("sample_surface: need 0 <= inner < outer radius");
  }
  if (target_count < 8)
  {
    throw std::invalid_argument("sample_surface: target_count must be >= 8");
  }
  const int dim = g.dimension();
  const double pi = std::numbers::pi;
  std::vector<SurfaceSample> out;
  out.reserve(static_cast<std::size_t>(target_count) + 64);

  std::visit(
      [&](const auto &k)
      {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cylinder>)
        {
          Interval iv;
          if (!shell_interval(k.radius, inner_radius, outer_radius, iv))
            return;
          const auto perp = perpendicular_axes(k.axis, dim);
          const double len = iv.hi - iv.lo;
          if (dim == 2)
          {
            const int m = std::max(2, target_count / 4);
            for (int side : {-1, 1})
            {
              Point base{0.0, 0.0, 0.0};
              base[perp[0]] = side * k.radius;
              two_sided_line(out, g, iv, m, base, k.axis);
            }
            return;
          }
          const double circ = 2.0 * pi * k.radius;
          const int m_phi = std::max(
              8, static_cast<int>(std::lround(std::sqrt(0.5 * target_count * circ / len))));
          const int m_t = std::max(1, target_count / (2 * m_phi));
          const double dt = len / m_t, dphi = 2.0 * pi / m_phi;
          for (int side : {-1, 1})
          {
            for (int i = 0; i < m_t; ++i)
            {
              const double t = side * (iv.lo + (i + 0.5) * dt);
              for (int j = 0; j < m_phi; ++j)
              {
                const double phi = (j + 0.5) * dphi;
                Point p{0.0, 0.0, 0.0};
                p[k.axis] = t;
                p[perp[0]] = k.radius * std::cos(phi);
                p[perp[1]] = k.radius * std::sin(phi);
                push(out, g, p, k.radius * dphi * dt);
              }
            }
          }
        }
        else if constexpr (std::is_same_v<T, Cone>)
        {
          const auto perp = perpendicular_axes(k.axis, dim);
          const double c = std::cos(k.half_angle), s = std::sin(k.half_angle);
          const double len = outer_radius - inner_radius;
          if (dim == 2)
          {
            const int m = std::max(2, target_count / 2);
            const double ds = len / m;
            for (int side : {-1, 1})
            {
              for (int i = 0; i < m; ++i)
              {
                const double r = inner_radius + (i + 0.5) * ds;
                Point p{0.0, 0.0, 0.0};
                p[k.axis] = r * c;
                p[perp[0]] = side * r * s;
                push(out, g, p, ds);
              }
            }
            return;
          }
          const double circ = 2.0 * pi * s * 0.5 * (inner_radius + outer_radius);
          const int m_phi = std::max(
              8, static_cast<int>(std::lround(std::sqrt(target_count * circ / len))));
          const int m_s = std::max(1, target_count / m_phi);
          const double ds = len / m_s, dphi = 2.0 * pi / m_phi;
          for (int i = 0; i < m_s; ++i)
          {
            const double r = inner_radius + (i + 0.5) * ds;
            for (int j = 0; j < m_phi; ++j)
            {
              const double phi = (j + 0.5) * dphi;
              Point p{0.0, 0.0, 0.0};
              p[k.axis] = r * c;
              p[perp[0]] = r * s * std::cos(phi);
              p[perp[1]] = r * s * std::sin(phi);
              push(out, g, p, r * s * ds * dphi);
            }
          }
        }
        else if constexpr (std::is_same_v<T, HalfSpace>)
        {
          Interval iv;
          if (!shell_interval(k.offset, inner_radius, outer_radius, iv))
            return;
          const auto perp = perpendicular_axes(k.index, dim);
          if (dim == 2)
          {
            Point base{0.0, 0.0, 0.0};
            base[k.index] = k.offset;
            two_sided_line(out, g, iv, std::max(2, target_count / 2), base, perp[0]);
            return;
          }
          const double len = iv.hi - iv.lo;
          const double circ = pi * (iv.lo + iv.hi);
          const int m_phi = std::max(
              8, static_cast<int>(std::lround(std::sqrt(target_count * circ / len))));
          const int m_rho = std::max(1, target_count / m_phi);
          const double drho = len / m_rho, dphi = 2.0 * pi / m_phi;
          for (int i = 0; i < m_rho; ++i)
          {
            const double rho = iv.lo + (i + 0.5) * drho;
            for (int j = 0; j < m_phi; ++j)
            {
              const double phi = (j + 0.5) * dphi;
              Point p{0.0, 0.0, 0.0};
              p[k.index] = k.offset;
              p[perp[0]] = rho * std::cos(phi);
              p[perp[1]] = rho * std::sin(phi);
              push(out, g, p, rho * drho * dphi);
            }
          }
        }
        else
        {
          if (!(inner_radius < k.radius && k.radius < outer_radius))
            return;
          const double r = k.radius;
          if (dim == 2)
          {
            const int m = target_count;
            const double dphi = 2.0 * pi / m;
            for (int j = 0; j < m; ++j)
            {
              const double phi = (j + 0.5) * dphi;
              push(out, g, Point{r * std::cos(phi), r * std::sin(phi), 0.0}, r * dphi);
            }
            return;
          }
          const int m_theta =
              std::max(4, static_cast<int>(std::lround(std::sqrt(0.5 * target_count))));
          const int m_phi = 2 * m_theta;
          const double dth = pi / m_theta, dphi = 2.0 * pi / m_phi;
          for (int i = 0; i < m_theta; ++i)
          {
            const double th = (i + 0.5) * dth;
            for (int j = 0; j < m_phi; ++j)
            {
              const double phi = (j + 0.5) * dphi;
              const Point p{r * std::sin(th) * std::cos(phi), r * std::sin(th) * std::sin(phi),
                            r * std::cos(th)};
              push(out, g, p, r * r * std::sin(th) * dth * dphi);
            }
          }
        }
      },
      g.kind());
  return out;
}

ConditionReport check_sign_condition(const Geometry &g, std::span<const SurfaceSample> samples)
{
  ConditionReport rep;
  if (samples.empty())
  {
    throw std::invalid_argument("sign condition check needs at least one surface sample");
  }
  const double dmu = g.media().mu2 - g.media().mu1;
  rep.min_product = std::numeric_limits<double>::infinity();
  for (const auto &s : samples)
  {
    const double prod = dmu * dot(s.point, s.normal1);
    if (prod < rep.min_product)
    {
      rep.min_product = prod;
      rep.worst_point = s.point;
    }
  }
  rep.pass = rep.min_product >= kConditionTol;
  return rep;
}

}  // namespace rwlab
