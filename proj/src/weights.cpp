#include "rwlab/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rwlab
{

namespace
{

void check_delta(double delta)
{
  if (!(delta > 0.5 && delta <= 1.0))
  {
    throw std::invalid_argument("weight profile: delta must lie in (1/2, 1]");
  }
}

// Cubic Hermite on [a, b] with end values ya, yb and slopes da, db.
WeightValue hermite(double a, double b, double ya, double yb, double da, double db, double r)
{
  const double h = b - a;
  const double t = (r - a) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  const double d00 = 6 * t2 - 6 * t, d10 = 3 * t2 - 4 * t + 1;
  const double d01 = -6 * t2 + 6 * t, d11 = 3 * t2 - 2 * t;
  WeightValue w;
  w.xi = h00 * ya + h10 * h * da + h01 * yb + h11 * h * db;
  w.xi_prime = (d00 * ya + d01 * yb) / h + d10 * da + d11 * db;
  return w;
}

}  // namespace

void validate_weight(const WeightProfile &p)
{
  std::visit(
      [](const auto &w)
      {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, TruncatedWeight>)
        {
          if (!(w.R0 > 0.0))
            throw std::invalid_argument("truncated weight: R0 must be positive");
        }
        else if constexpr (std::is_same_v<T, TwoDAlphaWeight>)
        {
          if (!(w.r0 > 0.0))
            throw std::invalid_argument("two-dimensional weight: r0 must be positive");
          if (!(w.alpha > 0.0))
            throw std::invalid_argument("two-dimensional weight: alpha must be positive");
        }
        else
        {
          check_delta(w.delta);
        }
      },
      p);
}

WeightValue eval_weight(const WeightProfile &p, double r)
{
  if (r < 0.0)
  {
    throw std::invalid_argument("eval_weight: r must be non-negative");
  }
  return std::visit(
      [r](const auto &w) -> WeightValue
      {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, TruncatedWeight>)
        {
          return r <= w.R0 ? WeightValue{r, 1.0} : WeightValue{w.R0, 0.0};
        }
        else if constexpr (std::is_same_v<T, PowerDeltaWeight>)
        {
          if (r <= 1.0)
            return {r, 1.0};
          const double e = 2.0 * w.delta - 1.0;
          const double c = std::pow(2.0, -e);
          return {c * std::pow(1.0 + r, e), c * e * std::pow(1.0 + r, e - 1.0)};
        }
        else if constexpr (std::is_same_v<T, TwoDAlphaWeight>)
        {
          if (r <= w.r0)
            return {r * r, 2.0 * r};
          const double c = std::pow(w.r0, 2.0 - w.alpha);
          return {c * std::pow(r, w.alpha), c * w.alpha * std::pow(r, w.alpha - 1.0)};
        }
        else
        {
          const double e = 2.0 * w.delta - 1.0;
          const double c = std::pow(2.0, -2.0 * w.delta);
          if (r <= 0.5)
            return {0.5 * r * r, r};
          if (r >= 1.0)
            return {c * std::pow(1.0 + r, e), c * e * std::pow(1.0 + r, e - 1.0)};
          const double y1 = c * std::pow(2.0, e);
          const double d1 = c * e * std::pow(2.0, e - 1.0);
          return hermite(0.5, 1.0, 0.125, y1, 0.5, d1, r);
        }
      },
      p);
}

std::vector<double> weight_breakpoints(const WeightProfile &p)
{
  return std::visit(
      [](const auto &w) -> std::vector<double>
      {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, TruncatedWeight>)
          return {w.R0};
        else if constexpr (std::is_same_v<T, PowerDeltaWeight>)
          return {1.0};
        else if constexpr (std::is_same_v<T, TwoDAlphaWeight>)
          return {w.r0};
        else
          return {0.5, 1.0};
      },
      p);
}

std::string weight_name(const WeightProfile &p)
{
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto &w)
      {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, TruncatedWeight>)
          os << "truncated(R0=" << w.R0 << ")";
        else if constexpr (std::is_same_v<T, PowerDeltaWeight>)
          os << "power_delta(delta=" << w.delta << ")";
        else if constexpr (std::is_same_v<T, TwoDAlphaWeight>)
          os << "two_d_alpha(r0=" << w.r0 << ",alpha=" << w.alpha << ")";
        else
          os << "two_d_delta(delta=" << w.delta << ")";
      },
      p);
  return os.str();
}

}  // namespace rwlab
