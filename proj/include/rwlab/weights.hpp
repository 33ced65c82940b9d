#ifndef RWLAB_WEIGHTS_HPP
#define RWLAB_WEIGHTS_HPP

#include <string>
#include <variant>
#include <vector>

namespace rwlab
{

// xi(r) = r up to R0, constant R0 beyond.
struct TruncatedWeight
{
  double R0 = 1.0;
};

// xi(r) = r on [0, 1], 2^{-(2 delta - 1)} (1 + r)^{2 delta - 1} beyond.
struct PowerDeltaWeight
{
  double delta = 1.0;
};

// xi(r) = r^2 on [0, r0], r0^{2 - alpha} r^alpha beyond.
struct TwoDAlphaWeight
{
  double r0 = 1.0;
  double alpha = 0.5;
};

// xi(r) = r^2 / 2 on [0, 1/2], 2^{-2 delta} (1 + r)^{2 delta - 1} on [1, inf), joined on
// (1/2, 1) by the cubic Hermite interpolant of the end values and slopes.
struct TwoDDeltaWeight
{
  double delta = 1.0;
};

using WeightProfile =
    std::variant<TruncatedWeight, PowerDeltaWeight, TwoDAlphaWeight, TwoDDeltaWeight>;

struct WeightValue
{
  double xi = 0.0;
  double xi_prime = 0.0;
};

WeightValue eval_weight(const WeightProfile &p, double r);

// Radii where xi' may jump.
std::vector<double> weight_breakpoints(const WeightProfile &p);

std::string weight_name(const WeightProfile &p);

void validate_weight(const WeightProfile &p);

}  // namespace rwlab

#endif  // RWLAB_WEIGHTS_HPP
