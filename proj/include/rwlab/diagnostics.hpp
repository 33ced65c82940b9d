#ifndef RWLAB_DIAGNOSTICS_HPP
#define RWLAB_DIAGNOSTICS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rwlab/field.hpp"
#include "rwlab/geometry.hpp"
#include "rwlab/spectral.hpp"
#include "rwlab/weights.hpp"

namespace rwlab
{

// Which k enters the radiation operator: k(x, z) on the principal branch, or the real-axis
// limits +sqrt(lambda mu) and -sqrt(lambda mu).
struct RadiationVariant
{
  enum class Kind
  {
    SignedK,
    PlusLimit,
    MinusLimit
  };
  Kind kind = Kind::SignedK;
  SpectralParam z{1.0, 0.0};
  double lambda = 1.0;

  static RadiationVariant signed_k(const SpectralParam &z);
  static RadiationVariant plus_limit(double lambda);
  static RadiationVariant minus_limit(double lambda);

  cplx k(double mu) const;
};

//
// D u = grad u + ((N - 1) / (2 r)) x~ u - i k x~ u and its radial part D_r u = D u . x~.
// Nodes with |x| <= h are masked and hold zeros.
//
struct RadiationField
{
  std::vector<Field> components;
  Field radial;
  std::vector<std::uint8_t> mask;
  RadiationVariant variant;

  const Grid &grid() const { return radial.grid(); }
};

RadiationField radiation_term(const Field &u, const Geometry &g, const RadiationVariant &v);
RadiationField radiation_term(const GradField &u, const Geometry &g, const RadiationVariant &v);

// (1/R) * node sum over |x| < R of |grad u - s i sqrt(lambda mu) x~ u|^2, s = +1 or -1.
double rz_radiation_residual(const Field &u, double lambda, const Geometry &g, double R,
                             int sign);

enum class DecayMode
{
  // |d_r u|^2 + |u|^2
  Energy,
  // |D_r u|^2 with k = +sqrt(lambda mu)
  RadiationPlus,
  // |D_r u|^2 with k = -sqrt(lambda mu)
  RadiationMinus
};

struct RadiusValue
{
  double R = 0.0;
  double value = 0.0;
};

// R^alpha times the sphere integral of the mode's integrand, one row per radius.
std::vector<RadiusValue> surface_decay_probe(const Field &u, const Geometry &g, double lambda,
                                             std::span<const double> radii, double alpha,
                                             DecayMode mode);
std::vector<RadiusValue> surface_decay_probe(const GradField &u, const Geometry &g,
                                             double lambda, std::span<const double> radii,
                                             double alpha, DecayMode mode);

// Node sum over r < |x| < R of |D_r u|^2 / |x| (k = +sqrt(lambda mu)).
double radial_radiation_energy(const Field &u, const Geometry &g, double lambda, double r,
                               double R);

// Im of the sphere integral of (d_r u) conj(u), one row per radius.
std::vector<RadiusValue> flux_conservation(const Field &u, std::span<const double> radii);
std::vector<RadiusValue> flux_conservation(const GradField &u, std::span<const double> radii);

// Weighted norm of |D u| (weight (1 + |x|)^{2t}; in N = 2 the weight is |x| inside the unit
// ball), computed node by node without storing D u.
double radiation_norm(const Field &u, const Geometry &g, const RadiationVariant &v, double t);

// ||D u||_{delta-1} / ||f||_delta for N = 3, and ||D u||_{*,delta-1} / (||f||_delta +
// ||u||_{-delta}) for N = 2. Throws std::domain_error when the denominator vanishes.
double radiation_estimate_ratio(const Field &u, const Field &f, const Geometry &g,
                                const RadiationVariant &v, double delta);

// alpha in phi(x) = alpha(x) xi(|x|).
enum class AlphaChoice
{
  InverseSqrtMu,
  Unit
};

struct IdentityReport
{
  // Volume term with (Im k phi + phi'/2) |D u|^2, the interface term, the
  // (phi/r - phi')(|D u|^2 - |D_r u|^2) term and the c_N r^{-2} |u|^2 term.
  std::array<double, 4> lhs_terms{};
  // Source term, interface term, outer sphere term, inner sphere term.
  std::array<double, 4> rhs_terms{};
  // (phi_1 - phi_2) correction on S; zero when alpha is constant.
  double interface_jump = 0.0;
  double residual = 0.0;

  double lhs_sum() const;
  double rhs_sum() const;
};

struct IdentityOptions
{
  AlphaChoice alpha = AlphaChoice::InverseSqrtMu;
  // Quadrature point spacing as a fraction of h.
  double spacing_factor = 0.5;
  int surface_samples = 0;  // 0 picks a default from the dimension
};

// Evaluates both sides of the weighted radiation-energy identity on the shell r < |x| < R for
// u solving -Delta u - z mu u = mu f there, with interpolated nodal u, grad u and f.
IdentityReport identity_residual(const Field &u, const Field &f, const SpectralParam &z,
                                 const Geometry &g, const WeightProfile &profile, double r,
                                 double R, const IdentityOptions &opt = {});
IdentityReport identity_residual(const GradField &u, const Field &f, const SpectralParam &z,
                                 const Geometry &g, const WeightProfile &profile, double r,
                                 double R, const IdentityOptions &opt = {});

}  // namespace rwlab

#endif  // RWLAB_DIAGNOSTICS_HPP
