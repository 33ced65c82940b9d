#ifndef RWLAB_DISCRETE_OPERATOR_HPP
#define RWLAB_DISCRETE_OPERATOR_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rwlab/field.hpp"
#include "rwlab/geometry.hpp"
#include "rwlab/grid.hpp"
#include "rwlab/spectral.hpp"

namespace rwlab
{

enum class BoundaryClosure
{
  SommerfeldFirstOrder,
  Dirichlet
};

struct CsrMatrix
{
  std::size_t rows = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col;
  std::vector<cplx> values;

  cplx at(std::size_t r, std::size_t c) const;
  std::size_t nnz() const { return values.size(); }
};

//
// The discrete shifted operator -Delta_h - z diag(mu) on a box, with closure rows on the box
// faces. Each face node carries, for every face it lies on,
//   ((u_b - u_in) / h - i k u_b) / h            (Sommerfeld)
// or u_b / h^2 (Dirichlet). Applied matrix-free; to_csr() exports the matrix with the full
// neighbour pattern (unused neighbour slots of face rows are stored zeros), so the pattern is
// symmetric.
//
class DiscreteOperator
{
public:
  DiscreteOperator(const Grid &grid, const Geometry &geometry, const SpectralParam &z,
                   BoundaryClosure closure);

  const Grid &grid() const { return grid_; }
  const Geometry &geometry() const { return geometry_; }
  const SpectralParam &z() const { return z_; }
  BoundaryClosure closure() const { return closure_; }

  // mu at node i (nodes on S take mu2).
  double mu(std::size_t i) const { return mu_[region_[i]]; }
  // 0 for nodes in Omega_1, 1 otherwise.
  std::span<const std::uint8_t> regions() const { return region_; }

  cplx diagonal(std::size_t i) const;

  // y = A x.
  void apply(std::span<const cplx> x, std::span<cplx> y) const;

  // b with mu f on interior rows and closure data on face rows (g / h^2 for Dirichlet with a
  // trace, 0 otherwise).
  std::vector<cplx> rhs(const Field &f, const Field *trace = nullptr) const;

  CsrMatrix to_csr() const;

private:
  Grid grid_;
  Geometry geometry_;
  SpectralParam z_;
  BoundaryClosure closure_;
  std::vector<std::uint8_t> region_;
  std::array<double, 2> mu_{};
  std::array<cplx, 2> zmu_{};
  // Per region: 1/h^2 - i k / h for one face.
  std::array<cplx, 2> face_diag_{};
};

}  // namespace rwlab

#endif  // RWLAB_DISCRETE_OPERATOR_HPP
