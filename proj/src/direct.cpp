#include "rwlab/direct.hpp"

#include <Eigen/OrderingMethods>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <stdexcept>

namespace rwlab
{

struct DirectFactor::Impl
{
  using Matrix = Eigen::SparseMatrix<cplx, Eigen::ColMajor, int>;
  Eigen::SparseLU<Matrix, Eigen::COLAMDOrdering<int>> lu;
};

DirectFactor::DirectFactor(const CsrMatrix &m) : impl_(std::make_unique<Impl>()), n_(m.rows)
{
  using RowMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor, int>;
  RowMatrix rows(static_cast<int>(m.rows), static_cast<int>(m.rows));
  rows.reserve(Eigen::VectorXi::Constant(static_cast<int>(m.rows), 7));
  for (std::size_t r = 0; r < m.rows; ++r)
  {
    for (std::size_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k)
    {
      if (m.values[k] != cplx(0.0))
      {
        rows.insert(static_cast<int>(r), static_cast<int>(m.col[k])) = m.values[k];
      }
    }
  }
  Impl::Matrix a = rows;
  a.makeCompressed();
  impl_->lu.analyzePattern(a);
  impl_->lu.factorize(a);
  if (impl_->lu.info() != Eigen::Success)
  {
    throw std::runtime_error("direct factorization failed: " + impl_->lu.lastErrorMessage());
  }
}

DirectFactor::~DirectFactor() = default;
DirectFactor::DirectFactor(DirectFactor &&) noexcept = default;
DirectFactor &DirectFactor::operator=(DirectFactor &&) noexcept = default;

void DirectFactor::solve(std::span<const cplx> b, std::span<cplx> x) const
{
  if (b.size() != n_ || x.size() != n_)
  {
    throw std::invalid_argument("DirectFactor::solve: size mismatch");
  }
  Eigen::Map<const Eigen::VectorXcd> bv(b.data(), static_cast<Eigen::Index>(n_));
  Eigen::Map<Eigen::VectorXcd> xv(x.data(), static_cast<Eigen::Index>(n_));
  xv = impl_->lu.solve(bv);
  if (impl_->lu.info() != Eigen::Success)
  {
    throw std::runtime_error("direct solve failed");
  }
}

}  // namespace rwlab
