#ifndef RWLAB_DIRECT_HPP
#define RWLAB_DIRECT_HPP

#include <memory>
#include <span>

#include "rwlab/discrete_operator.hpp"

namespace rwlab
{

//
// Sparse LU factorization of a CSR matrix (fill-reducing column ordering).
//
class DirectFactor
{
public:
  explicit DirectFactor(const CsrMatrix &m);
  ~DirectFactor();
  DirectFactor(DirectFactor &&) noexcept;
  DirectFactor &operator=(DirectFactor &&) noexcept;

  void solve(std::span<const cplx> b, std::span<cplx> x) const;
  std::size_t size() const { return n_; }

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t n_ = 0;
};

}  // namespace rwlab

#endif  // RWLAB_DIRECT_HPP
