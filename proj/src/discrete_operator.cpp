#include "rwlab/discrete_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwlab
{

cplx CsrMatrix::at(std::size_t r, std::size_t c) const
{
  const auto first = col.begin() + static_cast<std::ptrdiff_t>(row_ptr[r]);
  const auto last = col.begin() + static_cast<std::ptrdiff_t>(row_ptr[r + 1]);
  const auto it = std::lower_bound(first, last, c);
  if (it == last || *it != c)
  {
    return 0.0;
  }
  return values[static_cast<std::size_t>(it - col.begin())];
}

DiscreteOperator::DiscreteOperator(const Grid &grid, const Geometry &geometry,
                                   const SpectralParam &z, BoundaryClosure closure)
  : grid_(grid), geometry_(geometry), z_(z), closure_(closure)
{
  if (geometry.dimension() != grid.dim())
  {
    throw std::invalid_argument("DiscreteOperator: geometry and grid dimensions differ");
  }
  if (closure == BoundaryClosure::SommerfeldFirstOrder && z.lambda == 0.0 && z.eta == 0.0)
  {
    throw std::invalid_argument("DiscreteOperator: Sommerfeld closure needs z != 0");
  }
  region_.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    region_[i] = geometry.classify(grid.position(i)) == Region::Omega1 ? 0 : 1;
  }
  mu_ = {geometry.media().mu1, geometry.media().mu2};
  const double h = grid.spacing();
  for (int r = 0; r < 2; ++r)
  {
    zmu_[r] = z.z() * mu_[r];
    if (closure == BoundaryClosure::SommerfeldFirstOrder)
    {
      face_diag_[r] = (1.0 / h - cplx(0.0, 1.0) * k_at(z, mu_[r])) / h;
    }
    else
    {
      face_diag_[r] = 1.0 / (h * h);
    }
  }
}

namespace
{

int face_count(const Grid &g, const Index &idx)
{
  int m = 0;
  for (int d = 0; d < g.dim(); ++d)
  {
    if (idx[d] == 0 || idx[d] == g.points() - 1)
      ++m;
  }
  return m;
}

}  // namespace

cplx DiscreteOperator::diagonal(std::size_t i) const
{
  const Index idx = grid_.unravel(i);
  const int m = face_count(grid_, idx);
  if (m == 0)
  {
    const double h = grid_.spacing();
    return 2.0 * grid_.dim() / (h * h) - zmu_[region_[i]];
  }
  if (closure_ == BoundaryClosure::Dirichlet)
  {
    return face_diag_[region_[i]];
  }
  return static_cast<double>(m) * face_diag_[region_[i]];
}

void DiscreteOperator::apply(std::span<const cplx> x, std::span<cplx> y) const
{
  if (x.size() != grid_.size() || y.size() != grid_.size())
  {
    throw std::invalid_argument("DiscreteOperator::apply: size mismatch");
  }
  const int N = grid_.dim();
  const std::size_t n = static_cast<std::size_t>(grid_.points());
  const double h = grid_.spacing();
  const double ih2 = 1.0 / (h * h);
  const double center = 2.0 * N * ih2;
  const bool dirichlet = closure_ == BoundaryClosure::Dirichlet;

  auto face_row = [&](std::size_t i, const Index &idx)
  {
    const cplx diag = face_diag_[region_[i]];
    if (dirichlet)
    {
      y[i] = diag * x[i];
      return;
    }
    cplx acc = 0.0;
    for (int d = 0; d < N; ++d)
    {
      if (idx[d] == 0)
        acc += diag * x[i] - ih2 * x[i + grid_.stride(d)];
      else if (idx[d] == static_cast<int>(n) - 1)
        acc += diag * x[i] - ih2 * x[i - grid_.stride(d)];
    }
    y[i] = acc;
  };

  const std::size_t outer_count = grid_.size() / n;
  const std::size_t s0 = grid_.stride(0);
  const std::size_t s1 = N == 3 ? grid_.stride(1) : 0;
  for (std::size_t outer = 0; outer < outer_count; ++outer)
  {
    Index idx{0, 0, 0};
    bool outer_face = false;
    if (N == 3)
    {
      idx[0] = static_cast<int>(outer / n);
      idx[1] = static_cast<int>(outer % n);
      outer_face = idx[0] == 0 || idx[0] == static_cast<int>(n) - 1 || idx[1] == 0 ||
                   idx[1] == static_cast<int>(n) - 1;
    }
    else
    {
      idx[0] = static_cast<int>(outer);
      outer_face = idx[0] == 0 || idx[0] == static_cast<int>(n) - 1;
    }
    const std::size_t base = outer * n;
    if (outer_face)
    {
      for (std::size_t j = 0; j < n; ++j)
      {
        idx[N - 1] = static_cast<int>(j);
        face_row(base + j, idx);
      }
      continue;
    }
    idx[N - 1] = 0;
    face_row(base, idx);
    idx[N - 1] = static_cast<int>(n) - 1;
    face_row(base + n - 1, idx);
    for (std::size_t j = 1; j + 1 < n; ++j)
    {
      const std::size_t i = base + j;
      cplx nb = x[i - 1] + x[i + 1] + x[i - s0] + x[i + s0];
      if (N == 3)
        nb += x[i - s1] + x[i + s1];
      y[i] = center * x[i] - ih2 * nb - zmu_[region_[i]] * x[i];
    }
  }
}

std::vector<cplx> DiscreteOperator::rhs(const Field &f, const Field *trace) const
{
  if (f.grid() != grid_ || (trace != nullptr && trace->grid() != grid_))
  {
    throw std::invalid_argument("DiscreteOperator::rhs: grid mismatch");
  }
  if (trace != nullptr && closure_ != BoundaryClosure::Dirichlet)
  {
    throw std::invalid_argument("DiscreteOperator::rhs: traces need the Dirichlet closure");
  }
  const double h = grid_.spacing();
  std::vector<cplx> b(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i)
  {
    if (grid_.on_boundary(grid_.unravel(i)))
      b[i] = trace != nullptr ? (*trace)[i] / (h * h) : cplx(0.0);
    else
      b[i] = mu(i) * f[i];
  }
  return b;
}

CsrMatrix DiscreteOperator::to_csr() const
{
  const int N = grid_.dim();
  const int n = grid_.points();
  const double h = grid_.spacing();
  const double ih2 = 1.0 / (h * h);
  CsrMatrix m;
  m.rows = grid_.size();
  m.row_ptr.reserve(m.rows + 1);
  m.col.reserve(m.rows * (2 * N + 1));
  m.values.reserve(m.rows * (2 * N + 1));
  m.row_ptr.push_back(0);
  for (std::size_t i = 0; i < m.rows; ++i)
  {
    const Index idx = grid_.unravel(i);
    const bool face = grid_.on_boundary(idx);
    auto neighbour_value = [&](int d, bool lower) -> cplx
    {
      if (!face)
        return -ih2;
      if (closure_ == BoundaryClosure::Dirichlet)
        return 0.0;
      // Inward neighbour of a face this node lies on.
      if (lower && idx[d] == n - 1)
        return -ih2;
      if (!lower && idx[d] == 0)
        return -ih2;
      return 0.0;
    };
    for (int d = 0; d < N; ++d)
    {
      if (idx[d] > 0)
      {
        m.col.push_back(i - grid_.stride(d));
        m.values.push_back(neighbour_value(d, true));
      }
    }
    m.col.push_back(i);
    m.values.push_back(diagonal(i));
    for (int d = N - 1; d >= 0; --d)
    {
      if (idx[d] < n - 1)
      {
        m.col.push_back(i + grid_.stride(d));
        m.values.push_back(neighbour_value(d, false));
      }
    }
    m.row_ptr.push_back(m.col.size());
  }
  return m;
}

}  // namespace rwlab
