#ifndef RWLAB_STENCIL_HPP
#define RWLAB_STENCIL_HPP

#include <span>

#include "rwlab/grid.hpp"
#include "rwlab/spectral.hpp"

namespace rwlab::stencil
{

// First derivative along axis at node idx: central inside, one-sided second order on faces.
cplx d1(const Grid &g, std::span<const cplx> v, const Index &idx, int axis);

// Second derivative along axis; one-sided four-point formula on faces (needs n >= 4).
cplx d2(const Grid &g, std::span<const cplx> v, const Index &idx, int axis);

// Mixed derivative d_a d_b, a != b, as the composition of the first-derivative stencils.
cplx d11(const Grid &g, std::span<const cplx> v, const Index &idx, int a, int b);

}  // namespace rwlab::stencil

#endif  // RWLAB_STENCIL_HPP
