#pragma once

#include "mrai/grid.hpp"

namespace mrai {

/// Euclidean inner product on the residual space.
double inner_y(const CellField& c, const CellField& d);
double norm_y(const CellField& c);

/// H1-like inner product on velocity fields: the L2 sum over all grid points
/// plus 1/delta^2 times the first differences of v1 along x, v2 along y and
/// v3 along z.
double inner_x(const VelocityField& v, const VelocityField& w);

}  // namespace mrai
