#pragma once

// Serial reference versions of the parallel kernels. They follow the textbook
// loop structure literally (per-cell flux_sums/corner_sum_D, explicit c
// tensors and one line at a time for the adjoint) and are kept to cross-check
// and benchmark the production kernels.

#include "mrai/adjoint.hpp"
#include "mrai/grid.hpp"

namespace mrai::reference {

double inner_y(const CellField& c, const CellField& d);
double inner_x(const VelocityField& v, const VelocityField& w);

CellField apply_T(const SliceTimedSeries& series, const VelocityField& v);
CellField assemble_rhs(const SliceTimedSeries& series);
AdjointResult apply_T_star(const SliceTimedSeries& series, const CellField& d);

}  // namespace mrai::reference
