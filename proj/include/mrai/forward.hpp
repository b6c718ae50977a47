#pragma once

#include "mrai/grid.hpp"

namespace mrai {

/// Sum of the eight corner values of rho over cell (i, j, k) at t_{k,l}.
/// Cell indices are one-based; 0 <= l <= L - 1.
double corner_sum_D(const SliceTimedSeries& series, int i, int j, int k, int l);

/// Face flux sums of cell (i, j, k) at t_{k,l}: upstream face minus
/// downstream face of rho * v_m along each axis.
struct FluxSums {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

FluxSums flux_sums(const SliceTimedSeries& series, const VelocityField& v, int i, int j, int k,
                   int l);

/// Matrix-free (Tv)_{i,j,k,l} = A + B + C for every cell and level 1..L-1.
CellField apply_T(const SliceTimedSeries& series, const VelocityField& v);

/// Right-hand side b = (D(t_{k,l}) - D(t_{k,l-1})) * delta / (2 (K+1) delta_t).
CellField assemble_rhs(const SliceTimedSeries& series);

}  // namespace mrai
