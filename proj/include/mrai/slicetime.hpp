#pragma once

#include "mrai/grid.hpp"

namespace mrai {

/// Time at which layer k of cycle l is measured under ascending slice order.
double acquisition_time(int k, int l, const GridSpec& grid);

/// Weight of the (l+1)-th sample when layer cell_k - 1 is evaluated at t_{cell_k, l}.
/// Equals delta_t / ((K + 1) delta_t).
inline double interpolation_weight(const GridSpec& grid) noexcept {
  return 1.0 / (grid.K() + 1);
}

/// Evaluate rho at grid point (i, j, layer) at the acquisition time of cell
/// layer cell_k, cycle l. Only the two layers bounding the cell are valid.
struct LayerTimeQuery {
  int i = 0;
  int j = 0;
  int layer = 0;
  int cell_k = 1;
  int l = 0;
};

double rho_at_cell_time(const SliceTimedSeries& series, const LayerTimeQuery& q);

}  // namespace mrai
