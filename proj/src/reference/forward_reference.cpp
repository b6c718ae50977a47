#include "mrai/forward.hpp"
#include "mrai/reference.hpp"

namespace mrai::reference {

CellField apply_T(const SliceTimedSeries& series, const VelocityField& v) {
  const GridSpec& g = series.grid();
  require_same_grid(g.spatial(), v.grid(), "reference::apply_T");
  CellField out(g);
  for (int l = 1; l <= g.L() - 1; ++l)
    for (int k = 1; k <= g.K(); ++k)
      for (int j = 1; j <= g.J(); ++j)
        for (int i = 1; i <= g.I(); ++i) {
          const FluxSums f = flux_sums(series, v, i, j, k, l);
          out.at(i, j, k, l) = f.A + f.B + f.C;
        }
  return out;
}

CellField assemble_rhs(const SliceTimedSeries& series) {
  const GridSpec& g = series.grid();
  CellField out(g);
  const double scale = g.delta() / (2.0 * (g.K() + 1) * g.delta_t());
  for (int l = 1; l <= g.L() - 1; ++l)
    for (int k = 1; k <= g.K(); ++k)
      for (int j = 1; j <= g.J(); ++j)
        for (int i = 1; i <= g.I(); ++i)
          out.at(i, j, k, l) =
              (corner_sum_D(series, i, j, k, l) - corner_sum_D(series, i, j, k, l - 1)) * scale;
  return out;
}

}  // namespace mrai::reference
