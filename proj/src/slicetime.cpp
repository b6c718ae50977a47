#include "mrai/slicetime.hpp"

#include <sstream>

#include "mrai/error.hpp"

namespace mrai {

double acquisition_time(int k, int l, const GridSpec& grid) {
  if (k < 0 || k > grid.K() || l < 0 || l > grid.L()) {
    std::ostringstream os;
    os << "acquisition_time: index (k=" << k << ", l=" << l << ") outside 0..K=" << grid.K()
       << ", 0..L=" << grid.L();
    throw Error(os.str());
  }
  return (k + (grid.K() + 1) * static_cast<double>(l)) * grid.delta_t();
}

double rho_at_cell_time(const SliceTimedSeries& series, const LayerTimeQuery& q) {
  const GridSpec& g = series.grid();
  if (q.i < 0 || q.i > g.I() || q.j < 0 || q.j > g.J() || q.cell_k < 1 || q.cell_k > g.K() ||
      q.l < 0 || q.l > g.L()) {
    std::ostringstream os;
    os << "rho_at_cell_time: query (i=" << q.i << ", j=" << q.j << ", cell_k=" << q.cell_k
       << ", l=" << q.l << ") outside grid " << g.describe();
    throw Error(os.str());
  }
  if (q.layer == q.cell_k) return series.at(q.i, q.j, q.layer, q.l);
  if (q.layer != q.cell_k - 1) {
    std::ostringstream os;
    os << "rho_at_cell_time: layer " << q.layer << " does not bound cell layer " << q.cell_k;
    throw Error(os.str());
  }
  if (q.l >= g.L()) {
    throw Error("rho_at_cell_time: layer cell_k-1 at l = L would need extrapolation");
  }
  const double w = interpolation_weight(g);
  return series.at(q.i, q.j, q.layer, q.l) * (1.0 - w) + series.at(q.i, q.j, q.layer, q.l + 1) * w;
}

}  // namespace mrai
