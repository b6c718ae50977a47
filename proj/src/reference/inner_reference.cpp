#include "mrai/reference.hpp"

namespace mrai::reference {

double inner_y(const CellField& c, const CellField& d) {
  require_same_grid(c.grid(), d.grid(), "reference::inner_y");
  const GridSpec& g = c.grid();
  double sum = 0.0;
  for (int l = 1; l <= g.L() - 1; ++l)
    for (int k = 1; k <= g.K(); ++k)
      for (int j = 1; j <= g.J(); ++j)
        for (int i = 1; i <= g.I(); ++i) sum += c.at(i, j, k, l) * d.at(i, j, k, l);
  return sum;
}

double inner_x(const VelocityField& v, const VelocityField& w) {
  require_same_grid(v.grid(), w.grid(), "reference::inner_x");
  const SpatialGrid& g = v.grid();
  const int I = g.I(), J = g.J(), K = g.K();
  double l2 = 0.0;
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j <= J; ++j)
      for (int i = 0; i <= I; ++i)
        for (int m = 0; m < 3; ++m) l2 += v.at(m, i, j, k) * w.at(m, i, j, k);

  double dx = 0.0, dy = 0.0, dz = 0.0;
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j <= J; ++j)
      for (int i = 1; i <= I; ++i)
        dx += (v.at(0, i, j, k) - v.at(0, i - 1, j, k)) * (w.at(0, i, j, k) - w.at(0, i - 1, j, k));
  for (int k = 0; k <= K; ++k)
    for (int j = 1; j <= J; ++j)
      for (int i = 0; i <= I; ++i)
        dy += (v.at(1, i, j, k) - v.at(1, i, j - 1, k)) * (w.at(1, i, j, k) - w.at(1, i, j - 1, k));
  for (int k = 1; k <= K; ++k)
    for (int j = 0; j <= J; ++j)
      for (int i = 0; i <= I; ++i)
        dz += (v.at(2, i, j, k) - v.at(2, i, j, k - 1)) * (w.at(2, i, j, k) - w.at(2, i, j, k - 1));
  return l2 + (dx + dy + dz) / (g.delta() * g.delta());
}

}  // namespace mrai::reference
