#include "mrai/inner_products.hpp"

#include <cmath>

namespace mrai {

double inner_y(const CellField& c, const CellField& d) {
  require_same_grid(c.grid(), d.grid(), "inner_y");
  const auto n = static_cast<std::ptrdiff_t>(c.size());
  const double* x = c.values().data();
  const double* y = d.values().data();
  double sum = 0.0;
#pragma omp parallel for simd reduction(+ : sum)
  for (std::ptrdiff_t q = 0; q < n; ++q) sum += x[q] * y[q];
  return sum;
}

double norm_y(const CellField& c) { return std::sqrt(inner_y(c, c)); }

double inner_x(const VelocityField& v, const VelocityField& w) {
  require_same_grid(v.grid(), w.grid(), "inner_x");
  const SpatialGrid& g = v.grid();
  const int nx = g.nx(), ny = g.ny(), nz = g.nz();
  const std::size_t np = g.points();
  const std::size_t row = static_cast<std::size_t>(nx);
  const std::size_t plane = row * static_cast<std::size_t>(ny);
  const double* v1 = v.values().data();
  const double* v2 = v1 + np;
  const double* v3 = v2 + np;
  const double* w1 = w.values().data();
  const double* w2 = w1 + np;
  const double* w3 = w2 + np;

  double l2 = 0.0;
  double diff = 0.0;
#pragma omp parallel for reduction(+ : l2, diff) schedule(static)
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      const std::size_t base = g.point_index(0, j, k);
      for (int i = 0; i < nx; ++i) {
        const std::size_t p = base + i;
        l2 += v1[p] * w1[p] + v2[p] * w2[p] + v3[p] * w3[p];
        if (i > 0) diff += (v1[p] - v1[p - 1]) * (w1[p] - w1[p - 1]);
        if (j > 0) diff += (v2[p] - v2[p - row]) * (w2[p] - w2[p - row]);
        if (k > 0) diff += (v3[p] - v3[p - plane]) * (w3[p] - w3[p - plane]);
      }
    }
  }
  return l2 + diff / (g.delta() * g.delta());
}

}  // namespace mrai
