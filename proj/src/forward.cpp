#include "mrai/forward.hpp"

#include <sstream>
#include <vector>

#include "mrai/error.hpp"
#include "mrai/slicetime.hpp"

namespace mrai {

namespace {

void require_cell(const GridSpec& g, int i, int j, int k, int l, int l_min, int l_max,
                  const char* what) {
  if (i < 1 || i > g.I() || j < 1 || j > g.J() || k < 1 || k > g.K() || l < l_min || l > l_max) {
    std::ostringstream os;
    os << what << ": cell (" << i << ", " << j << ", " << k << ", " << l << ") outside grid "
       << g.describe();
    throw Error(os.str());
  }
}

// Layer k-1 of cycle l, evaluated at the acquisition time of layer k.
void interpolate_lower_plane(const SliceTimedSeries& series, int k, int l, std::vector<double>& out) {
  const GridSpec& g = series.grid();
  const std::size_t n = static_cast<std::size_t>(g.I() + 1) * (g.J() + 1);
  const double w = interpolation_weight(g);
  const double* now = series.plane(k - 1, l);
  const double* next = series.plane(k - 1, l + 1);
  out.resize(n);
  for (std::size_t p = 0; p < n; ++p) out[p] = now[p] * (1.0 - w) + next[p] * w;
}

}  // namespace

double corner_sum_D(const SliceTimedSeries& series, int i, int j, int k, int l) {
  const GridSpec& g = series.grid();
  require_cell(g, i, j, k, l, 0, g.L() - 1, "corner_sum_D");
  double sum = 0.0;
  for (int layer = k - 1; layer <= k; ++layer)
    for (int jj = j - 1; jj <= j; ++jj)
      for (int ii = i - 1; ii <= i; ++ii)
        sum += rho_at_cell_time(series, {ii, jj, layer, k, l});
  return sum;
}

FluxSums flux_sums(const SliceTimedSeries& series, const VelocityField& v, int i, int j, int k,
                   int l) {
  const GridSpec& g = series.grid();
  require_same_grid(g.spatial(), v.grid(), "flux_sums");
  require_cell(g, i, j, k, l, 1, g.L() - 1, "flux_sums");
  FluxSums f;
  for (int layer = k - 1; layer <= k; ++layer) {
    for (int jj = j - 1; jj <= j; ++jj) {
      for (int ii = i - 1; ii <= i; ++ii) {
        const double rho = rho_at_cell_time(series, {ii, jj, layer, k, l});
        f.A += (ii == i - 1 ? 1.0 : -1.0) * rho * v.at(0, ii, jj, layer);
        f.B += (jj == j - 1 ? 1.0 : -1.0) * rho * v.at(1, ii, jj, layer);
        f.C += (layer == k - 1 ? 1.0 : -1.0) * rho * v.at(2, ii, jj, layer);
      }
    }
  }
  return f;
}

CellField apply_T(const SliceTimedSeries& series, const VelocityField& v) {
  const GridSpec& g = series.grid();
  require_same_grid(g.spatial(), v.grid(), "apply_T");
  CellField out(g);

  const int I = g.I(), J = g.J(), K = g.K(), L = g.L();
  const std::size_t row = static_cast<std::size_t>(I + 1);
  const std::size_t np = g.points();
  const double* v1 = v.values().data();
  const double* v2 = v1 + np;
  const double* v3 = v2 + np;
  double* dst = out.values().data();

#pragma omp parallel
  {
    std::vector<double> lower;
#pragma omp for collapse(2) schedule(static)
    for (int l = 1; l <= L - 1; ++l) {
      for (int k = 1; k <= K; ++k) {
        interpolate_lower_plane(series, k, l, lower);
        const double* upper = series.plane(k, l);
        const std::size_t off_lo = g.point_index(0, 0, k - 1);
        const std::size_t off_up = g.point_index(0, 0, k);
        const double* u1l = v1 + off_lo;
        const double* u1u = v1 + off_up;
        const double* u2l = v2 + off_lo;
        const double* u2u = v2 + off_up;
        const double* u3l = v3 + off_lo;
        const double* u3u = v3 + off_up;
        for (int j = 1; j <= J; ++j) {
          double* out_row = dst + g.cell_index(1, j, k, l);
          const std::size_t a = static_cast<std::size_t>(j - 1) * row;  // y_{j-1} row
          const std::size_t b = a + row;                                // y_j row
#pragma omp simd
          for (int i = 1; i <= I; ++i) {
            const std::size_t p00 = a + i - 1, p10 = a + i, p01 = b + i - 1, p11 = b + i;
            // rho at corners: lower layer interpolated, upper layer on schedule
            const double r000 = lower[p00], r100 = lower[p10], r010 = lower[p01], r110 = lower[p11];
            const double r001 = upper[p00], r101 = upper[p10], r011 = upper[p01], r111 = upper[p11];

            const double A = (r000 * u1l[p00] + r010 * u1l[p01] + r001 * u1u[p00] + r011 * u1u[p01]) -
                             (r100 * u1l[p10] + r110 * u1l[p11] + r101 * u1u[p10] + r111 * u1u[p11]);
            const double B = (r000 * u2l[p00] + r100 * u2l[p10] + r001 * u2u[p00] + r101 * u2u[p10]) -
                             (r010 * u2l[p01] + r110 * u2l[p11] + r011 * u2u[p01] + r111 * u2u[p11]);
            const double C = (r000 * u3l[p00] + r100 * u3l[p10] + r010 * u3l[p01] + r110 * u3l[p11]) -
                             (r001 * u3u[p00] + r101 * u3u[p10] + r011 * u3u[p01] + r111 * u3u[p11]);
            out_row[i - 1] = A + B + C;
          }
        }
      }
    }
  }
  return out;
}

CellField assemble_rhs(const SliceTimedSeries& series) {
  const GridSpec& g = series.grid();
  CellField out(g);
  const int I = g.I(), J = g.J(), K = g.K(), L = g.L();
  const std::size_t row = static_cast<std::size_t>(I + 1);
  const double scale = g.delta() / (2.0 * g.cycle_time());
  double* dst = out.values().data();

#pragma omp parallel
  {
    std::vector<double> lower_now, lower_prev;
#pragma omp for collapse(2) schedule(static)
    for (int l = 1; l <= L - 1; ++l) {
      for (int k = 1; k <= K; ++k) {
        interpolate_lower_plane(series, k, l, lower_now);
        interpolate_lower_plane(series, k, l - 1, lower_prev);
        const double* upper_now = series.plane(k, l);
        const double* upper_prev = series.plane(k, l - 1);
        for (int j = 1; j <= J; ++j) {
          double* out_row = dst + g.cell_index(1, j, k, l);
          const std::size_t a = static_cast<std::size_t>(j - 1) * row;
          const std::size_t b = a + row;
          for (int i = 1; i <= I; ++i) {
            const std::size_t c[4] = {a + i - 1, a + i, b + i - 1, b + i};
            double d_now = 0.0, d_prev = 0.0;
            for (std::size_t p : c) {
              d_now += lower_now[p] + upper_now[p];
              d_prev += lower_prev[p] + upper_prev[p];
            }
            out_row[i - 1] = (d_now - d_prev) * scale;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace mrai
