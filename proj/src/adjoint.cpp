#include "mrai/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "mrai/error.hpp"
#include "mrai/forward.hpp"
#include "mrai/inner_products.hpp"
#include "mrai/slicetime.hpp"

namespace mrai {

namespace {

// Beyond this the forward sweep products e_i * r_{i-1} are no longer safe.
constexpr double kMinorLimit = 1e300;

// Solve `lanes` independent lines at once. Position p of lane q lives at
// base + q * lane_stride + p * step. Forward sweep, boundary division, then
// backward sweep, accumulating kappa where the backward sweep finalizes w.
double solve_bundle(const double* e, double* w, int n, std::size_t step, std::size_t lanes,
                    std::size_t lane_stride, const MinorTable& t) {
  for (std::size_t q = 0; q < lanes; ++q) w[q * lane_stride] = e[q * lane_stride];
  for (int p = 1; p <= n; ++p) {
    const double rp = t.r(p - 1);
    const std::size_t cur = static_cast<std::size_t>(p) * step;
    const std::size_t prev = cur - step;
#pragma omp simd
    for (std::size_t q = 0; q < lanes; ++q) {
      const std::size_t o = q * lane_stride;
      w[o + cur] = e[o + cur] * rp + w[o + prev];
    }
  }
  double kappa = 0.0;
  const double rbar = t.r_bar(n);
  const std::size_t last = static_cast<std::size_t>(n) * step;
  for (std::size_t q = 0; q < lanes; ++q) {
    const std::size_t o = q * lane_stride + last;
    w[o] /= rbar;
    kappa += e[o] * w[o];
  }
  for (int p = n - 1; p >= 0; --p) {
    const double r_prev = t.r(p - 1);
    const double r_cur = t.r(p);
    const std::size_t cur = static_cast<std::size_t>(p) * step;
    const std::size_t next = cur + step;
#pragma omp simd reduction(+ : kappa)
    for (std::size_t q = 0; q < lanes; ++q) {
      const std::size_t o = q * lane_stride;
      w[o + cur] = (w[o + cur] + r_prev * w[o + next]) / r_cur;
      kappa += e[o + cur] * w[o + cur];
    }
  }
  return kappa;
}

std::vector<double> uniform_values(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> out(n);
  for (double& x : out) x = u(rng);
  return out;
}

}  // namespace

MinorTable::MinorTable(int max_length, double delta)
    : h_(delta * delta), a_(h_ + 1.0), b_(a_ + 1.0), max_length_(max_length) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    std::ostringstream os;
    os << "minor table: pitch must be positive and finite, got " << delta;
    throw Error(os.str());
  }
  if (max_length < 1) {
    std::ostringstream os;
    os << "minor table: axis length must be >= 1, got " << max_length;
    throw Error(os.str());
  }
  r_.resize(static_cast<std::size_t>(max_length) + 2);
  r_[0] = 1.0;
  r_[1] = a_;
  for (int i = 1; i <= max_length; ++i) {
    const double next = b_ * r(i - 1) - r(i - 2);
    if (!std::isfinite(next) || next > kMinorLimit) {
      std::ostringstream os;
      os << "minor table: r_" << i << " exceeds the floating-point range for delta = " << delta
         << " (axis length " << max_length << " too long)";
      throw Error(os.str());
    }
    r_[static_cast<std::size_t>(i) + 1] = next;
  }
}

MinorTable minor_sequence(int n, double delta) { return MinorTable(n, delta); }

MinorTable minor_table_for(const SpatialGrid& grid) {
  return MinorTable(std::max({grid.I(), grid.J(), grid.K()}), grid.delta());
}

LineSolveResult line_solve(std::span<const double> e, const MinorTable& table) {
  if (e.size() < 2 || static_cast<int>(e.size()) - 1 > table.max_length()) {
    std::ostringstream os;
    os << "line_solve: line of " << e.size() << " unknowns does not fit a table of max length "
       << table.max_length();
    throw Error(os.str());
  }
  LineSolveResult out;
  out.w.resize(e.size());
  const int n = static_cast<int>(e.size()) - 1;
  out.kappa_contrib = solve_bundle(e.data(), out.w.data(), n, 1, 1, 0, table);
  return out;
}

AdjointResult apply_T_star(const SliceTimedSeries& series, const CellField& d) {
  return apply_T_star(series, d, minor_table_for(series.grid().spatial()));
}

AdjointResult apply_T_star(const SliceTimedSeries& series, const CellField& d,
                           const MinorTable& table) {
  const GridSpec& g = series.grid();
  require_same_grid(g, d.grid(), "apply_T_star");
  if (table.max_length() < std::max({g.I(), g.J(), g.K()}) || table.h() != g.delta() * g.delta()) {
    throw Error("apply_T_star: minor table was built for a different grid");
  }
  const int I = g.I(), J = g.J(), K = g.K(), L = g.L();
  const int nx = I + 1, ny = J + 1, nz = K + 1;
  const std::size_t np = g.points();
  const std::size_t row = static_cast<std::size_t>(nx);
  const std::size_t plane = row * static_cast<std::size_t>(ny);
  const double wgt = interpolation_weight(g);

  // e[m] is the transpose of the A/B/C face-sign pattern applied to d.
  std::vector<double> e(3 * np, 0.0);
  double* e1 = e.data();
  double* e2 = e1 + np;
  double* e3 = e2 + np;
  const double* dv = d.values().data();

#pragma omp parallel
  {
    std::vector<double> rho(plane);
#pragma omp for schedule(static)
    for (int k = 0; k < nz; ++k) {
      for (int gamma = 0; gamma <= 1; ++gamma) {
        const int cz = k + gamma;
        if (cz < 1 || cz > K) continue;
        const double zsign = gamma == 1 ? 1.0 : -1.0;
        for (int l = 1; l <= L - 1; ++l) {
          const double* now = series.plane(k, l);
          if (gamma == 0) {
            std::copy(now, now + plane, rho.begin());
          } else {
            const double* next = series.plane(k, l + 1);
            for (std::size_t p = 0; p < plane; ++p) rho[p] = now[p] * (1.0 - wgt) + next[p] * wgt;
          }
          const double* dplane = dv + g.cell_index(1, 1, cz, l);
          for (int j = 0; j < ny; ++j) {
            for (int beta = 0; beta <= 1; ++beta) {
              const int cy = j + beta;
              if (cy < 1 || cy > J) continue;
              const double ysign = beta == 1 ? 1.0 : -1.0;
              const double* drow = dplane + static_cast<std::size_t>(cy - 1) * I;
              const std::size_t base = k * plane + j * row;
              const double* rrow = rho.data() + j * row;
              for (int i = 0; i < nx; ++i) {
                const double r = rrow[i];
                // alpha = 1: cell i+1; alpha = 0: cell i
                const double c1 = i + 1 <= I ? drow[i] * r : 0.0;
                const double c0 = i >= 1 ? drow[i - 1] * r : 0.0;
                e1[base + i] += c1 - c0;
                e2[base + i] += ysign * (c1 + c0);
                e3[base + i] += zsign * (c1 + c0);
              }
            }
          }
        }
      }
    }
  }

  AdjointResult result{VelocityField(g.spatial()), 0.0, 0.0};
  double* w1 = result.w.values().data();
  double* w2 = w1 + np;
  double* w3 = w2 + np;
  double kappa = 0.0;

#pragma omp parallel reduction(+ : kappa)
  {
#pragma omp for collapse(2) schedule(static) nowait
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j) {
        const std::size_t base = k * plane + j * row;
        kappa += solve_bundle(e1 + base, w1 + base, I, 1, 1, 0, table);
      }
#pragma omp for schedule(static) nowait
    for (int k = 0; k < nz; ++k) {
      const std::size_t base = k * plane;
      kappa += solve_bundle(e2 + base, w2 + base, J, row, row, 1, table);
    }
#pragma omp for schedule(static)
    for (int j = 0; j < ny; ++j) {
      const std::size_t base = j * row;
      kappa += solve_bundle(e3 + base, w3 + base, K, plane, row, 1, table);
    }
  }

  const double h = table.h();
  for (double& x : result.w.values()) x *= h;
  result.kappa = kappa;
  result.norm_sq = h * kappa;
  return result;
}

AdjointCheckSummary run_adjoint_check(int trials, std::uint64_t seed) {
  if (trials < 1) throw Error("adjoint check: trial count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ax(1, 5), ay(1, 4), az(1, 3), al(2, 6);
  std::uniform_real_distribution<double> pitch(0.5, 3.0), step(0.05, 1.0);

  AdjointCheckSummary summary;
  summary.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const int I = ax(rng), J = ay(rng), K = az(rng), L = al(rng);
    const double delta = pitch(rng), dt = step(rng);
    const GridSpec g(I, J, K, L, delta, dt);
    const SliceTimedSeries series(g, uniform_values(g.samples(), rng));
    const VelocityField v(g.spatial(), uniform_values(3 * g.points(), rng));
    const CellField d(g, uniform_values(g.cell_levels(), rng));

    const CellField tv = apply_T(series, v);
    const AdjointResult adj = apply_T_star(series, d);
    const double lhs = inner_y(tv, d);
    const double rhs = inner_x(v, adj.w);
    const double scale = norm_y(tv) * norm_y(d);
    const double defect = scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
    const double nsq = inner_x(adj.w, adj.w);
    const double kdefect = nsq > 0.0 ? std::abs(adj.norm_sq - nsq) / nsq : std::abs(adj.norm_sq);
    summary.max_adjoint_defect = std::max(summary.max_adjoint_defect, defect);
    summary.max_kappa_defect = std::max(summary.max_kappa_defect, kdefect);
  }
  return summary;
}

}  // namespace mrai
