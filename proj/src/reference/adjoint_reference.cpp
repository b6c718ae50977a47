#include <array>

#include "mrai/reference.hpp"
#include "mrai/slicetime.hpp"

namespace mrai::reference {

namespace {

using CTensor = std::array<std::vector<double>, 8>;

std::size_t slot(int alpha, int beta, int gamma) { return 4 * alpha + 2 * beta + gamma; }

}  // namespace

AdjointResult apply_T_star(const SliceTimedSeries& series, const CellField& d) {
  const GridSpec& g = series.grid();
  require_same_grid(g, d.grid(), "reference::apply_T_star");
  const int I = g.I(), J = g.J(), K = g.K(), L = g.L();
  const SpatialGrid& sg = g.spatial();
  const MinorTable t = minor_table_for(sg);

  CTensor c;
  for (auto& x : c) x.assign(sg.points(), 0.0);
  for (int alpha = 0; alpha <= 1; ++alpha)
    for (int beta = 0; beta <= 1; ++beta)
      for (int gamma = 0; gamma <= 1; ++gamma)
        for (int k = 1 - gamma; k <= K - gamma; ++k)
          for (int j = 1 - beta; j <= J - beta; ++j)
            for (int i = 1 - alpha; i <= I - alpha; ++i) {
              double sum = 0.0;
              for (int l = 1; l <= L - 1; ++l)
                sum += d.at(i + alpha, j + beta, k + gamma, l) *
                       rho_at_cell_time(series, {i, j, k, k + gamma, l});
              c[slot(alpha, beta, gamma)][sg.point_index(i, j, k)] = sum;
            }
  auto C = [&](int alpha, int beta, int gamma, int i, int j, int k) {
    return c[slot(alpha, beta, gamma)][sg.point_index(i, j, k)];
  };

  VelocityField w(sg);
  double kappa = 0.0;
  std::vector<double> e;

  e.resize(I + 1);
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j <= J; ++j) {
      for (int i = 0; i <= I; ++i) {
        e[i] = C(1, 1, 1, i, j, k) + C(1, 0, 1, i, j, k) + C(1, 1, 0, i, j, k) + C(1, 0, 0, i, j, k) -
               C(0, 1, 1, i, j, k) - C(0, 0, 1, i, j, k) - C(0, 1, 0, i, j, k) - C(0, 0, 0, i, j, k);
        w.at(0, i, j, k) = i == 0 ? e[i] : e[i] * t.r(i - 1) + w.at(0, i - 1, j, k);
      }
      w.at(0, I, j, k) /= t.r_bar(I);
      kappa += e[I] * w.at(0, I, j, k);
      for (int i = I - 1; i >= 0; --i) {
        w.at(0, i, j, k) = (w.at(0, i, j, k) + t.r(i - 1) * w.at(0, i + 1, j, k)) / t.r(i);
        kappa += e[i] * w.at(0, i, j, k);
      }
    }

  e.resize(J + 1);
  for (int k = 0; k <= K; ++k)
    for (int i = 0; i <= I; ++i) {
      for (int j = 0; j <= J; ++j) {
        e[j] = C(1, 1, 1, i, j, k) + C(0, 1, 1, i, j, k) + C(1, 1, 0, i, j, k) + C(0, 1, 0, i, j, k) -
               C(1, 0, 1, i, j, k) - C(0, 0, 1, i, j, k) - C(1, 0, 0, i, j, k) - C(0, 0, 0, i, j, k);
        w.at(1, i, j, k) = j == 0 ? e[j] : e[j] * t.r(j - 1) + w.at(1, i, j - 1, k);
      }
      w.at(1, i, J, k) /= t.r_bar(J);
      kappa += e[J] * w.at(1, i, J, k);
      for (int j = J - 1; j >= 0; --j) {
        w.at(1, i, j, k) = (w.at(1, i, j, k) + t.r(j - 1) * w.at(1, i, j + 1, k)) / t.r(j);
        kappa += e[j] * w.at(1, i, j, k);
      }
    }

  e.resize(K + 1);
  for (int j = 0; j <= J; ++j)
    for (int i = 0; i <= I; ++i) {
      for (int k = 0; k <= K; ++k) {
        e[k] = C(1, 1, 1, i, j, k) + C(1, 0, 1, i, j, k) + C(0, 1, 1, i, j, k) + C(0, 0, 1, i, j, k) -
               C(1, 1, 0, i, j, k) - C(1, 0, 0, i, j, k) - C(0, 1, 0, i, j, k) - C(0, 0, 0, i, j, k);
        w.at(2, i, j, k) = k == 0 ? e[k] : e[k] * t.r(k - 1) + w.at(2, i, j, k - 1);
      }
      w.at(2, i, j, K) /= t.r_bar(K);
      kappa += e[K] * w.at(2, i, j, K);
      for (int k = K - 1; k >= 0; --k) {
        w.at(2, i, j, k) = (w.at(2, i, j, k) + t.r(k - 1) * w.at(2, i, j, k + 1)) / t.r(k);
        kappa += e[k] * w.at(2, i, j, k);
      }
    }

  w.scale(t.h());
  return AdjointResult{std::move(w), kappa, t.h() * kappa};
}

}  // namespace mrai::reference
