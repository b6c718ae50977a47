#include "mrai/synth.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "mrai/error.hpp"
#include "mrai/forward.hpp"
#include "mrai/slicetime.hpp"

namespace mrai {

void GaussianPhantomSpec::validate() const {
  auto finite3 = [](const std::array<double, 3>& a) {
    return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]);
  };
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    std::ostringstream os;
    os << "phantom: sigma must be positive and finite, got " << sigma;
    throw Error(os.str());
  }
  if (!std::isfinite(amplitude) || !std::isfinite(baseline)) {
    throw Error("phantom: amplitude and baseline must be finite");
  }
  if (!finite3(center) || !finite3(velocity)) {
    throw Error("phantom: center and velocity must be finite");
  }
}

double GaussianPhantomSpec::value(const std::array<double, 3>& x, double t) const {
  double r2 = 0.0;
  for (int m = 0; m < 3; ++m) {
    const double dx = x[m] - center[m] - velocity[m] * t;
    r2 += dx * dx;
  }
  return baseline + amplitude * std::exp(-r2 / (2.0 * sigma * sigma));
}

SliceTimedSeries gaussian_advection_series(const GridSpec& grid, const GaussianPhantomSpec& spec) {
  spec.validate();
  std::vector<double> values(grid.samples());
  const double h = grid.delta();
#pragma omp parallel for collapse(2) schedule(static)
  for (int l = 0; l <= grid.L(); ++l) {
    for (int k = 0; k <= grid.K(); ++k) {
      const double t = acquisition_time(k, l, grid);
      for (int j = 0; j <= grid.J(); ++j)
        for (int i = 0; i <= grid.I(); ++i)
          values[grid.sample_index(i, j, k, l)] = spec.value({i * h, j * h, k * h}, t);
    }
  }
  return SliceTimedSeries(grid, std::move(values));
}

SliceTimedSeries add_noise(const SliceTimedSeries& series, double sigma_noise, std::uint64_t seed) {
  if (!std::isfinite(sigma_noise) || sigma_noise < 0.0) {
    std::ostringstream os;
    os << "add_noise: noise level must be >= 0, got " << sigma_noise;
    throw Error(os.str());
  }
  std::vector<double> values(series.values().begin(), series.values().end());
  if (sigma_noise > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma_noise);
    for (double& x : values) x += noise(rng);
  }
  return SliceTimedSeries(series.grid(), std::move(values));
}

CellField consistent_rhs(const SliceTimedSeries& series, const VelocityField& v_star) {
  return apply_T(series, v_star);
}

}  // namespace mrai
