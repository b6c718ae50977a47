#pragma once

#include <array>
#include <cstdint>

#include "mrai/grid.hpp"

namespace mrai {

/// Gaussian bump translated with constant velocity: rho(x, t) = baseline +
/// amplitude * exp(-|x - center - velocity t|^2 / (2 sigma^2)), an exact
/// solution of the continuity equation for constant v.
struct GaussianPhantomSpec {
  std::array<double, 3> center{0.0, 0.0, 0.0};  // mm, at t = 0
  double sigma = 1.0;                           // mm
  double amplitude = 1.0;
  double baseline = 0.0;
  std::array<double, 3> velocity{0.0, 0.0, 0.0};  // mm/s

  void validate() const;
  /// Analytic value at position x (mm) and time t (s).
  double value(const std::array<double, 3>& x, double t) const;
};

/// Samples the phantom at (i delta, j delta, k delta) and t_{k,l}.
SliceTimedSeries gaussian_advection_series(const GridSpec& grid, const GaussianPhantomSpec& spec);

/// Adds i.i.d. N(0, sigma_noise^2) perturbations; deterministic per seed.
SliceTimedSeries add_noise(const SliceTimedSeries& series, double sigma_noise, std::uint64_t seed);

/// b = T v_star, so the system has an exact solution.
CellField consistent_rhs(const SliceTimedSeries& series, const VelocityField& v_star);

}  // namespace mrai
