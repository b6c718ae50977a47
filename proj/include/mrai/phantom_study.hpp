#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mrai/cgne.hpp"
#include "mrai/grid.hpp"
#include "mrai/synth.hpp"

namespace mrai {

/// A moving Gaussian on a box of fixed physical size. The bump width and
/// velocity are given in units of a reference pitch so that grids of
/// different resolution see the same continuous phantom.
struct PhantomCase {
  GridSpec grid;
  GaussianPhantomSpec phantom;
};

struct PhantomCaseParams {
  int I = 24, J = 24, K = 12, L = 8;
  double delta = 1.4;              // mm
  double cycle_time = 2.0;         // (K+1) dt, s
  double reference_delta = 1.4;    // pitch that sigma_voxels and velocity_voxels refer to
  double sigma_voxels = 3.0;
  std::array<double, 3> velocity_voxels{0.8, 0.5, -0.4};  // reference voxels per volume
  double amplitude = 1.0;
  double baseline = 0.5;
};

/// Bump centred in the box halfway through the acquisition.
PhantomCase make_phantom_case(const PhantomCaseParams& p);

/// Grid points where max_l |grad rho(x, t_{k,l})| exceeds fraction times the
/// global maximum, using the analytic gradient.
std::vector<std::size_t> strong_gradient_points(const PhantomCase& c, double fraction);

/// Mean of v(x).u / (|v(x)| |u|) over the given points; zero vectors count 0.
double mean_direction_cosine(const VelocityField& v, const std::array<double, 3>& u,
                             const std::vector<std::size_t>& points);

struct RecoveryResult {
  double mean_cosine = 0.0;
  std::size_t region_points = 0;
  int iterations = 0;
  double seconds = 0.0;
  double relative_residual = 0.0;
};

/// Synthesises the series, runs CGNE on b = assemble_rhs and scores it.
RecoveryResult run_phantom_recovery(const PhantomCase& c, int itmax, double fraction = 0.1);

}  // namespace mrai
