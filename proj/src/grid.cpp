#include "mrai/grid.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "mrai/error.hpp"

namespace mrai {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (!std::isfinite(values[n])) {
      std::ostringstream os;
      os << what << ": non-finite value at flat index " << n;
      throw Error(os.str());
    }
  }
}

void require_size(std::size_t actual, std::size_t expected, const char* what) {
  if (actual != expected) {
    std::ostringstream os;
    os << what << ": expected " << expected << " values, got " << actual;
    throw Error(os.str());
  }
}

}  // namespace

SpatialGrid::SpatialGrid(int I, int J, int K, double delta) : I_(I), J_(J), K_(K), delta_(delta) {
  if (I < 1 || J < 1 || K < 1) {
    std::ostringstream os;
    os << "grid: cell counts must be >= 1, got I=" << I << " J=" << J << " K=" << K;
    throw Error(os.str());
  }
  if (!std::isfinite(delta) || delta <= 0.0) {
    std::ostringstream os;
    os << "grid: voxel pitch must be positive and finite, got " << delta;
    throw Error(os.str());
  }
}

std::string SpatialGrid::describe() const {
  std::ostringstream os;
  os << "(I=" << I_ << ", J=" << J_ << ", K=" << K_ << ", delta=" << delta_ << ")";
  return os.str();
}

GridSpec::GridSpec(int I, int J, int K, int L, double delta, double delta_t)
    : spatial_(I, J, K, delta), L_(L), delta_t_(delta_t) {
  if (L < 2) {
    std::ostringstream os;
    os << "grid: time-cycle count L must be >= 2, got " << L;
    throw Error(os.str());
  }
  if (!std::isfinite(delta_t) || delta_t <= 0.0) {
    std::ostringstream os;
    os << "grid: time step must be positive and finite, got " << delta_t;
    throw Error(os.str());
  }
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  os << "(I=" << I() << ", J=" << J() << ", K=" << K() << ", L=" << L_ << ", delta=" << delta()
     << ", delta_t=" << delta_t_ << ")";
  return os.str();
}

SliceTimedSeries::SliceTimedSeries(GridSpec grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  require_size(values_.size(), grid_.samples(), "series");
  require_finite(values_, "series");
}

VelocityField::VelocityField(SpatialGrid grid) : grid_(grid), values_(3 * grid.points(), 0.0) {}

VelocityField::VelocityField(SpatialGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  require_size(values_.size(), 3 * grid_.points(), "velocity field");
  require_finite(values_, "velocity field");
}

void VelocityField::add_scaled(double alpha, const VelocityField& other) {
  require_same_grid(grid_, other.grid_, "velocity add_scaled");
  const auto n = static_cast<std::ptrdiff_t>(values_.size());
  double* dst = values_.data();
  const double* src = other.values_.data();
#pragma omp parallel for simd
  for (std::ptrdiff_t q = 0; q < n; ++q) dst[q] += alpha * src[q];
}

void VelocityField::assign_plus_scaled_self(const VelocityField& other, double beta) {
  require_same_grid(grid_, other.grid_, "velocity assign_plus_scaled_self");
  const auto n = static_cast<std::ptrdiff_t>(values_.size());
  double* dst = values_.data();
  const double* src = other.values_.data();
#pragma omp parallel for simd
  for (std::ptrdiff_t q = 0; q < n; ++q) dst[q] = src[q] + beta * dst[q];
}

void VelocityField::scale(double alpha) noexcept {
  for (double& x : values_) x *= alpha;
}

CellField::CellField(GridSpec grid) : grid_(std::move(grid)), values_(grid_.cell_levels(), 0.0) {}

CellField::CellField(GridSpec grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  require_size(values_.size(), grid_.cell_levels(), "cell field");
  require_finite(values_, "cell field");
}

void CellField::add_scaled(double alpha, const CellField& other) {
  require_same_grid(grid_, other.grid_, "cell add_scaled");
  const auto n = static_cast<std::ptrdiff_t>(values_.size());
  double* dst = values_.data();
  const double* src = other.values_.data();
#pragma omp parallel for simd
  for (std::ptrdiff_t q = 0; q < n; ++q) dst[q] += alpha * src[q];
}

void CellField::scale(double alpha) noexcept {
  for (double& x : values_) x *= alpha;
}

void require_same_grid(const SpatialGrid& a, const SpatialGrid& b, const char* what) {
  if (!(a == b)) {
    throw Error(std::string(what) + ": grid mismatch " + a.describe() + " vs " + b.describe());
  }
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) {
    throw Error(std::string(what) + ": grid mismatch " + a.describe() + " vs " + b.describe());
  }
}

}  // namespace mrai
