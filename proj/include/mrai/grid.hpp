#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mrai {

/// Spatial part of the lattice: grid points run 0..I, 0..J, 0..K with
/// uniform pitch `delta` (mm) on every axis.
class SpatialGrid {
 public:
  SpatialGrid(int I, int J, int K, double delta);

  int I() const noexcept { return I_; }
  int J() const noexcept { return J_; }
  int K() const noexcept { return K_; }
  double delta() const noexcept { return delta_; }

  int nx() const noexcept { return I_ + 1; }
  int ny() const noexcept { return J_ + 1; }
  int nz() const noexcept { return K_ + 1; }
  std::size_t points() const noexcept {
    return static_cast<std::size_t>(nx()) * ny() * nz();
  }

  /// x-fastest offset of grid point (i, j, k).
  std::size_t point_index(int i, int j, int k) const noexcept {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(nx()) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny()) * k);
  }

  std::string describe() const;
  bool operator==(const SpatialGrid&) const = default;

 private:
  int I_;
  int J_;
  int K_;
  double delta_;
};

/// Full space-time lattice. Time indices run 0..L and one volume is
/// acquired every (K + 1) * delta_t seconds, one z-layer per delta_t.
class GridSpec {
 public:
  GridSpec(int I, int J, int K, int L, double delta, double delta_t);

  const SpatialGrid& spatial() const noexcept { return spatial_; }
  int I() const noexcept { return spatial_.I(); }
  int J() const noexcept { return spatial_.J(); }
  int K() const noexcept { return spatial_.K(); }
  int L() const noexcept { return L_; }
  double delta() const noexcept { return spatial_.delta(); }
  double delta_t() const noexcept { return delta_t_; }
  double cycle_time() const noexcept { return (K() + 1) * delta_t_; }

  std::size_t points() const noexcept { return spatial_.points(); }
  std::size_t samples() const noexcept { return points() * static_cast<std::size_t>(L_ + 1); }
  std::size_t cells() const noexcept {
    return static_cast<std::size_t>(I()) * J() * K();
  }
  /// Dimension of the residual space: one entry per cell and level 1..L-1.
  std::size_t cell_levels() const noexcept {
    return cells() * static_cast<std::size_t>(L_ - 1);
  }

  std::size_t point_index(int i, int j, int k) const noexcept {
    return spatial_.point_index(i, j, k);
  }
  std::size_t sample_index(int i, int j, int k, int l) const noexcept {
    return point_index(i, j, k) + points() * static_cast<std::size_t>(l);
  }
  /// Cell indices are one-based: 1 <= i <= I, ..., 1 <= l <= L - 1.
  std::size_t cell_index(int i, int j, int k, int l) const noexcept {
    return static_cast<std::size_t>(i - 1) +
           static_cast<std::size_t>(I()) *
               (static_cast<std::size_t>(j - 1) +
                static_cast<std::size_t>(J()) *
                    (static_cast<std::size_t>(k - 1) +
                     static_cast<std::size_t>(K()) * static_cast<std::size_t>(l - 1)));
  }

  std::string describe() const;
  bool operator==(const GridSpec&) const = default;

 private:
  SpatialGrid spatial_;
  int L_;
  double delta_t_;
};

/// Measured samples rho_{i,j,k,l}; layer k of cycle l is acquired at
/// acquisition_time(k, l). Immutable once built.
class SliceTimedSeries {
 public:
  SliceTimedSeries(GridSpec grid, std::vector<double> values);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double at(int i, int j, int k, int l) const noexcept {
    return values_[grid_.sample_index(i, j, k, l)];
  }
  /// Contiguous (I+1)(J+1) plane of layer k at cycle l.
  const double* plane(int k, int l) const noexcept {
    return values_.data() + grid_.sample_index(0, 0, k, l);
  }

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Element of X: three velocity components on every grid point, stored as
/// three consecutive x-fastest blocks (v1, v2, v3).
class VelocityField {
 public:
  explicit VelocityField(SpatialGrid grid);
  VelocityField(SpatialGrid grid, std::vector<double> values);

  const SpatialGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// m is zero-based (0 -> v1, 1 -> v2, 2 -> v3).
  std::span<double> component(int m) noexcept {
    return std::span<double>(values_).subspan(m * grid_.points(), grid_.points());
  }
  std::span<const double> component(int m) const noexcept {
    return std::span<const double>(values_).subspan(m * grid_.points(), grid_.points());
  }
  double& at(int m, int i, int j, int k) noexcept {
    return values_[m * grid_.points() + grid_.point_index(i, j, k)];
  }
  double at(int m, int i, int j, int k) const noexcept {
    return values_[m * grid_.points() + grid_.point_index(i, j, k)];
  }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  /// this += alpha * other
  void add_scaled(double alpha, const VelocityField& other);
  /// this = other + beta * this
  void assign_plus_scaled_self(const VelocityField& other, double beta);
  void scale(double alpha) noexcept;

 private:
  SpatialGrid grid_;
  std::vector<double> values_;
};

/// Element of Y: one value per interior cell (1..I, 1..J, 1..K) and level
/// 1..L-1.
class CellField {
 public:
  explicit CellField(GridSpec grid);
  CellField(GridSpec grid, std::vector<double> values);

  const GridSpec& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  double& at(int i, int j, int k, int l) noexcept { return values_[grid_.cell_index(i, j, k, l)]; }
  double at(int i, int j, int k, int l) const noexcept {
    return values_[grid_.cell_index(i, j, k, l)];
  }
  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  void add_scaled(double alpha, const CellField& other);
  void scale(double alpha) noexcept;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

void require_same_grid(const SpatialGrid& a, const SpatialGrid& b, const char* what);
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace mrai
