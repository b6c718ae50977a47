#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrai/grid.hpp"

namespace mrai {

/// Leading principal minors of the per-line Gram matrix
///
///     M = tridiag(-1, [a, b, ..., b, a], -1),   a = delta^2 + 1,  b = a + 1,
///
/// computed by r_{-1} = 1, r_0 = a, r_i = b r_{i-1} - r_{i-2}. r_i is the
/// determinant of the leading (i+1)x(i+1) block with diagonal [a, b, b, ...];
/// the full line matrix of length n+1 has determinant r_bar(n) = r_n - r_{n-1}.
///
/// One table with max_length = max(I, J, K) serves every axis of a grid.
/// Construction throws if r would leave the safe floating-point range.
class MinorTable {
 public:
  MinorTable(int max_length, double delta);

  double h() const noexcept { return h_; }
  double a() const noexcept { return a_; }
  double b_diag() const noexcept { return b_; }
  int max_length() const noexcept { return max_length_; }

  /// r_i for -1 <= i <= max_length.
  double r(int i) const noexcept { return r_[static_cast<std::size_t>(i + 1)]; }
  /// r_n - r_{n-1}; determinant of the full line matrix with n+1 unknowns.
  double r_bar(int n) const noexcept { return r(n) - r(n - 1); }

 private:
  double h_;
  double a_;
  double b_;
  int max_length_;
  std::vector<double> r_;
};

MinorTable minor_sequence(int n, double delta);

/// Table sized for all three axes of `grid`.
MinorTable minor_table_for(const SpatialGrid& grid);

struct LineSolveResult {
  std::vector<double> w;
  double kappa_contrib = 0.0;
};

/// Solve M w = e for one line of n+1 unknowns with the two-sweep minor
/// recurrence. kappa_contrib = sum_i e_i w_i.
LineSolveResult line_solve(std::span<const double> e, const MinorTable& table);

/// T*d with respect to the X and Y inner products. Invariant:
/// norm_sq = delta^2 * kappa = inner_x(w, w).
struct AdjointResult {
  VelocityField w;
  double kappa = 0.0;
  double norm_sq = 0.0;
};

AdjointResult apply_T_star(const SliceTimedSeries& series, const CellField& d);
AdjointResult apply_T_star(const SliceTimedSeries& series, const CellField& d,
                           const MinorTable& table);

/// Random dot-product test of apply_T against apply_T_star on small grids
/// (axes up to 5x4x3, L up to 6).
struct AdjointCheckSummary {
  int trials = 0;
  double max_adjoint_defect = 0.0;  // |<Tv,d>_Y - <v,T*d>_X| / (|Tv|_Y |d|_Y)
  double max_kappa_defect = 0.0;    // |delta^2 kappa - <T*d,T*d>_X| / <T*d,T*d>_X
};

AdjointCheckSummary run_adjoint_check(int trials, std::uint64_t seed);

}  // namespace mrai
