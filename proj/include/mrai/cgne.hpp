#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mrai/adjoint.hpp"
#include "mrai/grid.hpp"

namespace mrai {

/// T together with its adjoint with respect to inner_x / inner_y.
class LinearOperatorPair {
 public:
  virtual ~LinearOperatorPair() = default;
  virtual const GridSpec& grid() const = 0;
  virtual CellField apply(const VelocityField& v) const = 0;
  virtual AdjointResult adjoint(const CellField& d) const = 0;
};

/// Matrix-free advection operator for a fixed measured series. The series
/// must outlive the operator.
class AdvectionOperator final : public LinearOperatorPair {
 public:
  explicit AdvectionOperator(const SliceTimedSeries& series);

  const GridSpec& grid() const override { return series_.grid(); }
  CellField apply(const VelocityField& v) const override;
  AdjointResult adjoint(const CellField& d) const override;

  const SliceTimedSeries& series() const noexcept { return series_; }
  const MinorTable& minors() const noexcept { return minors_; }

 private:
  const SliceTimedSeries& series_;
  MinorTable minors_;
};

enum class Termination {
  completed,        // ran itmax iterations
  breakdown,        // <q, q>_Y fell below the breakdown threshold
  residual_growth,  // optional growth stop fired
};

const char* to_string(Termination t) noexcept;

struct CgneOptions {
  int itmax = 10;
  double breakdown_threshold = 1e-300;
  /// Stop once ||d_{it+1}|| > factor * ||d_it||. Off when empty.
  std::optional<double> growth_stop_factor;
  /// Called after every completed iteration with the current iterate.
  std::function<void(int iteration, const VelocityField& v)> on_iterate;
};

struct ResidualEntry {
  int iteration = 0;
  double residual = 0.0;
};

struct SolveReport {
  VelocityField v;
  std::vector<ResidualEntry> residuals;  // iterations_run + 1 entries
  int iterations_run = 0;
  Termination termination = Termination::completed;
};

/// Conjugate gradients on the normal equations T*T v = T*b, started at v = 0
/// and run for a fixed number of iterations.
SolveReport run_cgne(const LinearOperatorPair& op, const CellField& b, const CgneOptions& options = {});

/// `iter,residual` CSV, 17 significant digits.
void write_residual_csv(const SolveReport& report, std::ostream& out);
void write_residual_csv(const SolveReport& report, const std::filesystem::path& path);

}  // namespace mrai
