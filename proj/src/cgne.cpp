#include "mrai/cgne.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "mrai/error.hpp"
#include "mrai/forward.hpp"
#include "mrai/inner_products.hpp"

namespace mrai {

namespace {

void require_finite(double x, const char* name, int iteration) {
  if (!std::isfinite(x)) {
    std::ostringstream os;
    os << "cgne: non-finite " << name << " at iteration " << iteration;
    throw Error(os.str());
  }
}

}  // namespace

AdvectionOperator::AdvectionOperator(const SliceTimedSeries& series)
    : series_(series), minors_(minor_table_for(series.grid().spatial())) {}

CellField AdvectionOperator::apply(const VelocityField& v) const { return apply_T(series_, v); }

AdjointResult AdvectionOperator::adjoint(const CellField& d) const {
  return apply_T_star(series_, d, minors_);
}

const char* to_string(Termination t) noexcept {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::breakdown: return "breakdown";
    case Termination::residual_growth: return "residual_growth";
  }
  return "unknown";
}

SolveReport run_cgne(const LinearOperatorPair& op, const CellField& b, const CgneOptions& options) {
  const GridSpec& g = op.grid();
  require_same_grid(g, b.grid(), "run_cgne");
  if (options.itmax < 0) throw Error("cgne: itmax must be >= 0");
  if (options.growth_stop_factor && !(*options.growth_stop_factor > 0.0)) {
    throw Error("cgne: growth stop factor must be positive");
  }

  SolveReport report{VelocityField(g.spatial()), {}, 0, Termination::completed};
  VelocityField& v = report.v;

  // d tracks b - T v and is updated at the end of each pass so every
  // iterate's residual gets logged.
  CellField d = b;
  double residual = norm_y(d);
  require_finite(residual, "residual", 0);
  report.residuals.push_back({0, residual});

  VelocityField p(g.spatial());
  double gamma = 0.0;

  // gamma pairs with the scaled direction w = T*d, so it is <T*d, T*d>_X =
  // delta^2 kappa. Pairing kappa itself with w / delta^2 gives the same
  // iterates; mixing kappa with the scaled w would not.
  for (int it = 0; it < options.itmax; ++it) {
    AdjointResult adj = op.adjoint(d);
    require_finite(adj.norm_sq, "kappa", it + 1);
    if (it == 0) {
      gamma = adj.norm_sq;
      p = std::move(adj.w);
    } else {
      const double beta = adj.norm_sq / gamma;
      require_finite(beta, "beta", it + 1);
      gamma = adj.norm_sq;
      p.assign_plus_scaled_self(adj.w, beta);
    }

    const CellField q = op.apply(p);
    const double qq = inner_y(q, q);
    require_finite(qq, "<q,q>", it + 1);
    if (qq < options.breakdown_threshold) {
      report.termination = Termination::breakdown;
      break;
    }
    const double alpha = gamma / qq;
    require_finite(alpha, "alpha", it + 1);
    v.add_scaled(alpha, p);
    d.add_scaled(-alpha, q);

    const double next = norm_y(d);
    require_finite(next, "residual", it + 1);
    report.residuals.push_back({it + 1, next});
    report.iterations_run = it + 1;
    if (options.on_iterate) options.on_iterate(it + 1, v);

    if (options.growth_stop_factor && next > *options.growth_stop_factor * residual) {
      report.termination = Termination::residual_growth;
      break;
    }
    residual = next;
  }
  return report;
}

void write_residual_csv(const SolveReport& report, std::ostream& out) {
  out << "iter,residual\n";
  out << std::setprecision(17);
  for (const ResidualEntry& r : report.residuals) out << r.iteration << ',' << r.residual << '\n';
}

void write_residual_csv(const SolveReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open residual log for writing: " + path.string());
  write_residual_csv(report, out);
  if (!out) throw Error("failed writing residual log: " + path.string());
}

}  // namespace mrai
