#include "mrai/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mrai/adjoint.hpp"
#include "mrai/cgne.hpp"
#include "mrai/container.hpp"
#include "mrai/error.hpp"
#include "mrai/forward.hpp"
#include "mrai/mip.hpp"
#include "mrai/synth.hpp"

namespace mrai {

namespace {

struct SimulateArgs {
  std::string out;
  int nx = 0, ny = 0, nz = 0, nt = 0;
  double delta = 1.4, dt = 0.1;
  std::array<double, 3> c{0, 0, 0};
  std::array<double, 3> v{0, 0, 0};
  double sigma = 1.0, amp = 1.0, base = 0.0;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

struct ReconstructArgs {
  std::string in, out, log;
  int itmax = 10;
  std::optional<double> growth_stop;
};

struct MipArgs {
  std::string in, norm, colour;
};

struct CheckArgs {
  int trials = 100;
  double tol = 1e-10;
  std::uint64_t seed = 1;
};

int simulate(const SimulateArgs& a, std::ostream& out) {
  if (a.nx < 2 || a.ny < 2 || a.nz < 2 || a.nt < 3) {
    throw Error("simulate: need nx, ny, nz >= 2 and nt >= 3");
  }
  const GridSpec grid(a.nx - 1, a.ny - 1, a.nz - 1, a.nt - 1, a.delta, a.dt);
  GaussianPhantomSpec spec;
  spec.center = a.c;
  spec.velocity = a.v;
  spec.sigma = a.sigma;
  spec.amplitude = a.amp;
  spec.baseline = a.base;
  SliceTimedSeries series = gaussian_advection_series(grid, spec);
  if (a.noise != 0.0) series = add_noise(series, a.noise, a.seed);
  write_series(series, a.out);
  out << "wrote " << grid.describe() << " series to " << a.out << '\n';
  return 0;
}

int reconstruct(const ReconstructArgs& a, std::ostream& out) {
  const SliceTimedSeries series = read_series(a.in);
  const AdvectionOperator op(series);
  const CellField b = assemble_rhs(series);
  CgneOptions options;
  options.itmax = a.itmax;
  options.growth_stop_factor = a.growth_stop;
  const SolveReport report = run_cgne(op, b, options);
  write_velocity(report.v, a.out);
  if (!a.log.empty()) write_residual_csv(report, std::filesystem::path(a.log));
  out << std::setprecision(10);
  for (const ResidualEntry& r : report.residuals) {
    out << "iter " << r.iteration << " residual " << r.residual << '\n';
  }
  out << "termination: " << to_string(report.termination) << " after " << report.iterations_run
      << " iterations\n";
  return 0;
}

int mip(const MipArgs& a, std::ostream& out) {
  if (a.norm.empty() && a.colour.empty()) throw Error("mip: nothing to render; pass --norm and/or --colour");
  const VelocityField v = read_velocity(a.in);
  if (!a.norm.empty()) {
    render_norm_mip(v, a.norm);
    out << "wrote " << a.norm << '\n';
  }
  if (!a.colour.empty()) {
    render_colour_mip(v, a.colour);
    out << "wrote " << a.colour << '\n';
  }
  return 0;
}

int adjoint_check(const CheckArgs& a, std::ostream& out) {
  const AdjointCheckSummary s = run_adjoint_check(a.trials, a.seed);
  const bool ok = s.max_adjoint_defect <= a.tol && s.max_kappa_defect <= a.tol;
  out << std::setprecision(3) << std::scientific;
  out << "trials: " << s.trials << '\n';
  out << "max relative adjoint defect: " << s.max_adjoint_defect << '\n';
  out << "max relative kappa defect: " << s.max_kappa_defect << '\n';
  out << (ok ? "PASS" : "FAIL") << " (tol " << a.tol << ")\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Velocity-field estimation from slice-timed 4D data"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "write a Gaussian advection phantom");
  simulate_cmd->add_option("--out", sim.out, "output series path")->required();
  simulate_cmd->add_option("--nx", sim.nx, "grid points along x")->required();
  simulate_cmd->add_option("--ny", sim.ny, "grid points along y")->required();
  simulate_cmd->add_option("--nz", sim.nz, "grid points along z")->required();
  simulate_cmd->add_option("--nt", sim.nt, "time cycles (L + 1)")->required();
  simulate_cmd->add_option("--delta", sim.delta, "voxel pitch, mm")->required();
  simulate_cmd->add_option("--dt", sim.dt, "per-slice time step, s")->required();
  simulate_cmd->add_option("--cx", sim.c[0], "bump center x, mm")->required();
  simulate_cmd->add_option("--cy", sim.c[1], "bump center y, mm")->required();
  simulate_cmd->add_option("--cz", sim.c[2], "bump center z, mm")->required();
  simulate_cmd->add_option("--sigma", sim.sigma, "bump width, mm")->required();
  simulate_cmd->add_option("--amp", sim.amp, "bump amplitude")->required();
  simulate_cmd->add_option("--base", sim.base, "baseline signal")->required();
  simulate_cmd->add_option("--vx", sim.v[0], "velocity x, mm/s")->required();
  simulate_cmd->add_option("--vy", sim.v[1], "velocity y, mm/s")->required();
  simulate_cmd->add_option("--vz", sim.v[2], "velocity z, mm/s")->required();
  simulate_cmd->add_option("--noise", sim.noise, "Gaussian noise standard deviation");
  simulate_cmd->add_option("--seed", sim.seed, "noise seed");

  ReconstructArgs rec;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "estimate the velocity field with CGNE");
  reconstruct_cmd->add_option("--in", rec.in, "input series path")->required();
  reconstruct_cmd->add_option("--out", rec.out, "output velocity path")->required();
  reconstruct_cmd->add_option("--itmax", rec.itmax, "iteration count")->capture_default_str();
  reconstruct_cmd->add_option("--log", rec.log, "residual CSV path");
  reconstruct_cmd->add_option("--stop-on-growth", rec.growth_stop,
                              "stop when the residual grows by more than this factor");

  MipArgs mp;
  auto* mip_cmd = app.add_subcommand("mip", "render z-axis maximum intensity projections");
  mip_cmd->add_option("--in", mp.in, "input velocity path")->required();
  mip_cmd->add_option("--norm", mp.norm, "grayscale norm MIP (PGM)");
  mip_cmd->add_option("--colour", mp.colour, "colour direction MIP (PPM)");

  CheckArgs chk;
  auto* check_cmd = app.add_subcommand("adjoint-check", "random dot-product test of T and T*");
  check_cmd->add_option("--trials", chk.trials)->capture_default_str();
  check_cmd->add_option("--tol", chk.tol)->capture_default_str();
  check_cmd->add_option("--seed", chk.seed)->capture_default_str();

  std::string info_in;
  auto* info_cmd = app.add_subcommand("info", "print a container header");
  info_cmd->add_option("--in", info_in, "container path")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*simulate_cmd) return simulate(sim, out);
    if (*reconstruct_cmd) return reconstruct(rec, out);
    if (*mip_cmd) return mip(mp, out);
    if (*check_cmd) return adjoint_check(chk, out);
    if (*info_cmd) {
      out << read_header_text(info_in) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace mrai
