// Parallel kernels against the serial reference on the phantom grid family.
// The argument is the number of x cells; y matches x and z is half of x.
#include <benchmark/benchmark.h>

#include "mrai/adjoint.hpp"
#include "mrai/cgne.hpp"
#include "mrai/forward.hpp"
#include "mrai/inner_products.hpp"
#include "mrai/phantom_study.hpp"
#include "mrai/reference.hpp"

namespace {

struct Fixture {
  mrai::SliceTimedSeries series;
  mrai::VelocityField v;
  mrai::CellField d;
};

Fixture make(int n) {
  mrai::PhantomCaseParams p;
  p.I = n;
  p.J = n;
  p.K = n / 2;
  p.delta = 1.4 * 24.0 / n;
  const auto c = mrai::make_phantom_case(p);
  auto s = mrai::gaussian_advection_series(c.grid, c.phantom);
  mrai::VelocityField v(c.grid.spatial());
  for (int m = 0; m < 3; ++m)
    for (double& x : v.component(m)) x = c.phantom.velocity[m];
  auto d = mrai::assemble_rhs(s);
  return {std::move(s), std::move(v), std::move(d)};
}

void cells(benchmark::State& state, const Fixture& f) {
  state.counters["cells"] = static_cast<double>(f.d.size());
}

void BM_apply_T(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::apply_T(f.series, f.v));
  cells(state, f);
}
void BM_apply_T_reference(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::reference::apply_T(f.series, f.v));
  cells(state, f);
}
void BM_apply_T_star(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::apply_T_star(f.series, f.d));
  cells(state, f);
}
void BM_apply_T_star_reference(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::reference::apply_T_star(f.series, f.d));
  cells(state, f);
}
void BM_assemble_rhs(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::assemble_rhs(f.series));
  cells(state, f);
}
void BM_assemble_rhs_reference(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::reference::assemble_rhs(f.series));
  cells(state, f);
}
void BM_inner_x(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::inner_x(f.v, f.v));
}
void BM_inner_x_reference(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mrai::reference::inner_x(f.v, f.v));
}
void BM_cgne_iteration(benchmark::State& state) {
  const Fixture f = make(static_cast<int>(state.range(0)));
  const mrai::AdvectionOperator op(f.series);
  mrai::CgneOptions opt;
  opt.itmax = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mrai::run_cgne(op, f.d, opt));
  cells(state, f);
}

}  // namespace

BENCHMARK(BM_apply_T)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_T_reference)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_T_star)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_T_star_reference)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_assemble_rhs)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_assemble_rhs_reference)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_inner_x)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_inner_x_reference)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cgne_iteration)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
