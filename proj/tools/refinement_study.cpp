// Phantom recovery on a fixed 33.6 mm box at three resolutions, plus the
// 24x24x12 acceptance configuration. Prints one CSV row per run.
#include <cstdio>
#include <cstdlib>

#include "mrai/phantom_study.hpp"

int main(int argc, char** argv) {
  const int itmax = argc > 1 ? std::atoi(argv[1]) : 10;
  std::printf("grid,delta_mm,region_points,mean_cosine,relative_residual,iterations,seconds\n");
  auto run = [&](int I, int J, int K, double delta) {
    mrai::PhantomCaseParams p;
    p.I = I;
    p.J = J;
    p.K = K;
    p.delta = delta;
    const auto c = mrai::make_phantom_case(p);
    const auto r = mrai::run_phantom_recovery(c, itmax);
    std::printf("%dx%dx%d,%.3f,%zu,%.6f,%.3e,%d,%.2f\n", I, J, K, delta, r.region_points,
                r.mean_cosine, r.relative_residual, r.iterations, r.seconds);
    std::fflush(stdout);
  };
  for (int n : {12, 24, 48}) run(n, n, n, 33.6 / n);
  run(24, 24, 12, 1.4);
  return 0;
}
