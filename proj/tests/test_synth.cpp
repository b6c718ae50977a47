#include <doctest.h>

#include <cmath>
#include <random>

#include "mrai/error.hpp"
#include "mrai/forward.hpp"
#include "mrai/slicetime.hpp"
#include "mrai/synth.hpp"
#include "oracles/dense.hpp"

using namespace mrai;

namespace {

GaussianPhantomSpec bump(std::array<double, 3> c, std::array<double, 3> v, double sigma) {
  GaussianPhantomSpec s;
  s.center = c;
  s.velocity = v;
  s.sigma = sigma;
  s.amplitude = 2.0;
  s.baseline = 0.5;
  return s;
}

}  // namespace

TEST_CASE("stationary phantom is constant in time") {
  const GridSpec g(6, 5, 4, 4, 1.4, 0.2);
  const auto s = gaussian_advection_series(g, bump({3.0, 3.0, 2.0}, {0, 0, 0}, 2.0));
  for (int l = 1; l <= g.L(); ++l)
    for (std::size_t p = 0; p < g.points(); ++p) CHECK(s.values()[p + g.points() * l] == s.values()[p]);
}

TEST_CASE("phantom peak value at an on-grid center") {
  const GridSpec g(6, 6, 4, 3, 1.5, 0.2);
  const auto s = gaussian_advection_series(g, bump({3.0, 4.5, 0.0}, {1.0, 0.0, 0.0}, 2.0));
  CHECK(s.at(2, 3, 0, 0) == doctest::Approx(2.5).epsilon(1e-15));
  // |x - c|^2 at (3, 3, 0) is 1.5^2 + 0^2 at t = 0
  CHECK(s.at(3, 3, 0, 0) == doctest::Approx(0.5 + 2.0 * std::exp(-2.25 / 8.0)));
}

TEST_CASE("phantom peak tracks center + velocity * t") {
  const GridSpec g(30, 24, 8, 5, 1.0, 0.25);
  const std::array<double, 3> c{6.0, 8.0, 4.0}, v{1.6, 0.9, 0.1};
  const auto s = gaussian_advection_series(g, bump(c, v, 2.5));
  for (int l = 0; l <= g.L(); ++l) {
    double best = -1.0;
    int bi = 0, bj = 0, bk = 0;
    for (int k = 0; k <= g.K(); ++k)
      for (int j = 0; j <= g.J(); ++j)
        for (int i = 0; i <= g.I(); ++i)
          if (s.at(i, j, k, l) > best) {
            best = s.at(i, j, k, l);
            bi = i;
            bj = j;
            bk = k;
          }
    const double t = acquisition_time(bk, l, g);
    CHECK(std::abs(bi - (c[0] + v[0] * t)) <= 1.0);
    CHECK(std::abs(bj - (c[1] + v[1] * t)) <= 1.0);
    CHECK(std::abs(bk - (c[2] + v[2] * t)) <= 1.0);
  }
}

TEST_CASE("adjacent layers are displaced by velocity * delta_t") {
  const GridSpec g(40, 40, 6, 3, 1.0, 0.1);
  const std::array<double, 3> v{2.0, -1.2, 0.0};
  const auto s = gaussian_advection_series(g, bump({15.0, 22.0, 3.0}, v, 2.5));
  auto centroid = [&](int k, int l) {
    double w = 0, x = 0, y = 0;
    for (int j = 0; j <= g.J(); ++j)
      for (int i = 0; i <= g.I(); ++i) {
        const double m = s.at(i, j, k, l) - 0.5;
        w += m;
        x += m * i;
        y += m * j;
      }
    return std::array<double, 2>{x / w, y / w};
  };
  for (int l = 0; l <= g.L(); ++l)
    for (int k = 0; k < g.K(); ++k) {
      const auto a = centroid(k, l), b = centroid(k + 1, l);
      CHECK(b[0] - a[0] == doctest::Approx(v[0] * g.delta_t()).epsilon(1e-3));
      CHECK(b[1] - a[1] == doctest::Approx(v[1] * g.delta_t()).epsilon(1e-3));
    }
}

TEST_CASE("phantom is translation consistent") {
  const GridSpec g(10, 10, 6, 3, 1.2, 0.3);
  const std::array<double, 3> v{0.5, 0.2, -0.1};
  const auto a = gaussian_advection_series(g, bump({4.0, 5.0, 3.0}, v, 2.4));
  const auto b = gaussian_advection_series(g, bump({4.0 + 1.2, 5.0, 3.0}, v, 2.4));
  for (int l = 0; l <= g.L(); ++l)
    for (int k = 0; k <= g.K(); ++k)
      for (int j = 0; j <= g.J(); ++j)
        for (int i = 0; i < g.I(); ++i) CHECK(b.at(i + 1, j, k, l) == doctest::Approx(a.at(i, j, k, l)).epsilon(1e-12));
}

TEST_CASE("phantom spec validation") {
  GaussianPhantomSpec bad;
  bad.sigma = 0.0;
  CHECK_THROWS_AS(gaussian_advection_series(GridSpec(2, 2, 2, 2, 1.0, 1.0), bad), Error);
  bad.sigma = 1.0;
  bad.velocity[1] = std::nan("");
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("noise injection") {
  const GridSpec g(46, 46, 46, 2, 1.0, 1.0);  // 47^3 * 3 > 1e5 samples
  const SliceTimedSeries clean(g, std::vector<double>(g.samples(), 1.0));
  const auto same = add_noise(clean, 0.0, 5);
  CHECK(std::equal(same.values().begin(), same.values().end(), clean.values().begin()));

  const double sigma = 0.3;
  const auto n1 = add_noise(clean, sigma, 17);
  const auto n2 = add_noise(clean, sigma, 17);
  CHECK(std::equal(n1.values().begin(), n1.values().end(), n2.values().begin()));
  const auto n3 = add_noise(clean, sigma, 18);
  CHECK_FALSE(std::equal(n1.values().begin(), n1.values().end(), n3.values().begin()));

  const std::size_t N = 100000;
  double sum = 0.0, sq = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    const double e = n1.values()[n] - 1.0;
    sum += e;
    sq += e * e;
  }
  const double mean = sum / N;
  const double sd = std::sqrt(sq / N - mean * mean);
  CHECK(std::abs(mean) <= 4.0 * sigma / std::sqrt(static_cast<double>(N)));
  CHECK(std::abs(sd - sigma) <= 0.02 * sigma);

  CHECK_THROWS_AS(add_noise(clean, -1.0, 1), Error);
}

TEST_CASE("consistent_rhs is T v_star") {
  const GridSpec g(3, 3, 2, 4, 1.4, 0.2);
  std::mt19937_64 rng(51);
  const auto s = oracle::smooth_series(g, rng);
  const CellField zero = consistent_rhs(s, VelocityField(g.spatial()));
  for (double x : zero.values()) CHECK(x == 0.0);
  const auto v = oracle::random_velocity(g.spatial(), rng);
  const CellField a = consistent_rhs(s, v), b = apply_T(s, v);
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  CHECK_THROWS_AS(consistent_rhs(s, VelocityField(SpatialGrid(3, 3, 3, 1.4))), Error);
}
