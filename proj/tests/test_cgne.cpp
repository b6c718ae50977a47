#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "mrai/cgne.hpp"
#include "mrai/error.hpp"
#include "mrai/forward.hpp"
#include "mrai/inner_products.hpp"
#include "mrai/synth.hpp"
#include "oracles/dense.hpp"

using namespace mrai;

namespace {

double residual_norm(const LinearOperatorPair& op, const CellField& b, const VelocityField& v) {
  CellField r = b;
  r.add_scaled(-1.0, op.apply(v));
  return norm_y(r);
}

// Adjoint with the wrong sign: each CG step moves uphill.
class FlippedAdjoint final : public LinearOperatorPair {
 public:
  explicit FlippedAdjoint(const SliceTimedSeries& s) : inner_(s) {}
  const GridSpec& grid() const override { return inner_.grid(); }
  CellField apply(const VelocityField& v) const override { return inner_.apply(v); }
  AdjointResult adjoint(const CellField& d) const override {
    AdjointResult r = inner_.adjoint(d);
    r.w.scale(-1.0);
    return r;
  }

 private:
  AdvectionOperator inner_;
};

class NanKappa final : public LinearOperatorPair {
 public:
  explicit NanKappa(const SliceTimedSeries& s) : inner_(s) {}
  const GridSpec& grid() const override { return inner_.grid(); }
  CellField apply(const VelocityField& v) const override { return inner_.apply(v); }
  AdjointResult adjoint(const CellField& d) const override {
    AdjointResult r = inner_.adjoint(d);
    r.kappa = std::numeric_limits<double>::quiet_NaN();
    r.norm_sq = r.kappa;
    return r;
  }

 private:
  AdvectionOperator inner_;
};

}  // namespace

TEST_CASE("zero data gives the zero iterate") {
  const GridSpec g(3, 3, 2, 4, 1.4, 0.2);
  std::mt19937_64 rng(41);
  const auto s = oracle::smooth_series(g, rng);
  const AdvectionOperator op(s);
  CgneOptions opt;
  opt.itmax = 7;
  const SolveReport r = run_cgne(op, CellField(g), opt);
  for (double x : r.v.values()) CHECK(x == 0.0);
  for (const auto& e : r.residuals) CHECK(e.residual == 0.0);
  CHECK(r.residuals.size() == static_cast<std::size_t>(r.iterations_run) + 1);
  CHECK(r.termination == Termination::breakdown);
}

TEST_CASE("itmax = 0 returns v = 0 and logs ||b||") {
  const GridSpec g(3, 3, 2, 4, 1.4, 0.2);
  std::mt19937_64 rng(42);
  const auto s = oracle::smooth_series(g, rng);
  const AdvectionOperator op(s);
  const CellField b = assemble_rhs(s);
  CgneOptions opt;
  opt.itmax = 0;
  const SolveReport r = run_cgne(op, b, opt);
  CHECK(r.iterations_run == 0);
  REQUIRE(r.residuals.size() == 1);
  CHECK(r.residuals[0].residual == doctest::Approx(norm_y(b)).epsilon(1e-14));
  for (double x : r.v.values()) CHECK(x == 0.0);
}

TEST_CASE("one iteration is a scaled adjoint step") {
  const GridSpec g(3, 2, 3, 4, 1.4, 0.2);
  std::mt19937_64 rng(43);
  const auto s = oracle::smooth_series(g, rng);
  const AdvectionOperator op(s);
  const CellField b = oracle::random_cells(g, rng);
  CgneOptions opt;
  opt.itmax = 1;
  const SolveReport r = run_cgne(op, b, opt);

  const AdjointResult tb = op.adjoint(b);
  const CellField ttb = op.apply(tb.w);
  const double alpha = inner_x(tb.w, tb.w) / inner_y(ttb, ttb);
  for (std::size_t n = 0; n < r.v.size(); ++n)
    CHECK(r.v.values()[n] == doctest::Approx(alpha * tb.w.values()[n]).epsilon(1e-10));
}

TEST_CASE("matrix-free CGNE matches the dense oracle") {
  const GridSpec g(2, 2, 2, 3, 1.4, 0.5);
  std::mt19937_64 rng(44);
  const auto s = oracle::random_series(g, rng);
  const auto v_star = oracle::random_velocity(g.spatial(), rng);
  const CellField b = consistent_rhs(s, v_star);
  const int itmax = static_cast<int>(g.cell_levels());
  REQUIRE(itmax == 16);

  const Eigen::MatrixXd T = oracle::dense_T(s);
  const Eigen::MatrixXd G = oracle::gram(g.spatial());
  const auto want = oracle::cgne(T, G, oracle::to_eigen(b.values()), itmax);

  std::vector<Eigen::VectorXd> got;
  CgneOptions opt;
  opt.itmax = itmax;
  opt.on_iterate = [&](int, const VelocityField& v) { got.push_back(oracle::to_eigen(v.values())); };
  const AdvectionOperator op(s);
  const SolveReport r = run_cgne(op, b, opt);
  REQUIRE(got.size() == want.size());
  for (std::size_t it = 0; it < got.size(); ++it) {
    CHECK((got[it] - want[it]).norm() <= 1e-8 * want[it].norm());
  }
  CHECK(r.residuals.back().residual <= 1e-8 * norm_y(b));

  // the same solver code path over the dense operator
  const oracle::DenseOperator dense(g, T, G);
  const SolveReport rd = run_cgne(dense, b, opt);
  CHECK((oracle::to_eigen(rd.v.values()) - want.back()).norm() <= 1e-8 * want.back().norm());
}

TEST_CASE("residual log is monotone and consistent; solution tends to minimum norm") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 12; ++trial) {
    const GridSpec g = oracle::random_grid(rng);
    const auto s = oracle::smooth_series(g, rng);
    const AdvectionOperator op(s);
    const auto v_star = oracle::random_velocity(g.spatial(), rng);
    const bool consistent = trial % 2 == 0;
    const CellField b = consistent ? consistent_rhs(s, v_star) : assemble_rhs(s);

    std::vector<VelocityField> iterates;
    CgneOptions opt;
    opt.itmax = 12;
    opt.on_iterate = [&](int, const VelocityField& v) { iterates.push_back(v); };
    const SolveReport r = run_cgne(op, b, opt);
    const double nb = norm_y(b);
    for (std::size_t n = 1; n < r.residuals.size(); ++n) {
      CHECK(r.residuals[n].residual <= r.residuals[n - 1].residual + 1e-12 * nb);
      const double fresh = residual_norm(op, b, iterates[n - 1]);
      CHECK(std::abs(r.residuals[n].residual - fresh) <= 1e-10 * fresh + oracle::roundoff_floor(nb));
    }
    if (consistent) CHECK(inner_x(r.v, r.v) <= inner_x(v_star, v_star) * (1.0 + 1e-6));
  }
}

TEST_CASE("CGNE is scale equivariant") {
  const GridSpec g(4, 3, 2, 5, 1.4, 0.25);
  std::mt19937_64 rng(46);
  const auto s = oracle::smooth_series(g, rng);
  const AdvectionOperator op(s);
  const CellField b = assemble_rhs(s);
  CellField cb = b;
  cb.scale(-4.5);
  const SolveReport r1 = run_cgne(op, b);
  const SolveReport r2 = run_cgne(op, cb);
  double worst = 0.0, peak = 0.0;
  for (std::size_t n = 0; n < r1.v.size(); ++n) {
    worst = std::max(worst, std::abs(r2.v.values()[n] + 4.5 * r1.v.values()[n]));
    peak = std::max(peak, std::abs(4.5 * r1.v.values()[n]));
  }
  CHECK(worst <= 1e-10 * peak);
  CHECK(r1.iterations_run == 10);
}

TEST_CASE("growth stop and non-finite abort") {
  const GridSpec g(3, 3, 2, 4, 1.4, 0.2);
  std::mt19937_64 rng(47);
  const auto s = oracle::smooth_series(g, rng);
  const CellField b = oracle::random_cells(g, rng);

  CgneOptions opt;
  opt.itmax = 5;
  opt.growth_stop_factor = 1.0;
  const SolveReport grown = run_cgne(FlippedAdjoint(s), b, opt);
  CHECK(grown.termination == Termination::residual_growth);
  CHECK(grown.iterations_run == 1);
  CHECK(grown.residuals.size() == 2);

  opt.growth_stop_factor.reset();
  try {
    (void)run_cgne(NanKappa(s), b, opt);
    FAIL("expected abort");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("iteration 1") != std::string::npos);
  }

  CHECK_THROWS_AS(run_cgne(AdvectionOperator(s), CellField(GridSpec(3, 3, 2, 5, 1.4, 0.2)), opt), Error);
  opt.itmax = -1;
  CHECK_THROWS_AS(run_cgne(AdvectionOperator(s), b, opt), Error);
}

TEST_CASE("residual CSV") {
  SolveReport r{VelocityField(SpatialGrid(1, 1, 1, 1.0)), {{0, 1.0 / 3.0}, {1, 0.125}}, 1,
                Termination::completed};
  std::ostringstream os;
  write_residual_csv(r, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "iter,residual");
  std::getline(in, line);
  CHECK(line.substr(0, 2) == "0,");
  CHECK(std::stod(line.substr(2)) == 1.0 / 3.0);
  std::getline(in, line);
  CHECK(line == "1,0.125");
}
