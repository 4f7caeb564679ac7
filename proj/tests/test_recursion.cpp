#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rcum/numeric.hpp"
#include "rcum/recursion.hpp"

using namespace rcum;

TEST_CASE("realized covariation of Brownian motion approximates the bracket") {
  const SimulatorSpec spec{SimulatorKind::brownian, 1.0, 1.0};
  const std::vector<double> qv = mc_collect(200, 2, [&](std::uint64_t pid) {
    const MultiPath path = simulate_path(spec, 2, 512, 4711, pid);
    return realized_covariation(path, 1, 1, false);
  });
  const SampleStats stats = summarize(qv);
  CHECK(std::abs(stats.mean - 1.0) <= 4.0 * stats.standard_error + 1e-12);

  // Bracket against the deterministic finite-variation component.
  const MultiPath path = simulate_path(spec, 2, 512, 4711, 0);
  CHECK(std::abs(realized_covariation(path, 1, 2, false)) <= 0.01);
}

TEST_CASE("Poisson continuous-part covariation is the drift residue") {
  const double lambda = 1.0;
  const int grid = 16;
  const SimulatorSpec spec{SimulatorKind::poisson, lambda, 1.0};
  const MultiPath path = simulate_path(spec, 2, grid, 555, 3);
  const double cont = realized_covariation(path, 1, 1, true);
  // Each cell contributes (lambda*dt)^2 exactly.
  CHECK(std::abs(cont - lambda * lambda / static_cast<double>(grid)) <= 1e-12);
}

TEST_CASE("cell-level covariation decomposition is algebraic") {
  const SimulatorSpec spec{SimulatorKind::poisson, 2.0, 1.0};
  const MultiPath path = simulate_path(spec, 2, 8, 808, 1);
  REQUIRE(path.jumps.has_value());

  for (std::size_t c = 1; c < path.points(); ++c) {
    double jump_1 = 0.0, jump_2 = 0.0;
    for (const JumpMark& mark : *path.jumps) {
      if (mark.time > path.grid[c - 1] && mark.time <= path.grid[c]) {
        jump_1 += mark.increment[0];
        jump_2 += mark.increment[1];
      }
    }
    const double d1 = path.components[0][c] - path.components[0][c - 1];
    const double d2 = path.components[1][c] - path.components[1][c - 1];
    const double c1 = d1 - jump_1;
    const double c2 = d2 - jump_2;
    const double full = d1 * d2;
    const double pieces = c1 * c2 + jump_1 * jump_2 + c1 * jump_2 + jump_1 * c2;
    CHECK(std::abs(full - pieces) <=
          1e-12 * std::max(1.0, std::abs(full)));
  }
}

TEST_CASE("jump term counts Poisson marks") {
  const SimulatorSpec spec{SimulatorKind::poisson, 1.5, 1.0};
  const MultiPath path = simulate_path(spec, 3, 8, 999, 2);
  const double marks = static_cast<double>(path.jumps->size());
  // g_2(1,0) = 1 and g_3(1,0,0) = 1, so both sums count the jumps.
  CHECK(jump_term(path, 2, 0.0) == marks);
  CHECK(jump_term(path, 3, 0.0) == marks);

  double late = 0.0;
  for (const JumpMark& m : *path.jumps) {
    if (m.time > 0.5) late += 1.0;
  }
  CHECK(jump_term(path, 2, 0.5) == late);
}

TEST_CASE("continuous models have empty jump terms") {
  const SimulatorSpec spec{SimulatorKind::expmart, 1.0, 1.0};
  const MultiPath path = simulate_path(spec, 2, 16, 4, 0);
  CHECK(jump_term(path, 2, 0.0) == 0.0);
}

TEST_CASE("paths without jump information refuse jump-dependent queries") {
  MultiPath bare;
  bare.grid = {0.0, 1.0};
  bare.components = {{0.0, 1.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(jump_term(bare, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(realized_covariation(bare, 1, 1, true),
                  std::invalid_argument);
  CHECK_NOTHROW(realized_covariation(bare, 1, 1, false));
}

TEST_CASE("recursion right-hand side for Brownian n=1 is the realized bracket") {
  const SimulatorSpec spec{SimulatorKind::brownian, 1.0, 1.0};
  const MultiPath path = simulate_path(spec, 1, 256, 20, 0);
  const RecursionParts parts = recursion_rhs(path, 1, 0.0);
  CHECK(parts.jump == 0.0);
  CHECK(parts.bracket == realized_covariation(path, 1, 1, true));
  CHECK(std::abs(parts.total() - 1.0) <= 0.5);  // single path, coarse sanity
}

TEST_CASE("diamond rescaling factors are all one") {
  CHECK(diamond_scaling(1) == std::vector<double>{1.0});
  CHECK(diamond_scaling(2) == std::vector<double>{1.0, 1.0});
  CHECK(diamond_scaling(5) == std::vector<double>(5, 1.0));
}

TEST_CASE("refinement error of the Brownian bracket scales like N^{-1/2}") {
  const SimulatorSpec spec{SimulatorKind::brownian, 1.0, 1.0};
  const std::vector<int> grids = {32, 64, 128, 256};
  std::vector<double> log_n, log_rms;
  for (int grid : grids) {
    const std::vector<double> sq =
        mc_collect(1000, 2, [&](std::uint64_t pid) {
          const MultiPath path = simulate_path(spec, 1, grid, 1212, pid);
          const double err = realized_covariation(path, 1, 1, false) - 1.0;
          return err * err;
        });
    const double rms = std::sqrt(summarize(sq).mean);
    log_n.push_back(std::log(static_cast<double>(grid)));
    log_rms.push_back(std::log(rms));
  }
  // Least-squares slope of log RMS against log N.
  const std::size_t m = grids.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mean_x += log_n[i];
    mean_y += log_rms[i];
  }
  mean_x /= static_cast<double>(m);
  mean_y /= static_cast<double>(m);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    num += (log_n[i] - mean_x) * (log_rms[i] - mean_y);
    den += (log_n[i] - mean_x) * (log_n[i] - mean_x);
  }
  const double slope = num / den;
  CHECK(slope <= -0.4);
  CHECK(slope >= -0.6);
}

TEST_CASE("recursion checks pass their gates") {
  McOptions opts;
  opts.threads = 2;
  SUBCASE("brownian n=2 targets zero") {
    const VerificationReport r = recursion_check(
        {SimulatorKind::brownian, 1.0, 1.0}, 2, 5000, 64, 31, opts);
    CHECK(r.target == 0.0);
    CHECK(r.pass);
  }
  SUBCASE("poisson n=2 is jump dominated") {
    const VerificationReport r = recursion_check(
        {SimulatorKind::poisson, 1.0, 1.0}, 2, 5000, 64, 32, opts);
    CHECK(r.target == 1.0);
    CHECK(r.pass);
    double jump_mean = 0.0;
    double bracket_mean = 0.0;
    for (const auto& [key, value] : r.extras) {
      if (key == "jump_mean") jump_mean = value;
      if (key == "bracket_mean") bracket_mean = value;
    }
    CHECK(jump_mean > 0.9);
    CHECK(std::abs(bracket_mean) < 0.1);
  }
  SUBCASE("expmart n=1 targets e-1") {
    const VerificationReport r = recursion_check(
        {SimulatorKind::expmart, 1.0, 1.0}, 1, 5000, 128, 33, opts);
    CHECK(std::abs(r.target - 1.718281828459045) <= 1e-12);
    CHECK(r.pass);
  }
}
