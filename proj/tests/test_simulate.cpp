#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rcum/mc.hpp"
#include "rcum/numeric.hpp"
#include "rcum/simulate.hpp"

using namespace rcum;

TEST_CASE("compensated Poisson simulator") {
  PathRng rng(1234, 0);
  const double lambda = 1.0;
  const MultiPath path = simulate_poisson_martingale(lambda, 1.0, 16, 3, rng);
  path.validate();
  REQUIRE(path.order() == 3);
  REQUIRE(path.points() == 17);
  REQUIRE(path.jumps.has_value());

  SUBCASE("higher components are lambda*(T-t), zero at T") {
    for (std::size_t j = 0; j < path.points(); ++j) {
      const double expected = lambda * (1.0 - path.grid[j]);
      CHECK(std::abs(path.components[1][j] - expected) <= 1e-14);
      CHECK(std::abs(path.components[2][j] - expected) <= 1e-14);
    }
    CHECK(path.components[1].back() == 0.0);
    CHECK(path.components[2].back() == 0.0);
  }

  SUBCASE("third conditional cumulant at t=0 equals lambda*T") {
    CHECK(path.components[2][0] == lambda * 1.0);
  }

  SUBCASE("jump marks are unit jumps of the first component") {
    for (const JumpMark& mark : *path.jumps) {
      CHECK(mark.increment == std::vector<double>{1.0, 0.0, 0.0});
      CHECK(mark.time > 0.0);
      CHECK(mark.time <= 1.0);
    }
    // N_T = M_T + lambda*T must equal the mark count.
    const double n_t = path.components[0].back() + lambda * 1.0;
    CHECK(n_t == static_cast<double>(path.jumps->size()));
  }

  SUBCASE("grid increments decompose into jumps plus drift") {
    for (std::size_t j = 1; j < path.points(); ++j) {
      int jumps_in_cell = 0;
      for (const JumpMark& mark : *path.jumps) {
        if (mark.time > path.grid[j - 1] && mark.time <= path.grid[j]) {
          ++jumps_in_cell;
        }
      }
      const double dm = path.components[0][j] - path.components[0][j - 1];
      const double drift = -lambda * (path.grid[j] - path.grid[j - 1]);
      CHECK(std::abs(dm - jumps_in_cell - drift) <= 1e-12);
    }
  }
}

TEST_CASE("zero-intensity Poisson path is constant") {
  PathRng rng(9, 0);
  const MultiPath path = simulate_poisson_martingale(0.0, 1.0, 8, 2, rng);
  CHECK(path.jumps->empty());
  for (double v : path.components[0]) CHECK(v == 0.0);
  for (double v : path.components[1]) CHECK(v == 0.0);
}

TEST_CASE("exponential Brownian martingale simulator") {
  PathRng rng(777, 0);
  const MultiPath path = simulate_exponential_martingale(1.0, 64, 3, rng);
  path.validate();
  REQUIRE(path.jumps.has_value());
  CHECK(path.jumps->empty());

  SUBCASE("kappa_2 at time zero is e - 1") {
    CHECK(std::abs(path.components[1][0] - (std::numbers::e - 1.0)) <= 1e-12);
  }
  SUBCASE("kappa_3 at time zero is e^3 - 3e + 2") {
    const double target = std::exp(3.0) - 3.0 * std::numbers::e + 2.0;
    CHECK(std::abs(path.components[2][0] - target) <= 1e-12);
  }
  SUBCASE("degenerate conditional law at T") {
    CHECK(std::abs(path.components[1].back()) <= 1e-12);
    CHECK(std::abs(path.components[2].back()) <= 1e-12);
  }
  SUBCASE("grid_size 1 gives a two-point path") {
    PathRng rng2(777, 1);
    const MultiPath tiny = simulate_exponential_martingale(1.0, 1, 2, rng2);
    CHECK(tiny.points() == 2);
  }
}

TEST_CASE("Brownian martingale simulator") {
  PathRng rng(31415, 0);
  const double horizon = 2.0;
  const MultiPath path = simulate_brownian_martingale(horizon, 32, 3, rng);
  CHECK(path.components[1][0] == horizon);  // Var(W_T)
  for (std::size_t j = 1; j < path.points(); ++j) {
    const double d2 = path.components[1][j] - path.components[1][j - 1];
    const double dt = path.grid[j] - path.grid[j - 1];
    CHECK(std::abs(d2 + dt) <= 1e-14);
  }
  for (double v : path.components[2]) CHECK(v == 0.0);
}

TEST_CASE("per-path streams are deterministic and decoupled") {
  const SimulatorSpec spec{SimulatorKind::expmart, 1.0, 1.0};
  const MultiPath a = simulate_path(spec, 2, 16, 42, 7);
  const MultiPath b = simulate_path(spec, 2, 16, 42, 7);
  const MultiPath c = simulate_path(spec, 2, 16, 42, 8);
  CHECK(a.components[0] == b.components[0]);
  CHECK(a.components[0] != c.components[0]);
}

TEST_CASE("terminal cumulants in closed form") {
  CHECK(terminal_cumulant({SimulatorKind::poisson, 1.0, 1.0}, 3) == 1.0);
  CHECK(terminal_cumulant({SimulatorKind::poisson, 0.5, 2.0}, 4) == 1.0);
  CHECK(terminal_cumulant({SimulatorKind::brownian, 1.0, 1.5}, 2) == 1.5);
  CHECK(terminal_cumulant({SimulatorKind::brownian, 1.0, 1.5}, 3) == 0.0);
  const SimulatorSpec em{SimulatorKind::expmart, 1.0, 1.0};
  CHECK(std::abs(terminal_cumulant(em, 2) - (std::numbers::e - 1.0)) <= 1e-12);
  const double k3 = std::exp(3.0) - 3.0 * std::numbers::e + 2.0;
  CHECK(std::abs(terminal_cumulant(em, 3) - k3) <= 1e-12);
}

TEST_CASE("simulated martingales have the right mean at T") {
  const std::uint64_t seed = 8899;
  const std::size_t n_paths = 100000;
  for (const SimulatorKind kind :
       {SimulatorKind::poisson, SimulatorKind::expmart,
        SimulatorKind::brownian}) {
    const SimulatorSpec spec{kind, 1.0, 1.0};
    const std::vector<double> terminal =
        mc_collect(n_paths, 2, [&](std::uint64_t pid) {
          return simulate_path(spec, 1, 4, seed, pid).components[0].back();
        });
    const SampleStats stats = summarize(terminal);
    const double m0 = kind == SimulatorKind::expmart ? 1.0 : 0.0;
    CHECK(std::abs(stats.mean - m0) <= 4.0 * stats.standard_error);
  }
}

TEST_CASE("simulator argument validation") {
  PathRng rng(1, 0);
  CHECK_THROWS_AS(simulate_brownian_martingale(1.0, 0, 2, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_brownian_martingale(-1.0, 4, 2, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_poisson_martingale(-0.5, 1.0, 4, 2, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_exponential_martingale(1.0, 4, 0, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulator_kind_from_name("heston"), std::invalid_argument);
}
