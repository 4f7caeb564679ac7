#pragma once

#include <cstdint>
#include <string_view>

#include "rcum/path.hpp"
#include "rcum/rng.hpp"

namespace rcum {

enum class SimulatorKind { poisson, expmart, brownian };

const char* simulator_name(SimulatorKind kind);
SimulatorKind simulator_kind_from_name(std::string_view name);

struct SimulatorSpec {
  SimulatorKind kind = SimulatorKind::brownian;
  double lambda = 1.0;   // poisson intensity
  double horizon = 1.0;  // T
};

// Compensated Poisson martingale M_t = N_t - lambda*t, X = M_T. Jump times
// are sampled exactly via exponential interarrivals; X^{(k)}_t = lambda(T-t)
// for k >= 2. Every jump is recorded as a mark with increment (1,0,...,0).
MultiPath simulate_poisson_martingale(double lambda, double horizon,
                                      int grid_size, int order, PathRng& rng);

// Exponential Brownian martingale M_t = exp(W_t - t/2), X = M_T. Components
// come from the closed-form conditional moments
// E[X^k|F_t] = M_t^k exp(k(k-1)(T-t)/2). Continuous: empty mark list.
MultiPath simulate_exponential_martingale(double horizon, int grid_size,
                                          int order, PathRng& rng);

// M = W, X = W_T: X^{(2)}_t = T - t, all higher components vanish.
MultiPath simulate_brownian_martingale(double horizon, int grid_size,
                                       int order, PathRng& rng);

// Seed-based wrappers using the stream of path index 0.
MultiPath simulate_poisson_martingale(double lambda, double horizon,
                                      int grid_size, int order,
                                      std::uint64_t seed);
MultiPath simulate_exponential_martingale(double horizon, int grid_size,
                                          int order, std::uint64_t seed);
MultiPath simulate_brownian_martingale(double horizon, int grid_size,
                                       int order, std::uint64_t seed);

MultiPath simulate_path(const SimulatorSpec& spec, int order, int grid_size,
                        std::uint64_t seed, std::uint64_t path_id);

// kappa_k of X given F_0, in closed form.
double terminal_cumulant(const SimulatorSpec& spec, int k);

}  // namespace rcum
