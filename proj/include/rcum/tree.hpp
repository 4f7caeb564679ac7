#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rcum/cumulants.hpp"
#include "rcum/path.hpp"

namespace rcum {

struct TreeEdge {
  int child = 0;             // node index at the next time step
  double probability = 0.0;  // strictly positive
};

// Finite-state discrete-time martingale model: per time step a list of
// states carrying probability mass, transitions between consecutive levels,
// and a terminal payoff (the random variable X) per leaf.
struct TreeModel {
  int depth = 0;
  std::vector<std::vector<double>> masses;                      // [t][node]
  std::vector<std::vector<std::vector<TreeEdge>>> transitions;  // [t][node]
  std::vector<double> payoffs;                                  // per leaf

  int nodes_at(int t) const { return static_cast<int>(masses[t].size()); }

  // Throws ModelError: probabilities must sum to 1 per node, level masses
  // must match forward propagation and sum to 1.
  void validate() const;

  // Recombining +/-1 walk with probability 1/2; payoff = terminal level.
  static TreeModel symmetric_binomial(int depth);

  static TreeModel from_json_text(const std::string& text);
  static TreeModel from_json_file(const std::string& filename);
  std::string to_json_text() const;
};

// Conditional moments E[X^k | node] and conditional cumulants X^{(k)} of the
// terminal payoff at every node, k = 1..order.
struct CumulantTree {
  int order = 0;
  std::vector<std::vector<MomentVector>> moments;      // [t][node]
  std::vector<std::vector<CumulantVector>> cumulants;  // [t][node]

  // Unconditional cumulants of X; requires a single level-0 node.
  const CumulantVector& root() const;
};

CumulantTree tree_backward_induction(const TreeModel& model, int order,
                                     int max_order = kDefaultMaxOrder);

inline constexpr std::size_t kMaxEnumeratedPaths = 1000000;

// One scenario through the tree: node index per time start_time..end_time
// and its conditional probability given the starting node.
struct TreeScenario {
  double probability = 1.0;
  std::vector<int> nodes;
};

// Throws CapacityError past kMaxEnumeratedPaths.
std::vector<TreeScenario> enumerate_scenarios(const TreeModel& model,
                                              int start_time, int start_node,
                                              int end_time);

// All root-to-leaf trajectories of X^{(1..order)}, weighted by level-0 mass,
// on the integer grid {0,...,depth}.
std::vector<std::pair<double, MultiPath>> tree_enumerate_paths(
    const TreeModel& model, const CumulantTree& ct);

}  // namespace rcum
