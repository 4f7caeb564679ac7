#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace rcum {

// Exact jump of the component vector at one instant, as recorded by the
// simulator that produced the path.
struct JumpMark {
  double time = 0.0;
  std::vector<double> increment;  // delta X^{(1..k)} at the jump
};

// Sampled trajectory of (X^{(1)},...,X^{(k)}) on a strictly increasing grid.
// jumps == nullopt means the jump decomposition is unknown (e.g. CSV input);
// an engaged empty vector means "known to have no jumps".
struct MultiPath {
  std::vector<double> grid;
  std::vector<std::vector<double>> components;  // [i][j] = X^{(i+1)} at grid[j]
  std::optional<std::vector<JumpMark>> jumps;

  int order() const { return static_cast<int>(components.size()); }
  std::size_t points() const { return grid.size(); }

  // Strict grid monotonicity, uniform component lengths, mark times in
  // (t_0, t_N]. Throws std::invalid_argument.
  void validate() const;
};

}  // namespace rcum
