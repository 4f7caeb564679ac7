#include "rcum/path.hpp"

#include <stdexcept>
#include <string>

namespace rcum {

void MultiPath::validate() const {
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) {
      throw std::invalid_argument("MultiPath: grid not strictly increasing at index " +
                                  std::to_string(j));
    }
  }
  for (const auto& component : components) {
    if (component.size() != grid.size()) {
      throw std::invalid_argument("MultiPath: component length differs from grid length");
    }
  }
  if (jumps && !grid.empty()) {
    for (const JumpMark& mark : *jumps) {
      if (!(mark.time > grid.front() && mark.time <= grid.back())) {
        throw std::invalid_argument("MultiPath: jump mark time outside (t_0, t_N]");
      }
    }
  }
}

}  // namespace rcum
