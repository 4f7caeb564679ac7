#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rcum {

struct McOptions {
  double z_gate = 4.0;
  double abs_tol = 1e-12;
  int threads = 1;
};

// Evaluates f(path_id) for path_id = 0..n_paths-1. Values land in a vector
// indexed by path id and are reduced sequentially afterwards, so results do
// not depend on the worker count.
std::vector<double> mc_collect(std::size_t n_paths, int threads,
                               const std::function<double(std::uint64_t)>& f);

// Same, with `width` outputs per path; returns one column per output.
std::vector<std::vector<double>> mc_collect_multi(
    std::size_t n_paths, int threads, std::size_t width,
    const std::function<void(std::uint64_t, std::span<double>)>& f);

}  // namespace rcum
