#include "rcum/mc.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace rcum {

namespace {

// Runs work(begin, end) over [0, n) split into contiguous blocks.
void run_blocks(std::size_t n, int threads,
                const std::function<void(std::size_t, std::size_t)>& work) {
  const std::size_t worker_count =
      std::max<std::size_t>(1, static_cast<std::size_t>(threads));
  if (worker_count == 1 || n < 2 * worker_count) {
    work(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t block = (n + worker_count - 1) / worker_count;
  for (std::size_t w = 0; w < worker_count; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<double> mc_collect(std::size_t n_paths, int threads,
                               const std::function<double(std::uint64_t)>& f) {
  std::vector<double> values(n_paths);
  run_blocks(n_paths, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      values[p] = f(static_cast<std::uint64_t>(p));
    }
  });
  return values;
}

std::vector<std::vector<double>> mc_collect_multi(
    std::size_t n_paths, int threads, std::size_t width,
    const std::function<void(std::uint64_t, std::span<double>)>& f) {
  std::vector<std::vector<double>> columns(width,
                                           std::vector<double>(n_paths));
  run_blocks(n_paths, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> row(width);
    for (std::size_t p = begin; p < end; ++p) {
      f(static_cast<std::uint64_t>(p), row);
      for (std::size_t c = 0; c < width; ++c) columns[c][p] = row[c];
    }
  });
  return columns;
}

}  // namespace rcum
