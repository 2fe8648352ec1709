#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "curvlab/catalog.hpp"

namespace curvlab {

/// Point `index` of the seeded sequence: a mt19937_64 seeded from
/// (seed, index) draws uniform coordinates in the region, redrawing until
/// every chart guard holds. Independent of how indices are split across
/// workers. Throws ContractViolation when no valid point is found in
/// `max_attempts` draws (region outside the chart domain).
ChartPoint sample_point(const Chart& chart, const Region& region, std::uint64_t seed, std::uint64_t index,
                        int max_attempts = 10000);

std::vector<ChartPoint> sample_points(const Chart& chart, const Region& region, std::size_t count,
                                      std::uint64_t seed);

/// Worker count for a hint: 0 means the hardware concurrency.
int resolve_workers(int hint);

/// out[i] = f(i) for i < n, computed by `workers` threads taking indices
/// with a fixed stride. Exceptions are rethrown for the lowest failing index.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, int workers, F&& f) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t w = static_cast<std::size_t>(workers < 1 ? 1 : workers);
  auto body = [&](std::size_t start) {
    for (std::size_t i = start; i < n; i += w) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (w == 1 || n < 2) {
    body(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < w && k < n; ++k) pool.emplace_back(body, k);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace curvlab
