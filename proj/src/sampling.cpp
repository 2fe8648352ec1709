#include "curvlab/sampling.hpp"

#include <random>

namespace curvlab {

ChartPoint sample_point(const Chart& chart, const Region& region, std::uint64_t seed, std::uint64_t index,
                        int max_attempts) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Point4 x{};
    for (int i = 0; i < kDim; ++i) {
      const auto [lo, hi] = region[static_cast<size_t>(i)];
      x[static_cast<size_t>(i)] = lo + (hi - lo) * uniform();
    }
    ChartPoint p = chart.point(x);
    if (p.valid) return p;
  }
  throw ContractViolation("no valid point of chart '" + chart.id + "' found in the sampling region after " +
                          std::to_string(max_attempts) + " draws");
}

std::vector<ChartPoint> sample_points(const Chart& chart, const Region& region, std::size_t count,
                                      std::uint64_t seed) {
  std::vector<ChartPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_point(chart, region, seed, i));
  return out;
}

int resolve_workers(int hint) {
  if (hint > 0) return hint;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace curvlab
