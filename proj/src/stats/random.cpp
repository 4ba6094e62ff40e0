#include <random>

#include "metricide/stats.hpp"

namespace metricide::stats {

// The conversion is spelled out rather than left to
// std::uniform_real_distribution, whose output is implementation-defined.
std::vector<double> random_baseline(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> out(n);
  for (auto& x : out) x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return out;
}

}  // namespace metricide::stats
