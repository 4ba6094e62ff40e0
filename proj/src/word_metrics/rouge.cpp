#include <algorithm>
#include <stdexcept>

#include "metricide/word_metrics.hpp"

namespace metricide {

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(const TokenSequence& candidate, References refs) {
  if (refs.empty()) throw std::invalid_argument("empty reference list");
  double best = 0.0;
  for (const auto& r : refs) {
    const std::size_t lcs = lcs_length(candidate.tokens, r.tokens);
    if (lcs == 0) continue;
    const double p = static_cast<double>(lcs) / static_cast<double>(candidate.size());
    const double rec = static_cast<double>(lcs) / static_cast<double>(r.size());
    best = std::max(best, 2.0 * p * rec / (p + rec));
  }
  return best;
}

}  // namespace metricide
