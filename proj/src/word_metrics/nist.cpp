#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metricide/word_metrics.hpp"

namespace metricide {

double nist_brevity_factor(double candidate_len, double mean_ref_len) {
  // beta puts the factor at exactly 0.5 when c / r = 2/3.
  static const double beta = std::log(0.5) / std::pow(std::log(2.0 / 3.0), 2);
  if (mean_ref_len <= 0.0) return 1.0;
  const double ratio = std::min(candidate_len / mean_ref_len, 1.0);
  if (ratio <= 0.0) return 0.0;
  return std::exp(beta * std::pow(std::log(ratio), 2));
}

double nist(const TokenSequence& candidate, References refs, int max_n) {
  if (refs.empty()) throw std::invalid_argument("empty reference list");
  if (max_n < 1) throw std::invalid_argument("nist: max_n must be >= 1");
  if (candidate.empty()) return 0.0;

  // Pooled reference counts for orders 1..max_n; info weights need the
  // (n-1)-gram prefix counts, and the empty prefix counts every word.
  std::vector<NgramCounts> pooled(max_n + 1);
  std::size_t ref_words = 0;
  for (const auto& r : refs) {
    ref_words += r.size();
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& [g, count] : ngrams(r, n)) pooled[n][g] += count;
    }
  }
  auto info = [&](const Ngram& g) {
    const auto n = g.size();
    const double denom = pooled[n].at(g);
    double numer = static_cast<double>(ref_words);
    if (n > 1) numer = pooled[n - 1].at(Ngram(g.begin(), g.end() - 1));
    return std::log2(numer / denom);
  };

  double score = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const NgramCounts cand = ngrams(candidate, n);
    if (cand.empty()) continue;
    NgramCounts max_ref;
    for (const auto& r : refs) {
      for (const auto& [g, count] : ngrams(r, n)) {
        int& slot = max_ref[g];
        slot = std::max(slot, count);
      }
    }
    std::size_t cand_total = 0;
    double weighted = 0.0;
    for (const auto& [g, count] : cand) {
      cand_total += static_cast<std::size_t>(count);
      auto it = max_ref.find(g);
      if (it == max_ref.end()) continue;
      weighted += std::min(count, it->second) * info(g);
    }
    score += weighted / static_cast<double>(cand_total);
  }
  const double mean_ref_len =
      static_cast<double>(ref_words) / static_cast<double>(refs.size());
  return score * nist_brevity_factor(static_cast<double>(candidate.size()), mean_ref_len);
}

}  // namespace metricide
