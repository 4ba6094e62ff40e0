#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metricide/word_metrics.hpp"

namespace metricide {

double lepor_length_penalty(std::size_t candidate_len, std::size_t reference_len) {
  const double c = static_cast<double>(candidate_len);
  const double r = static_cast<double>(reference_len);
  if (c < r) return std::exp(1.0 - r / c);
  if (c > r) return std::exp(1.0 - c / r);
  return 1.0;
}

namespace {

double lepor_single(std::span<const std::string> cand, std::span<const std::string> ref,
                    const LeporParams& params) {
  if (cand.empty() || ref.empty()) return 0.0;
  const double c = static_cast<double>(cand.size());
  const double r = static_cast<double>(ref.size());

  // Positions are 1-based; each candidate word takes the still-free reference
  // occurrence whose relative position is nearest its own (leftmost on ties).
  std::vector<bool> used(ref.size(), false);
  std::size_t matched = 0;
  double pd_sum = 0.0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const double ci = static_cast<double>(i + 1) / c;
    std::size_t best = ref.size();
    double best_d = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (used[j] || ref[j] != cand[i]) continue;
      const double d = std::abs(ci - static_cast<double>(j + 1) / r);
      if (best == ref.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best != ref.size()) {
      used[best] = true;
      ++matched;
      pd_sum += best_d;
    } else if (params.unmatched == LeporUnmatched::to_origin) {
      pd_sum += ci;
    }
  }
  if (matched == 0) return 0.0;

  const double npd = pd_sum / c;
  const double p = static_cast<double>(matched) / c;
  const double rec = static_cast<double>(matched) / r;
  const double harmonic = (params.alpha + params.beta) / (params.alpha / rec + params.beta / p);
  return lepor_length_penalty(cand.size(), ref.size()) * std::exp(-npd) * harmonic;
}

}  // namespace

double lepor(const TokenSequence& candidate, References refs, const LeporParams& params) {
  if (refs.empty()) throw std::invalid_argument("empty reference list");
  double best = 0.0;
  for (const auto& r : refs) {
    best = std::max(best, lepor_single(candidate.tokens, r.tokens, params));
  }
  return best;
}

}  // namespace metricide
