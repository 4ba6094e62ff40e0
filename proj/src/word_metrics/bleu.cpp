#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "metricide/word_metrics.hpp"

namespace metricide {

namespace {

void require_references(References refs) {
  if (refs.empty()) throw std::invalid_argument("empty reference list");
}

// Reference length closest to c; on a tie the shorter one wins.
std::size_t closest_ref_length(std::size_t c, References refs) {
  std::size_t best = refs.front().size();
  for (const auto& r : refs) {
    const auto d = [c](std::size_t len) {
      return len > c ? len - c : c - len;
    };
    const std::size_t len = r.size();
    if (d(len) < d(best) || (d(len) == d(best) && len < best)) best = len;
  }
  return best;
}

double brevity_penalty(std::size_t c, std::size_t r) {
  if (c == 0) return 0.0;
  if (c > r) return 1.0;
  return std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c));
}

}  // namespace

NgramPrecision modified_precision(const TokenSequence& candidate,
                                  References refs, std::size_t n) {
  NgramPrecision out;
  const NgramCounts cand = ngrams(candidate, n);
  NgramCounts max_ref;
  for (const auto& r : refs) {
    for (const auto& [g, count] : ngrams(r, n)) {
      int& slot = max_ref[g];
      slot = std::max(slot, count);
    }
  }
  for (const auto& [g, count] : cand) {
    out.total += static_cast<std::size_t>(count);
    auto it = max_ref.find(g);
    if (it != max_ref.end()) {
      out.matched += static_cast<std::size_t>(std::min(count, it->second));
    }
  }
  return out;
}

double bleu(const TokenSequence& candidate, References refs, int max_n) {
  require_references(refs);
  if (max_n < 1) throw std::invalid_argument("bleu: max_n must be >= 1");
  if (candidate.empty()) return 0.0;

  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const auto p = modified_precision(candidate, refs, static_cast<std::size_t>(n));
    const double precision =
        p.matched == 0 ? kBleuSmoothingEpsilon
                       : static_cast<double>(p.matched) / static_cast<double>(p.total);
    log_sum += std::log(precision);
  }
  const double bp = brevity_penalty(candidate.size(),
                                    closest_ref_length(candidate.size(), refs));
  return bp * std::exp(log_sum / max_n);
}

double corpus_bleu(std::span<const TokenSequence> candidates,
                   std::span<const std::vector<TokenSequence>> references,
                   int max_n) {
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("corpus_bleu: candidate/reference count mismatch");
  }
  if (max_n < 1) throw std::invalid_argument("corpus_bleu: max_n must be >= 1");
  std::vector<std::size_t> matched(max_n, 0), total(max_n, 0);
  std::size_t c = 0, r = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const References refs(references[i]);
    require_references(refs);
    for (int n = 1; n <= max_n; ++n) {
      const auto p = modified_precision(candidates[i], refs, static_cast<std::size_t>(n));
      matched[n - 1] += p.matched;
      total[n - 1] += p.total;
    }
    c += candidates[i].size();
    r += closest_ref_length(candidates[i].size(), refs);
  }
  if (c == 0) return 0.0;
  double log_sum = 0.0;
  for (int n = 0; n < max_n; ++n) {
    const double precision =
        matched[n] == 0 ? kBleuSmoothingEpsilon
                        : static_cast<double>(matched[n]) / static_cast<double>(total[n]);
    log_sum += std::log(precision);
  }
  return brevity_penalty(c, r) * std::exp(log_sum / max_n);
}

}  // namespace metricide
