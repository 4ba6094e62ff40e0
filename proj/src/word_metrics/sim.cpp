#include <algorithm>
#include <cmath>

#include "metricide/unicode.hpp"
#include "metricide/word_metrics.hpp"

namespace metricide {

namespace {

void split_into(std::string_view s, char sep, std::vector<std::string>& out) {
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(sep, start), s.size());
    if (end > start) out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
}

// Mean vector of the in-vocabulary tokens; empty when none is known.
std::vector<double> mean_vector(std::span<const std::string> tokens,
                                const EmbeddingTable& table) {
  std::vector<double> sum(table.dimension(), 0.0);
  std::size_t hits = 0;
  for (const auto& t : tokens) {
    const auto* v = table.find(t);
    if (v == nullptr) continue;
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += (*v)[k];
    ++hits;
  }
  if (hits == 0) return {};
  for (auto& x : sum) x /= static_cast<double>(hits);
  return sum;
}

}  // namespace

std::vector<std::string> verbalize_mr(const MeaningRepresentation& mr) {
  std::vector<std::string> bag;
  split_into(unicode::to_lower(mr.act_type), '_', bag);
  for (const auto& slot : mr.slots) {
    bag.push_back(unicode::to_lower(slot.name));
    if (slot.value) {
      for (auto& t : tokenize(*slot.value).tokens) {
        if (!is_punctuation(t)) bag.push_back(std::move(t));
      }
    }
  }
  return bag;
}

double embedding_similarity(std::span<const std::string> a,
                            std::span<const std::string> b,
                            const EmbeddingTable& embeddings) {
  const auto va = mean_vector(a, embeddings);
  const auto vb = mean_vector(b, embeddings);
  if (va.empty() || vb.empty()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < va.size(); ++k) {
    dot += va[k] * vb[k];
    na += va[k] * va[k];
    nb += vb[k] * vb[k];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

double sim(const MeaningRepresentation& mr, const TokenSequence& candidate,
           const EmbeddingTable& embeddings) {
  return embedding_similarity(verbalize_mr(mr), candidate.tokens, embeddings);
}

double sim(const MeaningRepresentation& mr, const TokenSequence& candidate,
           const EmbeddingTable* embeddings) {
  if (embeddings == nullptr) {
    throw MissingResourceError("sim needs word vectors: pass --embeddings PATH");
  }
  return sim(mr, candidate, *embeddings);
}

}  // namespace metricide
