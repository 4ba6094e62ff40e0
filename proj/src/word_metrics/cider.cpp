#include <cmath>
#include <set>
#include <stdexcept>

#include "metricide/word_metrics.hpp"

namespace metricide {

namespace {

using Vector = std::map<Ngram, double>;

double norm(const Vector& v) {
  double s = 0.0;
  for (const auto& [g, w] : v) s += w * w;
  return std::sqrt(s);
}

double cosine(const Vector& a, const Vector& b) {
  const double na = norm(a), nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  double dot = 0.0;
  for (const auto& [g, w] : a) {
    auto it = b.find(g);
    if (it != b.end()) dot += w * it->second;
  }
  return dot / (na * nb);
}

}  // namespace

CiderScorer::CiderScorer(std::span<const std::vector<TokenSequence>> reference_sets)
    : corpus_size_(reference_sets.size()),
      log_corpus_size_(std::log(static_cast<double>(reference_sets.size()))) {
  if (reference_sets.empty()) throw std::invalid_argument("cider: empty corpus");
  for (const auto& refs : reference_sets) {
    std::set<Ngram> seen;
    for (const auto& r : refs) {
      for (std::size_t n = 1; n <= kMaxN; ++n) {
        for (const auto& [g, count] : ngrams(r, n)) seen.insert(g);
      }
    }
    for (const auto& g : seen) ++document_frequency_[g];
  }
}

double CiderScorer::idf(const Ngram& gram) const {
  // A one-document corpus carries no frequency information; weight uniformly
  // instead of zeroing every n-gram.
  if (corpus_size_ == 1) return 1.0;
  auto it = document_frequency_.find(gram);
  const double df = it == document_frequency_.end() ? 1.0 : static_cast<double>(it->second);
  return log_corpus_size_ - std::log(df);
}

double CiderScorer::score(const TokenSequence& candidate, References refs) const {
  if (refs.empty()) throw std::invalid_argument("empty reference list");
  auto vectorize = [this](const TokenSequence& s, std::size_t n) {
    Vector v;
    for (const auto& [g, count] : ngrams(s, n)) v.emplace(g, count * idf(g));
    return v;
  };
  double total = 0.0;
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    const Vector cv = vectorize(candidate, n);
    double sum = 0.0;
    for (const auto& r : refs) sum += cosine(cv, vectorize(r, n));
    total += sum / static_cast<double>(refs.size());
  }
  return 10.0 * total / kMaxN;
}

std::vector<double> cider(std::span<const CiderItem> corpus) {
  if (corpus.empty()) throw std::invalid_argument("cider: empty corpus");
  std::vector<std::vector<TokenSequence>> sets;
  sets.reserve(corpus.size());
  for (const auto& item : corpus) sets.push_back(item.references);
  const CiderScorer scorer(sets);
  std::vector<double> out;
  out.reserve(corpus.size());
  for (const auto& item : corpus) out.push_back(scorer.score(item.candidate, item.references));
  return out;
}

}  // namespace metricide
