#pragma once

#include <cstddef>
#include <vector>

#include "metricide/corpus.hpp"
#include "metricide/grammar_metrics.hpp"
#include "metricide/metric_vector.hpp"
#include "metricide/word_metrics.hpp"

namespace metricide {

struct ScoringConfig {
  MetricSelection metrics = MetricSelection::all();
  const EmbeddingTable* embeddings = nullptr;  // required when sim is enabled
  const Dictionary* dictionary = nullptr;      // required when msp is enabled
  const SynonymLexicon* synonyms = nullptr;    // optional METEOR stage 3
  LeporParams lepor;
  MeteorParams meteor;
  std::size_t jobs = 1;  // worker threads; results do not depend on it
};

/// One MetricVector per instance, in corpus order. CIDEr document
/// frequencies are collected per dataset. Throws MissingResourceError up
/// front when an enabled metric lacks its resource.
std::vector<MetricVector> score_corpus(const Corpus& corpus, const ScoringConfig& config);

}  // namespace metricide
