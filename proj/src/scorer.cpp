#include "metricide/scorer.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "metricide/unicode.hpp"

namespace metricide {

namespace {

struct Prepared {
  TokenSequence candidate;
  std::vector<TokenSequence> references;  // only the non-empty ones
};

void score_one(const Instance& inst, const Prepared& prep, const CiderScorer* cider_scorer,
               const ScoringConfig& cfg, MetricVector& out) {
  const auto on = [&](Metric m) { return cfg.metrics.contains(m); };
  const TokenSequence& cand = prep.candidate;
  const References refs(prep.references);

  if (!refs.empty()) {
    if (on(Metric::ter)) out[Metric::ter] = ter(cand, refs);
    constexpr Metric bleus[] = {Metric::bleu1, Metric::bleu2, Metric::bleu3, Metric::bleu4};
    for (int n = 1; n <= 4; ++n) {
      if (on(bleus[n - 1])) out[bleus[n - 1]] = bleu(cand, refs, n);
    }
    if (on(Metric::rouge)) out[Metric::rouge] = rouge_l(cand, refs);
    if (on(Metric::nist)) out[Metric::nist] = nist(cand, refs);
    if (on(Metric::lepor)) out[Metric::lepor] = lepor(cand, refs, cfg.lepor);
    if (on(Metric::cider) && cider_scorer) out[Metric::cider] = cider_scorer->score(cand, refs);
    if (on(Metric::meteor)) out[Metric::meteor] = meteor(cand, refs, cfg.synonyms, cfg.meteor);
  }
  if (on(Metric::sim)) out[Metric::sim] = sim(inst.mr, cand, cfg.embeddings);

  if (on(Metric::len)) out[Metric::len] = static_cast<double>(unicode::count_non_space(inst.output));
  if (on(Metric::msp)) {
    out[Metric::msp] = static_cast<double>(misspellings(cand, cfg.dictionary));
  }
  if (on(Metric::prs)) out[Metric::prs] = parse_score(inst);

  const bool has_words = std::any_of(cand.tokens.begin(), cand.tokens.end(),
                                     [](const std::string& t) { return !is_punctuation(t); });
  if (!has_words) return;
  const SurfaceStats s = surface_stats(cand, inst.output);
  if (on(Metric::re)) out[Metric::re] = s.re;
  if (on(Metric::wps)) out[Metric::wps] = s.wps;
  if (on(Metric::sps)) out[Metric::sps] = s.sps;
  if (on(Metric::cpw)) out[Metric::cpw] = s.cpw;
  if (on(Metric::spw)) out[Metric::spw] = s.spw;
  if (on(Metric::pol)) out[Metric::pol] = static_cast<double>(s.pol);
  if (on(Metric::ppw)) out[Metric::ppw] = s.ppw;
}

}  // namespace

std::vector<MetricVector> score_corpus(const Corpus& corpus, const ScoringConfig& config) {
  if (config.metrics.contains(Metric::sim) && config.embeddings == nullptr) {
    throw MissingResourceError("sim needs word vectors: pass --embeddings PATH");
  }
  if (config.metrics.contains(Metric::msp) && config.dictionary == nullptr) {
    throw MissingResourceError("msp needs a word list: pass --dictionary PATH");
  }

  const auto& instances = corpus.instances;
  std::vector<Prepared> prepared(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    prepared[i].candidate = tokenize(instances[i].output);
    for (const auto& r : instances[i].references) {
      auto seq = tokenize(r);
      if (!seq.empty()) prepared[i].references.push_back(std::move(seq));
    }
  }

  // One CIDEr scorer per dataset, built once and shared read-only.
  std::map<std::string, CiderScorer> cider_by_dataset;
  if (config.metrics.contains(Metric::cider)) {
    std::map<std::string, std::vector<std::vector<TokenSequence>>> sets;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (!prepared[i].references.empty()) {
        sets[instances[i].dataset].push_back(prepared[i].references);
      }
    }
    for (const auto& [dataset, refs] : sets) cider_by_dataset.emplace(dataset, CiderScorer(refs));
  }

  std::vector<MetricVector> out(instances.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < instances.size(); i += stride) {
      auto it = cider_by_dataset.find(instances[i].dataset);
      const CiderScorer* cs = it == cider_by_dataset.end() ? nullptr : &it->second;
      score_one(instances[i], prepared[i], cs, config, out[i]);
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(1, instances.size()));
  if (jobs == 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t, jobs);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace metricide
