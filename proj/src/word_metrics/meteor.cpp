#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "metricide/word_metrics.hpp"

namespace metricide {

namespace {

using Link = std::pair<std::size_t, std::size_t>;

// Beyond this many joint subset choices a stage stops searching and pairs
// occurrences left to right.
constexpr std::size_t kMaxAlignmentChoices = 4096;

std::size_t crossings(const std::vector<Link>& links) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < links.size(); ++a) {
    for (std::size_t b = a + 1; b < links.size(); ++b) {
      const bool cand_before = links[a].first < links[b].first;
      const bool ref_before = links[a].second < links[b].second;
      if (cand_before != ref_before) ++count;
    }
  }
  return count;
}

// Positions on both sides that share one matching key.
struct MatchClass {
  std::vector<std::size_t> cand;
  std::vector<std::size_t> ref;
};

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMaxAlignmentChoices) return kMaxAlignmentChoices + 1;
  }
  return r;
}

// Every k-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Links for one class given which members of the larger side take part;
// members are paired in order, which never crosses within the class.
void class_links(const MatchClass& mc, const std::vector<std::size_t>& chosen,
                 std::vector<Link>& out) {
  const bool cand_larger = mc.cand.size() > mc.ref.size();
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (cand_larger) {
      out.emplace_back(mc.cand[chosen[i]], mc.ref[i]);
    } else {
      out.emplace_back(mc.cand[i], mc.ref[chosen[i]]);
    }
  }
}

class Aligner {
 public:
  Aligner(std::span<const std::string> cand, std::span<const std::string> ref)
      : cand_(cand), ref_(ref), cand_used_(cand.size()), ref_used_(ref.size()) {}

  // One exact-key stage: tokens whose key() agree may align.
  void keyed_stage(const std::function<std::string(const std::string&)>& key) {
    std::map<std::string, MatchClass> by_key;
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      if (!cand_used_[i]) by_key[key(cand_[i])].cand.push_back(i);
    }
    for (std::size_t j = 0; j < ref_.size(); ++j) {
      if (!ref_used_[j]) {
        auto it = by_key.find(key(ref_[j]));
        if (it != by_key.end()) it->second.ref.push_back(j);
      }
    }
    std::vector<MatchClass> classes;
    for (auto& [k, mc] : by_key) {
      if (!mc.ref.empty()) classes.push_back(std::move(mc));
    }
    if (classes.empty()) return;
    // Deterministic order: by first candidate position.
    std::sort(classes.begin(), classes.end(),
              [](const MatchClass& a, const MatchClass& b) { return a.cand[0] < b.cand[0]; });

    std::size_t product = 1;
    for (const auto& mc : classes) {
      const auto big = std::max(mc.cand.size(), mc.ref.size());
      const auto small = std::min(mc.cand.size(), mc.ref.size());
      product *= binomial(big, small);
      if (product > kMaxAlignmentChoices) break;
    }

    std::vector<Link> chosen;
    if (product > kMaxAlignmentChoices) {
      for (const auto& mc : classes) {
        const auto k = std::min(mc.cand.size(), mc.ref.size());
        std::vector<std::size_t> first(k);
        for (std::size_t i = 0; i < k; ++i) first[i] = i;
        class_links(mc, first, chosen);
      }
    } else {
      chosen = search(classes);
    }
    for (const auto& l : chosen) add(l);
  }

  void synonym_stage(const SynonymLexicon& lexicon) {
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      if (cand_used_[i]) continue;
      for (std::size_t j = 0; j < ref_.size(); ++j) {
        if (!ref_used_[j] && lexicon.are_synonyms(cand_[i], ref_[j])) {
          add({i, j});
          break;
        }
      }
    }
  }

  MeteorAlignment finish() {
    MeteorAlignment out;
    out.links = links_;
    std::sort(out.links.begin(), out.links.end());
    for (std::size_t k = 0; k < out.links.size(); ++k) {
      const bool continues = k > 0 && out.links[k].first == out.links[k - 1].first + 1 &&
                             out.links[k].second == out.links[k - 1].second + 1;
      if (!continues) ++out.chunks;
    }
    return out;
  }

 private:
  void add(const Link& l) {
    links_.push_back(l);
    cand_used_[l.first] = true;
    ref_used_[l.second] = true;
  }

  // Exhaustive search over per-class subset choices for the fewest crossings
  // (counting links from earlier stages); the first minimum found wins.
  std::vector<Link> search(const std::vector<MatchClass>& classes) {
    std::vector<std::vector<std::vector<std::size_t>>> options;
    for (const auto& mc : classes) {
      const auto big = std::max(mc.cand.size(), mc.ref.size());
      const auto small = std::min(mc.cand.size(), mc.ref.size());
      options.push_back(combinations(big, small));
    }
    std::vector<std::size_t> pick(classes.size(), 0);
    std::vector<Link> best;
    std::size_t best_cross = 0;
    bool have_best = false;
    while (true) {
      std::vector<Link> trial = links_;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        class_links(classes[c], options[c][pick[c]], trial);
      }
      const std::size_t cross = crossings(trial);
      if (!have_best || cross < best_cross) {
        best_cross = cross;
        best.assign(trial.begin() + static_cast<std::ptrdiff_t>(links_.size()), trial.end());
        have_best = true;
      }
      // Odometer with the first class as the most significant digit.
      std::size_t c = classes.size();
      while (c > 0) {
        --c;
        if (++pick[c] < options[c].size()) break;
        pick[c] = 0;
        if (c == 0) return best;
      }
      if (classes.empty()) return best;
    }
  }

  std::span<const std::string> cand_;
  std::span<const std::string> ref_;
  std::vector<bool> cand_used_;
  std::vector<bool> ref_used_;
  std::vector<Link> links_;
};

}  // namespace

MeteorAlignment meteor_align(std::span<const std::string> candidate,
                             std::span<const std::string> reference,
                             const SynonymLexicon* synonyms) {
  Aligner aligner(candidate, reference);
  aligner.keyed_stage([](const std::string& t) { return t; });
  aligner.keyed_stage([](const std::string& t) { return porter_stem(t); });
  if (synonyms != nullptr && !synonyms->empty()) aligner.synonym_stage(*synonyms);
  return aligner.finish();
}

double meteor_score(std::size_t matches, std::size_t chunks,
                    std::size_t candidate_len, std::size_t reference_len,
                    const MeteorParams& params) {
  if (matches == 0) return 0.0;
  const double m = static_cast<double>(matches);
  const double p = m / static_cast<double>(candidate_len);
  const double r = m / static_cast<double>(reference_len);
  const double fmean = p * r / (params.alpha * p + (1.0 - params.alpha) * r);
  const double penalty =
      params.gamma * std::pow(static_cast<double>(chunks) / m, params.beta);
  return fmean * (1.0 - penalty);
}

double meteor(const TokenSequence& candidate, References refs,
              const SynonymLexicon* synonyms, const MeteorParams& params) {
  if (refs.empty()) throw std::invalid_argument("empty reference list");
  double best = 0.0;
  for (const auto& r : refs) {
    const auto a = meteor_align(candidate.tokens, r.tokens, synonyms);
    best = std::max(best, meteor_score(a.links.size(), a.chunks, candidate.size(),
                                       r.size(), params));
  }
  return best;
}

}  // namespace metricide
