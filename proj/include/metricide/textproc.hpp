#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metricide {

/// Lowercased tokens of one utterance plus the sentence partition over them.
struct TokenSequence {
  std::vector<std::string> tokens;
  /// Half-open [begin, end) token ranges; they partition [0, tokens.size()).
  std::vector<std::pair<std::size_t, std::size_t>> sentence_bounds;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  std::size_t sentence_count() const noexcept { return sentence_bounds.size(); }

  /// Tokens joined with single spaces.
  std::string detokenize() const;

  bool operator==(const TokenSequence&) const = default;
};

/// Shared tokenizer for every metric: lowercase, split on white space, peel
/// trailing `. , ! ? ; :` off each chunk into separate tokens. A sentence
/// ends after a run of `.`/`!`/`?` tokens.
TokenSequence tokenize(std::string_view text);

/// True for the punctuation tokens the tokenizer splits off.
bool is_punctuation(std::string_view token) noexcept;
bool is_sentence_final(std::string_view token) noexcept;

using Ngram = std::vector<std::string>;
using NgramCounts = std::map<Ngram, int>;

/// All contiguous n-token windows with multiplicities (sentence bounds are
/// ignored). Empty when the sequence is shorter than n.
NgramCounts ngrams(std::span<const std::string> tokens, std::size_t n);
inline NgramCounts ngrams(const TokenSequence& seq, std::size_t n) {
  return ngrams(std::span<const std::string>(seq.tokens), n);
}

/// Classic Porter (1980) suffix stripper. Expects a lowercase word.
std::string porter_stem(std::string_view word);

/// Vowel-group syllable heuristic (see syllables.cpp). Always >= 1.
int count_syllables(std::string_view word);

/// Unit-cost Levenshtein distance over token sequences.
template <typename T>
std::size_t edit_distance(std::span<const T> a, std::span<const T> b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline std::size_t edit_distance(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  return edit_distance(std::span<const std::string>(a),
                       std::span<const std::string>(b));
}

}  // namespace metricide
