#include <algorithm>

#include "metricide/textproc.hpp"
#include "metricide/unicode.hpp"

namespace metricide {

bool is_punctuation(std::string_view token) noexcept {
  if (token.size() != 1) return false;
  switch (token[0]) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ';':
    case ':':
      return true;
    default:
      return false;
  }
}

bool is_sentence_final(std::string_view token) noexcept {
  return token == "." || token == "!" || token == "?";
}

namespace {

bool ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

TokenSequence tokenize(std::string_view text) {
  TokenSequence seq;
  const std::string lowered = unicode::to_lower(text);
  std::string_view rest(lowered);

  std::vector<std::string> trailing;
  while (!rest.empty()) {
    const auto b = std::find_if_not(rest.begin(), rest.end(), ascii_space);
    if (b == rest.end()) break;
    const auto e = std::find_if(b, rest.end(), ascii_space);
    std::string_view chunk(&*b, static_cast<std::size_t>(e - b));
    rest.remove_prefix(static_cast<std::size_t>(e - rest.begin()));

    trailing.clear();
    while (!chunk.empty() && is_punctuation(chunk.substr(chunk.size() - 1))) {
      trailing.emplace_back(chunk.substr(chunk.size() - 1));
      chunk.remove_suffix(1);
    }
    if (!chunk.empty()) seq.tokens.emplace_back(chunk);
    seq.tokens.insert(seq.tokens.end(), trailing.rbegin(), trailing.rend());
  }

  std::size_t start = 0;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    const bool final_here = is_sentence_final(seq.tokens[i]);
    const bool run_continues =
        i + 1 < seq.tokens.size() && is_sentence_final(seq.tokens[i + 1]);
    if (final_here && !run_continues) {
      seq.sentence_bounds.emplace_back(start, i + 1);
      start = i + 1;
    }
  }
  if (start < seq.tokens.size()) {
    seq.sentence_bounds.emplace_back(start, seq.tokens.size());
  }
  return seq;
}

std::string TokenSequence::detokenize() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

NgramCounts ngrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Ngram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                   tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

}  // namespace metricide
