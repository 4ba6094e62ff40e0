#include "metricide/grammar_metrics.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "metricide/unicode.hpp"
#include "metricide/word_metrics.hpp"

namespace metricide {

namespace {

constexpr double kReBase = 206.835;
constexpr double kReWps = 1.015;
constexpr double kReSpw = 84.6;

struct Counts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t letters = 0;
  std::size_t pol = 0;
};

Counts count(const TokenSequence& seq) {
  Counts c;
  for (const auto& [begin, end] : seq.sentence_bounds) {
    bool has_word = false;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& t = seq.tokens[i];
      if (is_punctuation(t)) continue;
      has_word = true;
      ++c.words;
      const int syl = count_syllables(t);
      c.syllables += static_cast<std::size_t>(syl);
      if (syl >= kPolysyllableThreshold) ++c.pol;
      c.letters += unicode::count_alpha(t);
    }
    if (has_word) ++c.sentences;
  }
  return c;
}

double reading_ease(double words, double sentences, double syllables) {
  return kReBase - kReWps * (words / sentences) - kReSpw * (syllables / words);
}

bool has_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

bool known(const std::string& part, const Dictionary& dict) {
  if (dict.contains(part)) return true;
  // Possessives and elisions: try the stem before the last apostrophe.
  const auto apos = part.rfind('\'');
  return apos != std::string::npos && apos > 0 && dict.contains(part.substr(0, apos));
}

}  // namespace

SurfaceStats surface_stats(const TokenSequence& seq, std::string_view raw) {
  const Counts c = count(seq);
  if (c.words == 0) throw std::invalid_argument("surface_stats: utterance has no words");
  SurfaceStats s;
  s.len = unicode::count_non_space(raw);
  s.words = c.words;
  s.sentences = c.sentences;
  s.syllables = c.syllables;
  s.letters = c.letters;
  s.pol = c.pol;
  const double w = static_cast<double>(c.words);
  const double n = static_cast<double>(c.sentences);
  s.wps = w / n;
  s.sps = static_cast<double>(c.syllables) / n;
  s.spw = static_cast<double>(c.syllables) / w;
  s.cpw = static_cast<double>(c.letters) / w;
  s.ppw = static_cast<double>(c.pol) / w;
  s.re = reading_ease(w, n, static_cast<double>(c.syllables));
  return s;
}

std::optional<double> flesch_re(const TokenSequence& seq) {
  const Counts c = count(seq);
  if (c.words == 0) return std::nullopt;
  return reading_ease(static_cast<double>(c.words), static_cast<double>(c.sentences),
                      static_cast<double>(c.syllables));
}

Dictionary Dictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingResourceError(fmt::format("cannot open dictionary {}", path.string()));
  return parse(in);
}

Dictionary Dictionary::parse(std::istream& in) {
  Dictionary d;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) d.add(unicode::to_lower(line));
  }
  return d;
}

std::filesystem::path default_dictionary_path() {
  return std::filesystem::path(METRICIDE_DATA_DIR) / "english_words.txt";
}

std::size_t misspellings(const TokenSequence& seq, const Dictionary& dictionary) {
  std::size_t n = 0;
  for (const auto& t : seq.tokens) {
    if (is_punctuation(t) || t == "x" || has_digit(t)) continue;
    std::size_t start = 0;
    while (start <= t.size()) {
      const auto end = std::min(t.find('-', start), t.size());
      const std::string part = t.substr(start, end - start);
      start = end + 1;
      if (part.empty() || part == "x" || unicode::count_alpha(part) == 0) continue;
      if (!known(part, dictionary)) ++n;
    }
  }
  return n;
}

std::size_t misspellings(const TokenSequence& seq, const Dictionary* dictionary) {
  if (dictionary == nullptr) {
    throw MissingResourceError("msp needs a word list: pass --dictionary PATH");
  }
  return misspellings(seq, *dictionary);
}

}  // namespace metricide
