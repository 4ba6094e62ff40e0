#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "metricide/corpus.hpp"
#include "metricide/textproc.hpp"

// Reference-less statistics over a single system output. "Words" are the
// non-punctuation tokens; a sentence counts only if it holds a word.
namespace metricide {

struct SurfaceStats {
  std::size_t len = 0;  // non-space code points of the raw text
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t letters = 0;  // alphabetic code points inside words
  std::size_t pol = 0;      // words with >= 3 syllables
  double wps = 0.0;
  double sps = 0.0;
  double spw = 0.0;
  double cpw = 0.0;
  double ppw = 0.0;
  double re = 0.0;
};

inline constexpr int kPolysyllableThreshold = 3;

/// Throws std::invalid_argument when the utterance has no word tokens.
SurfaceStats surface_stats(const TokenSequence& seq, std::string_view raw);

/// Flesch Reading Ease; absent when there are no words.
std::optional<double> flesch_re(const TokenSequence& seq);

/// Lowercase word list, one entry per line.
class Dictionary {
 public:
  static Dictionary load(const std::filesystem::path& path);
  static Dictionary parse(std::istream& in);

  void add(std::string word) { words_.insert(std::move(word)); }
  bool contains(const std::string& word) const { return words_.contains(word); }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Word list shipped with the build (data/english_words.txt).
std::filesystem::path default_dictionary_path();

/// Alphabetic word tokens missing from the dictionary. "x" and tokens with
/// digits are ignored; hyphenated tokens are checked part by part.
std::size_t misspellings(const TokenSequence& seq, const Dictionary& dictionary);
/// Throws MissingResourceError when `dictionary` is null.
std::size_t misspellings(const TokenSequence& seq, const Dictionary* dictionary);

/// The externally computed parser score, passed through unchanged.
inline std::optional<double> parse_score(const Instance& instance) {
  return instance.parse_score;
}

}  // namespace metricide
