#include <algorithm>

#include "metricide/textproc.hpp"

namespace metricide {

// Frozen heuristic (v1). RE, sps, spw, pol and ppw all depend on it, so any
// change here shifts every readability number.
//   1. count maximal runs of the vowels a e i o u y
//   2. drop one for a word-final 'e' not preceded by 'l', if the count is > 1
//   3. clamp to at least 1; tokens without ASCII letters count as 1
int count_syllables(std::string_view word) {
  auto lower = [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  };
  auto is_vowel = [&](char c) {
    switch (lower(c)) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
      case 'y':
        return true;
      default:
        return false;
    }
  };
  const bool has_letter = std::any_of(word.begin(), word.end(), [&](char c) {
    const char l = lower(c);
    return l >= 'a' && l <= 'z';
  });
  if (!has_letter) return 1;

  int groups = 0;
  bool in_group = false;
  for (char c : word) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const std::size_t n = word.size();
  if (groups > 1 && lower(word[n - 1]) == 'e' && !(n >= 2 && lower(word[n - 2]) == 'l')) {
    --groups;
  }
  return std::max(groups, 1);
}

}  // namespace metricide
