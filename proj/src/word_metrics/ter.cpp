#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <unordered_map>

#include "metricide/word_metrics.hpp"

namespace metricide {

namespace {

// Global edit distance to a fixed reference, 64 reference tokens per machine
// word (Myers 1999; block form after Hyyro 2003).
class BitParallelLevenshtein {
 public:
  BitParallelLevenshtein(std::span<const int> ref, std::size_t alphabet)
      : m_(ref.size()), blocks_((ref.size() + 63) / 64), peq_(alphabet * blocks_, 0),
        vp_(blocks_), vn_(blocks_) {
    for (std::size_t i = 0; i < ref.size(); ++i) {
      peq_[static_cast<std::size_t>(ref[i]) * blocks_ + i / 64] |= 1ULL << (i % 64);
    }
  }

  std::size_t operator()(std::span<const int> text) {
    std::fill(vp_.begin(), vp_.end(), ~0ULL);
    std::fill(vn_.begin(), vn_.end(), 0ULL);
    const std::uint64_t last_high = 1ULL << ((m_ - 1) % 64);
    std::size_t score = m_;
    for (int c : text) {
      const std::uint64_t* eqs = &peq_[static_cast<std::size_t>(c) * blocks_];
      int hin = 1;  // top row of the table grows by one per column
      for (std::size_t b = 0; b < blocks_; ++b) {
        const std::uint64_t high = b + 1 == blocks_ ? last_high : 1ULL << 63;
        std::uint64_t eq = eqs[b];
        const std::uint64_t vp = vp_[b], vn = vn_[b];
        const std::uint64_t xv = eq | vn;
        if (hin < 0) eq |= 1;
        const std::uint64_t xh = (((eq & vp) + vp) ^ vp) | eq;
        std::uint64_t ph = vn | ~(xh | vp);
        std::uint64_t mh = vp & xh;
        const int hout = (ph & high) ? 1 : (mh & high) ? -1 : 0;
        ph <<= 1;
        mh <<= 1;
        if (hin < 0) mh |= 1;
        if (hin > 0) ph |= 1;
        vp_[b] = mh | ~(xv | ph);
        vn_[b] = ph & xv;
        hin = hout;
      }
      score = static_cast<std::size_t>(static_cast<long>(score) + hin);
    }
    return score;
  }

 private:
  std::size_t m_;
  std::size_t blocks_;
  std::vector<std::uint64_t> peq_;  // [token][block]
  std::vector<std::uint64_t> vp_, vn_;
};

// Writes `seq` with the block [start, start+len) moved so that it begins at
// position `dest` of the result.
void apply_shift(std::span<const int> seq, std::size_t start, std::size_t len,
                 std::size_t dest, std::vector<int>& out) {
  out.clear();
  const auto at = [&](std::size_t i) { return seq.begin() + static_cast<std::ptrdiff_t>(i); };
  if (dest < start) {
    out.insert(out.end(), at(0), at(dest));
    out.insert(out.end(), at(start), at(start + len));
    out.insert(out.end(), at(dest), at(start));
    out.insert(out.end(), at(start + len), seq.end());
  } else {
    out.insert(out.end(), at(0), at(start));
    out.insert(out.end(), at(start + len), at(dest + len));
    out.insert(out.end(), at(start), at(start + len));
    out.insert(out.end(), at(dest + len), seq.end());
  }
}

}  // namespace

TerCounts ter_counts(std::span<const std::string> candidate,
                     std::span<const std::string> reference) {
  std::unordered_map<std::string_view, int> ids;
  auto id_of = [&](const std::string& s) {
    return ids.try_emplace(s, static_cast<int>(ids.size())).first->second;
  };
  std::vector<int> cur, ref;
  for (const auto& t : candidate) cur.push_back(id_of(t));
  for (const auto& t : reference) ref.push_back(id_of(t));

  BitParallelLevenshtein lev(ref, ids.size());
  TerCounts counts;
  std::size_t cur_ed = lev(cur);
  std::vector<int> trial, best;
  const std::size_t n = cur.size();

  // Greedy: take the first strictly best block move in (start, length, dest)
  // order, and keep going only while a move pays for its own unit cost.
  while (cur_ed > 1) {
    std::size_t best_ed = cur_ed;
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t len = 1; start + len <= n; ++len) {
        for (std::size_t dest = 0; dest + len <= n; ++dest) {
          if (dest == start) continue;
          apply_shift(cur, start, len, dest, trial);
          const std::size_t ed = lev(trial);
          if (ed < best_ed) {
            best_ed = ed;
            best.swap(trial);
          }
        }
      }
    }
    if (best_ed + 1 >= cur_ed) break;
    cur.swap(best);
    cur_ed = best_ed;
    ++counts.shifts;
  }
  counts.edits = cur_ed;
  return counts;
}

double ter(const TokenSequence& candidate, References refs) {
  if (refs.empty()) throw std::invalid_argument("empty reference list");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : refs) {
    if (r.empty()) throw std::invalid_argument("ter: empty reference");
    const TerCounts c = ter_counts(candidate.tokens, r.tokens);
    best = std::min(best, static_cast<double>(c.total()) / static_cast<double>(r.size()));
  }
  return best;
}

}  // namespace metricide
