#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "metricide/corpus.hpp"
#include "metricide/textproc.hpp"

// Reference-based ("word-based") metrics. Every sentence-level function takes
// the candidate and the instance's reference set; an empty reference list is
// a precondition violation and throws std::invalid_argument.
namespace metricide {

using References = std::span<const TokenSequence>;

/// Raised when a metric needs an external resource (embeddings, dictionary)
/// that was not supplied.
class MissingResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- BLEU ------------------------------------------------------------------

inline constexpr double kBleuSmoothingEpsilon = 1e-9;

/// Sentence BLEU-max_n: geometric mean of clipped n-gram precisions (zero
/// match counts replaced by epsilon) times the brevity penalty against the
/// closest reference length (ties go to the shorter reference).
double bleu(const TokenSequence& candidate, References refs, int max_n);

/// Clipped matches / candidate n-gram total for one order.
struct NgramPrecision {
  std::size_t matched = 0;
  std::size_t total = 0;
};
NgramPrecision modified_precision(const TokenSequence& candidate,
                                  References refs, std::size_t n);

/// Aggregate-count BLEU over a whole test set (not used by the analyses).
double corpus_bleu(std::span<const TokenSequence> candidates,
                   std::span<const std::vector<TokenSequence>> references,
                   int max_n);

// --- NIST ------------------------------------------------------------------

double nist(const TokenSequence& candidate, References refs, int max_n = 5);

/// NIST brevity factor exp(beta * ln^2(min(c / mean_ref_len, 1))), with beta
/// fixed so the factor is 0.5 at a length ratio of 2/3.
double nist_brevity_factor(double candidate_len, double mean_ref_len);

// --- TER -------------------------------------------------------------------

struct TerCounts {
  std::size_t edits = 0;   // insertions + deletions + substitutions
  std::size_t shifts = 0;  // block moves applied
  std::size_t total() const noexcept { return edits + shifts; }
};

/// Greedy shift search against a single reference: repeatedly apply the
/// block move that most lowers the edit distance while the move pays for
/// itself (distance drops by more than the unit shift cost).
TerCounts ter_counts(std::span<const std::string> candidate,
                     std::span<const std::string> reference);

/// min over references of (edits + shifts) / reference length. Lower is
/// better. Throws std::invalid_argument on an empty reference.
double ter(const TokenSequence& candidate, References refs);

// --- ROUGE-L ---------------------------------------------------------------

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b);

/// max over references of the LCS F1 score.
double rouge_l(const TokenSequence& candidate, References refs);

// --- METEOR ----------------------------------------------------------------

/// word -> synonyms, loaded from `word:syn1,syn2,...` lines. Lookups are
/// symmetric.
class SynonymLexicon {
 public:
  static SynonymLexicon load(const std::filesystem::path& path);
  static SynonymLexicon parse(std::istream& in);

  void add(const std::string& word, const std::string& synonym);
  bool are_synonyms(const std::string& a, const std::string& b) const;
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::unordered_map<std::string, std::unordered_set<std::string>> entries_;
};

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;
};

struct MeteorAlignment {
  /// (candidate index, reference index) links, sorted by candidate index.
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::size_t chunks = 0;
};

MeteorAlignment meteor_align(std::span<const std::string> candidate,
                             std::span<const std::string> reference,
                             const SynonymLexicon* synonyms = nullptr);

double meteor_score(std::size_t matches, std::size_t chunks,
                    std::size_t candidate_len, std::size_t reference_len,
                    const MeteorParams& params = {});

double meteor(const TokenSequence& candidate, References refs,
              const SynonymLexicon* synonyms = nullptr,
              const MeteorParams& params = {});

// --- LEPOR -----------------------------------------------------------------

/// How a candidate word without a reference match enters the position
/// difference sum.
enum class LeporUnmatched {
  zero,        // contributes nothing (default)
  to_origin,   // contributes its own relative position pos/c
};

struct LeporParams {
  double alpha = 1.0;
  double beta = 1.0;
  LeporUnmatched unmatched = LeporUnmatched::zero;
};

double lepor_length_penalty(std::size_t candidate_len, std::size_t reference_len);

double lepor(const TokenSequence& candidate, References refs,
             const LeporParams& params = {});

// --- CIDEr -----------------------------------------------------------------

struct CiderItem {
  TokenSequence candidate;
  std::vector<TokenSequence> references;
};

/// Plain CIDEr with document frequencies over the reference sets it was built
/// from. idf(g) = ln(N / max(1, df(g))).
class CiderScorer {
 public:
  static constexpr int kMaxN = 4;

  explicit CiderScorer(std::span<const std::vector<TokenSequence>> reference_sets);

  double score(const TokenSequence& candidate, References refs) const;
  double idf(const Ngram& gram) const;
  std::size_t corpus_size() const noexcept { return corpus_size_; }

 private:
  std::size_t corpus_size_;
  double log_corpus_size_;
  std::map<Ngram, std::size_t> document_frequency_;
};

/// Per-item CIDEr in [0, 10]; throws std::invalid_argument on an empty corpus.
std::vector<double> cider(std::span<const CiderItem> corpus);

// --- SIM -------------------------------------------------------------------

/// Word vectors read from `word v1 ... vd` lines; every row has the same d.
class EmbeddingTable {
 public:
  static EmbeddingTable load(const std::filesystem::path& path);
  static EmbeddingTable parse(std::istream& in);

  void add(const std::string& word, std::vector<double> vector);
  const std::vector<double>* find(const std::string& word) const;
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return vectors_.size(); }

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// Token bag for an MR: act-type parts, slot-name parts and value tokens.
std::vector<std::string> verbalize_mr(const MeaningRepresentation& mr);

/// max(0, cosine) of the mean in-vocabulary vectors of two token bags; 0 when
/// either bag has no in-vocabulary token.
double embedding_similarity(std::span<const std::string> a,
                            std::span<const std::string> b,
                            const EmbeddingTable& embeddings);

/// embedding_similarity of the MR bag and the candidate tokens.
double sim(const MeaningRepresentation& mr, const TokenSequence& candidate,
           const EmbeddingTable& embeddings);
/// Throws MissingResourceError when `embeddings` is null.
double sim(const MeaningRepresentation& mr, const TokenSequence& candidate,
           const EmbeddingTable* embeddings);

}  // namespace metricide
