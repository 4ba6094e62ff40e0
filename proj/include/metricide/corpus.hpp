#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metricide {

// ---------------------------------------------------------------------------
// Meaning representations
// ---------------------------------------------------------------------------

struct Slot {
  std::string name;
  std::optional<std::string> value;  // absent for flag-style slots

  bool operator==(const Slot&) const = default;
  auto operator<=>(const Slot&) const = default;
};

/// A dialogue act with its ordered attribute/value slots, e.g.
/// `inform(name=X, area=X, pricerange=moderate, type=restaurant)`.
///
/// Duplicate slot names are kept as separate entries. Two MRs compare equal
/// when their act types match and their slot multisets match; `raw` does not
/// take part in the comparison.
struct MeaningRepresentation {
  std::string act_type;
  std::vector<Slot> slots;
  std::string raw;

  /// Canonical `act(name=value, flag)` rendering of act type and slots.
  std::string serialize() const;

  bool operator==(const MeaningRepresentation& other) const;
};

class MrParseError : public std::runtime_error {
 public:
  MrParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses `ACT '(' [SLOT (',' SLOT)*] ')'` with `SLOT := name ['=' value]`.
/// Whitespace around the act, parentheses, '=' and ',' is ignored; values
/// keep interior spaces but may not contain ',' '(' or ')'.
MeaningRepresentation parse_mr(std::string_view text);

// ---------------------------------------------------------------------------
// Ratings
// ---------------------------------------------------------------------------

enum class Dimension { informativeness = 0, naturalness = 1, quality = 2 };

inline constexpr std::array<Dimension, 3> kDimensions = {
    Dimension::informativeness, Dimension::naturalness, Dimension::quality};

std::string_view dimension_name(Dimension d);
std::optional<Dimension> dimension_from_name(std::string_view name);

inline constexpr int kMinRating = 1;
inline constexpr int kMaxRating = 6;

/// Three raters' scores on the 1..6 Likert scale for one dimension.
class RatingTriple {
 public:
  /// Throws std::out_of_range when a score lies outside [1,6].
  RatingTriple(Dimension dimension, std::array<int, 3> scores);

  Dimension dimension() const noexcept { return dimension_; }
  const std::array<int, 3>& scores() const noexcept { return scores_; }
  int median() const noexcept;

  bool operator==(const RatingTriple&) const = default;

 private:
  Dimension dimension_;
  std::array<int, 3> scores_;
};

int median_rating(const RatingTriple& r);

// ---------------------------------------------------------------------------
// Instances and corpora
// ---------------------------------------------------------------------------

struct Instance {
  std::string instance_id;
  std::string pair_key;  // empty when the instance is not part of a pair
  std::string dataset;
  std::string system;
  MeaningRepresentation mr;
  std::string output;
  std::vector<std::string> references;
  std::array<RatingTriple, 3> ratings;  // indexed by Dimension
  std::optional<double> parse_score;

  const RatingTriple& rating(Dimension d) const {
    return ratings[static_cast<std::size_t>(d)];
  }
  int median(Dimension d) const { return rating(d).median(); }

  bool operator==(const Instance&) const = default;
};

struct Corpus {
  std::vector<Instance> instances;

  std::size_t size() const noexcept { return instances.size(); }
  std::vector<std::string> datasets() const;  // sorted, unique
  std::vector<std::string> systems() const;   // sorted, unique
};

enum class CorpusFormat { csv, json };

std::optional<CorpusFormat> format_from_name(std::string_view name);
/// Guesses the format from the file extension; csv unless it ends in .json.
CorpusFormat format_from_path(const std::filesystem::path& path);

/// One row-level or corpus-level problem found while reading a corpus.
struct Diagnostic {
  std::size_t row = 0;  // 1-based data row; 0 for corpus-level problems
  std::string column;   // empty when not tied to a column
  std::string message;

  std::string to_string() const;
};

class CorpusError : public std::runtime_error {
 public:
  explicit CorpusError(Diagnostic diagnostic);
  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct LoadOptions {
  /// Skip invalid rows (recording them in LoadResult::skipped) instead of
  /// aborting on the first one.
  bool lenient = false;
};

struct LoadResult {
  Corpus corpus;
  std::vector<Diagnostic> skipped;
};

/// Reads a corpus file. Every string field is NFC-normalised. Throws
/// CorpusError on the first hard error unless `options.lenient` is set.
LoadResult load_corpus(const std::filesystem::path& path, CorpusFormat format,
                       const LoadOptions& options = {});

/// Same as load_corpus but parses an in-memory document.
LoadResult parse_corpus(std::string_view content, CorpusFormat format,
                        const LoadOptions& options = {});

struct GroupCount {
  std::string dataset;
  std::string system;
  std::size_t instances = 0;
};

/// Result of a full validation pass: every violation, not only the first.
struct ValidationReport {
  std::vector<Diagnostic> errors;
  std::vector<GroupCount> counts;  // sorted by (dataset, system)
  std::size_t rows = 0;

  bool ok() const noexcept { return errors.empty(); }
};

ValidationReport validate_corpus(const std::filesystem::path& path,
                                 CorpusFormat format);
ValidationReport validate_corpus_content(std::string_view content,
                                         CorpusFormat format);

/// Delimiter joining several references inside the CSV `references` field.
inline constexpr std::string_view kReferenceDelimiter = "|~";

/// Required CSV header columns, in canonical order.
const std::vector<std::string>& corpus_columns();

}  // namespace metricide
