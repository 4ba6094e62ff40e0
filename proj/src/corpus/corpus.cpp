#include "metricide/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "csv.hpp"
#include "metricide/unicode.hpp"

namespace metricide {

// ---------------------------------------------------------------------------
// Small vocabulary helpers
// ---------------------------------------------------------------------------

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::informativeness:
      return "informativeness";
    case Dimension::naturalness:
      return "naturalness";
    case Dimension::quality:
      return "quality";
  }
  return "?";
}

std::optional<Dimension> dimension_from_name(std::string_view name) {
  for (Dimension d : kDimensions) {
    if (dimension_name(d) == name) return d;
  }
  if (name == "inf" || name == "inform") return Dimension::informativeness;
  if (name == "nat" || name == "natural") return Dimension::naturalness;
  if (name == "qual") return Dimension::quality;
  return std::nullopt;
}

RatingTriple::RatingTriple(Dimension dimension, std::array<int, 3> scores)
    : dimension_(dimension), scores_(scores) {
  for (int s : scores_) {
    if (s < kMinRating || s > kMaxRating) {
      throw std::out_of_range("rating " + std::to_string(s) +
                              " outside [1,6]");
    }
  }
}

int RatingTriple::median() const noexcept {
  auto s = scores_;
  std::sort(s.begin(), s.end());
  return s[1];
}

int median_rating(const RatingTriple& r) { return r.median(); }

std::vector<std::string> Corpus::datasets() const {
  std::set<std::string> out;
  for (const auto& inst : instances) out.insert(inst.dataset);
  return {out.begin(), out.end()};
}

std::vector<std::string> Corpus::systems() const {
  std::set<std::string> out;
  for (const auto& inst : instances) out.insert(inst.system);
  return {out.begin(), out.end()};
}

std::optional<CorpusFormat> format_from_name(std::string_view name) {
  if (name == "csv") return CorpusFormat::csv;
  if (name == "json") return CorpusFormat::json;
  return std::nullopt;
}

CorpusFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".json" ? CorpusFormat::json : CorpusFormat::csv;
}

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  if (row > 0) {
    os << "row " << row;
    if (!column.empty()) os << ", column '" << column << "'";
    os << ": ";
  } else if (!column.empty()) {
    os << "column '" << column << "': ";
  }
  os << message;
  return os.str();
}

CorpusError::CorpusError(Diagnostic diagnostic)
    : std::runtime_error(diagnostic.to_string()),
      diagnostic_(std::move(diagnostic)) {}

const std::vector<std::string>& corpus_columns() {
  static const std::vector<std::string> columns = {
      "instance_id", "pair_key", "dataset", "system", "mr",
      "output",      "references", "inf_1",  "inf_2",  "inf_3",
      "nat_1",       "nat_2",    "nat_3",   "qual_1", "qual_2",
      "qual_3",      "parse_score"};
  return columns;
}

namespace {

constexpr std::array<std::string_view, 3> kRatingPrefixes = {"inf", "nat",
                                                             "qual"};

bool column_optional(std::string_view name) { return name == "parse_score"; }

// Format-neutral view of one input row before validation.
struct RawRow {
  std::size_t row = 0;
  std::map<std::string, std::string, std::less<>> fields;
  std::vector<std::string> references;
  bool has_references = false;
  std::optional<double> parse_score;
  std::optional<std::string> parse_score_error;
};

std::vector<std::string> split_references(std::string_view field) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = field.find(kReferenceDelimiter, start);
    out.emplace_back(field.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + kReferenceDelimiter.size();
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_real(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  double value = 0;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw std::invalid_argument("not a number: '" + t + "'");
  }
  return value;
}

using Sink = std::vector<Diagnostic>;

// Collects row problems. In fail-fast mode the first problem throws.
class Reporter {
 public:
  explicit Reporter(bool fail_fast) : fail_fast_(fail_fast) {}

  void report(Diagnostic d) {
    if (fail_fast_) throw CorpusError(std::move(d));
    diagnostics_.push_back(std::move(d));
  }
  Sink& diagnostics() { return diagnostics_; }

 private:
  bool fail_fast_;
  Sink diagnostics_;
};

// Validates one row; returns nullopt (after reporting) when it is unusable.
std::optional<Instance> build_instance(const RawRow& raw, Reporter& reporter) {
  bool ok = true;
  auto fail = [&](std::string column, std::string message) {
    reporter.report({raw.row, std::move(column), std::move(message)});
    ok = false;
  };
  auto field = [&](std::string_view name) -> std::string {
    const auto it = raw.fields.find(name);
    return it == raw.fields.end() ? std::string() : unicode::nfc(it->second);
  };

  Instance inst{.instance_id = field("instance_id"),
                .pair_key = trim(field("pair_key")),
                .dataset = trim(field("dataset")),
                .system = trim(field("system")),
                .mr = {},
                .output = field("output"),
                .references = {},
                .ratings = {RatingTriple(Dimension::informativeness, {1, 1, 1}),
                            RatingTriple(Dimension::naturalness, {1, 1, 1}),
                            RatingTriple(Dimension::quality, {1, 1, 1})},
                .parse_score = raw.parse_score};

  if (inst.instance_id.empty()) fail("instance_id", "empty instance_id");
  if (inst.dataset.empty()) fail("dataset", "empty dataset");
  if (inst.system.empty()) fail("system", "empty system");

  try {
    inst.mr = parse_mr(field("mr"));
  } catch (const MrParseError& e) {
    fail("mr", std::string("malformed MR: ") + e.what());
  }

  if (!raw.has_references) {
    fail("references", "missing references");
  } else {
    for (const auto& r : raw.references) {
      auto normalized = unicode::nfc(r);
      if (trim(normalized).empty()) {
        fail("references", "empty reference string");
        break;
      }
      inst.references.push_back(std::move(normalized));
    }
    if (ok && inst.references.empty()) {
      fail("references", "at least one reference is required");
    }
  }

  for (Dimension d : kDimensions) {
    const auto prefix = kRatingPrefixes[static_cast<std::size_t>(d)];
    std::array<int, 3> scores{};
    bool dim_ok = true;
    for (int k = 0; k < 3; ++k) {
      const std::string column = std::string(prefix) + "_" + std::to_string(k + 1);
      const std::string text = trim(field(column));
      if (text.empty()) {
        fail(column, "missing rating (exactly 3 raters are required)");
        dim_ok = false;
        continue;
      }
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail(column, "rating '" + text + "' is not an integer");
        dim_ok = false;
        continue;
      }
      if (value < kMinRating || value > kMaxRating) {
        fail(column, "rating " + text + " outside [1,6]");
        dim_ok = false;
        continue;
      }
      scores[static_cast<std::size_t>(k)] = value;
    }
    if (dim_ok) inst.ratings[static_cast<std::size_t>(d)] = RatingTriple(d, scores);
  }

  if (raw.parse_score_error) fail("parse_score", *raw.parse_score_error);

  if (!ok) return std::nullopt;
  return inst;
}

std::vector<RawRow> rows_from_csv(std::string_view content, Reporter& reporter,
                                  bool& fatal) {
  std::vector<csv::Record> records;
  try {
    records = csv::parse(content);
  } catch (const csv::CsvError& e) {
    reporter.report({e.record(), "", e.what()});
    fatal = true;
    return {};
  }
  if (records.empty()) {
    reporter.report({0, "", "missing CSV header"});
    fatal = true;
    return {};
  }

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < records[0].size(); ++i) {
    index.emplace(trim(records[0][i]), i);
  }
  for (const auto& column : corpus_columns()) {
    if (!column_optional(column) && !index.contains(column)) {
      reporter.report({0, column, "missing required column"});
      fatal = true;
    }
  }
  if (fatal) return {};

  std::vector<RawRow> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    RawRow raw;
    raw.row = r;
    if (rec.size() != records[0].size()) {
      reporter.report({r, "", "expected " + std::to_string(records[0].size()) +
                                  " fields, found " + std::to_string(rec.size())});
      continue;
    }
    for (const auto& [name, i] : index) raw.fields.emplace(name, rec[i]);
    if (const auto it = raw.fields.find("references"); it != raw.fields.end()) {
      raw.has_references = true;
      raw.references = split_references(it->second);
    }
    if (const auto it = raw.fields.find("parse_score"); it != raw.fields.end()) {
      try {
        raw.parse_score = parse_real(it->second);
      } catch (const std::invalid_argument& e) {
        raw.parse_score_error = e.what();
      }
    }
    rows.push_back(std::move(raw));
  }
  return rows;
}

std::string json_scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == static_cast<double>(static_cast<long long>(d))) {
      return std::to_string(static_cast<long long>(d));
    }
    return v.dump();
  }
  if (v.is_null()) return {};
  return v.dump();
}

std::vector<RawRow> rows_from_json(std::string_view content, Reporter& reporter,
                                   bool& fatal) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    reporter.report({0, "", std::string("invalid JSON: ") + e.what()});
    fatal = true;
    return {};
  }
  if (!doc.is_array()) {
    reporter.report({0, "", "JSON corpus must be an array of objects"});
    fatal = true;
    return {};
  }

  std::vector<RawRow> rows;
  rows.reserve(doc.size());
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const auto& obj = doc[r];
    RawRow raw;
    raw.row = r + 1;
    if (!obj.is_object()) {
      reporter.report({raw.row, "", "row is not a JSON object"});
      continue;
    }
    bool row_ok = true;
    for (const auto& column : corpus_columns()) {
      if (!obj.contains(column)) {
        if (!column_optional(column)) {
          reporter.report({raw.row, column, "missing required column"});
          row_ok = false;
        }
        continue;
      }
      const auto& v = obj.at(column);
      if (column == "references") {
        raw.has_references = true;
        if (v.is_array()) {
          for (const auto& ref : v) {
            if (!ref.is_string()) {
              reporter.report({raw.row, column, "references must be strings"});
              row_ok = false;
              break;
            }
            raw.references.push_back(ref.get<std::string>());
          }
        } else if (v.is_string()) {
          raw.references = split_references(v.get<std::string>());
        } else {
          reporter.report({raw.row, column, "references must be a string array"});
          row_ok = false;
        }
      } else if (column == "parse_score") {
        if (v.is_number()) {
          raw.parse_score = v.get<double>();
        } else if (v.is_string()) {
          try {
            raw.parse_score = parse_real(v.get<std::string>());
          } catch (const std::invalid_argument& e) {
            raw.parse_score_error = e.what();
          }
        } else if (!v.is_null()) {
          raw.parse_score_error = "parse_score must be a number or null";
        }
      } else {
        raw.fields.emplace(column, json_scalar_text(v));
      }
    }
    if (row_ok) rows.push_back(std::move(raw));
  }
  return rows;
}

// Shared row → corpus pipeline. `fail_fast` throws on the first problem;
// otherwise every problem is collected and bad rows are dropped.
struct Assembled {
  Corpus corpus;
  Sink diagnostics;
  std::vector<std::size_t> source_rows;
};

Assembled assemble(std::string_view content, CorpusFormat format,
                   bool fail_fast, bool keep_invalid_pairs_as_errors) {
  Reporter reporter(fail_fast);
  bool fatal = false;
  auto rows = format == CorpusFormat::csv
                  ? rows_from_csv(content, reporter, fatal)
                  : rows_from_json(content, reporter, fatal);
  Assembled out;
  if (fatal) {
    out.diagnostics = std::move(reporter.diagnostics());
    return out;
  }

  std::map<std::string, std::size_t> seen_ids;
  for (const auto& raw : rows) {
    auto inst = build_instance(raw, reporter);
    if (!inst) continue;
    if (const auto it = seen_ids.find(inst->instance_id); it != seen_ids.end()) {
      reporter.report({raw.row, "instance_id",
                       "duplicate instance_id '" + inst->instance_id +
                           "' (first seen at row " + std::to_string(it->second) +
                           ")"});
      continue;
    }
    seen_ids.emplace(inst->instance_id, raw.row);
    out.corpus.instances.push_back(std::move(*inst));
    out.source_rows.push_back(raw.row);
  }

  // pair_key integrity: exactly two members, from different systems.
  std::map<std::string, std::vector<std::size_t>> pairs;
  for (std::size_t i = 0; i < out.corpus.instances.size(); ++i) {
    const auto& key = out.corpus.instances[i].pair_key;
    if (!key.empty()) pairs[key].push_back(i);
  }
  for (const auto& [key, members] : pairs) {
    std::string problem;
    if (members.size() != 2) {
      problem = "pair_key '" + key + "' groups " +
                std::to_string(members.size()) + " instances (expected 2)";
    } else if (out.corpus.instances[members[0]].system ==
               out.corpus.instances[members[1]].system) {
      problem = "pair_key '" + key + "' pairs two outputs of system '" +
                out.corpus.instances[members[0]].system + "'";
    } else if (out.corpus.instances[members[0]].dataset !=
               out.corpus.instances[members[1]].dataset) {
      problem = "pair_key '" + key + "' spans datasets";
    }
    if (problem.empty()) continue;
    const std::size_t row = out.source_rows[members.front()];
    if (keep_invalid_pairs_as_errors) {
      reporter.report({row, "pair_key", problem});
    } else {
      // Lenient: keep the instances but drop them from pairing.
      reporter.report({row, "pair_key", problem + "; pairing dropped"});
      for (auto i : members) out.corpus.instances[i].pair_key.clear();
    }
  }

  out.diagnostics = std::move(reporter.diagnostics());
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CorpusError({0, "", "cannot open '" + path.string() + "'"});
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

LoadResult parse_corpus(std::string_view content, CorpusFormat format,
                        const LoadOptions& options) {
  auto assembled = assemble(content, format, !options.lenient,
                            /*keep_invalid_pairs_as_errors=*/!options.lenient);
  if (options.lenient && assembled.corpus.instances.empty() &&
      !assembled.diagnostics.empty() && assembled.diagnostics.front().row == 0) {
    // Structural problems (header, JSON syntax) cannot be skipped.
    throw CorpusError(assembled.diagnostics.front());
  }
  return {std::move(assembled.corpus), std::move(assembled.diagnostics)};
}

LoadResult load_corpus(const std::filesystem::path& path, CorpusFormat format,
                       const LoadOptions& options) {
  return parse_corpus(read_file(path), format, options);
}

ValidationReport validate_corpus_content(std::string_view content,
                                         CorpusFormat format) {
  auto assembled = assemble(content, format, /*fail_fast=*/false,
                            /*keep_invalid_pairs_as_errors=*/true);
  ValidationReport report;
  report.errors = std::move(assembled.diagnostics);
  report.rows = assembled.corpus.instances.size();
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (const auto& inst : assembled.corpus.instances) {
    ++counts[{inst.dataset, inst.system}];
  }
  for (const auto& [key, n] : counts) {
    report.counts.push_back({key.first, key.second, n});
  }
  return report;
}

ValidationReport validate_corpus(const std::filesystem::path& path,
                                 CorpusFormat format) {
  std::string content;
  try {
    content = read_file(path);
  } catch (const CorpusError& e) {
    ValidationReport report;
    report.errors.push_back(e.diagnostic());
    return report;
  }
  return validate_corpus_content(content, format);
}

}  // namespace metricide
