#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricide/corpus.hpp"
#include "metricide/meta_eval.hpp"
#include "metricide/metric_vector.hpp"
#include "metricide/word_metrics.hpp"

namespace metricide::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitWarnings = 1;  // only with --strict
inline constexpr int kExitInput = 2;

inline constexpr const char* kSeedEnv = "METRICIDE_SEED";

struct RunConfig {
  std::filesystem::path input;
  std::optional<CorpusFormat> format;  // guessed from the extension if unset
  std::filesystem::path out_dir = "metricide-out";
  std::optional<std::filesystem::path> embeddings;
  std::optional<std::filesystem::path> dictionary;  // default: shipped list
  std::optional<std::filesystem::path> synonyms;
  std::optional<std::filesystem::path> scores;  // analyze: reuse a score run
  std::optional<std::string> metrics;           // unset: all (sim needs --embeddings)
  LeporUnmatched lepor_unmatched = LeporUnmatched::zero;
  AnalysisConfig analysis;
  bool strict = false;
  bool lenient = false;
  std::size_t jobs = 1;
};

/// "all", or a comma list of metric names; "-name" removes one. Throws
/// std::invalid_argument on an unknown name.
MetricSelection parse_metric_list(std::string_view spec);

/// The selection a run will use: the explicit list, or every metric with sim
/// only when embeddings were supplied.
MetricSelection effective_metrics(const RunConfig& config);

/// --seed if given, else METRICIDE_SEED if set and numeric, else 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value);

/// Settings echoed into every report. The output directory is left out so
/// that runs into different directories stay byte-identical.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& config);

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_score(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace metricide::cli
