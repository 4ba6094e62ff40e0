#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metricide/corpus.hpp"
#include "metricide/meta_eval.hpp"
#include "metricide/metric_vector.hpp"

namespace metricide {

/// Writes through a sibling temporary file and renames it into place, so a
/// reader never sees a partial file. Creates missing parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

/// Tab-separated table; `NA` marks absent cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_tsv() const;
  std::string to_csv() const;
};

std::string format_value(double v);
std::string format_value(const std::optional<double>& v);

/// Per-instance metric file: id columns then the 21 metrics in catalogue
/// order. Values are written in shortest round-trip form.
std::string scores_tsv(const Corpus& corpus, std::span<const MetricVector> scores);

/// Reads a scores_tsv document back, aligned to `corpus` by instance_id.
/// Missing metric columns stay absent. Throws std::runtime_error when an
/// instance has no row or a value does not parse.
std::vector<MetricVector> parse_scores_tsv(std::string_view content, const Corpus& corpus);

std::string report_json(const AnalysisReport& report);

/// report.json, tables/*.tsv and plots/*.csv under `out_dir`.
void write_report(const AnalysisReport& report, const std::filesystem::path& out_dir);

}  // namespace metricide
