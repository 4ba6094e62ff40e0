#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metricide/corpus.hpp"
#include "metricide/metric_vector.hpp"
#include "metricide/stats.hpp"

// Analyses over a scored corpus. Every function takes the corpus and the
// per-instance metric vectors (same order) and never mutates either.
namespace metricide {

enum class QuantStrategy { minmax, eqfreq };

std::string_view quant_strategy_name(QuantStrategy s);
std::optional<QuantStrategy> quant_strategy_from_name(std::string_view name);

struct AnalysisConfig {
  std::uint64_t seed = 0;
  double epsilon = 0.0;  // raw-score tie tolerance for ranking
  bool quantize = false;
  QuantStrategy quant_strategy = QuantStrategy::minmax;
  double alpha = stats::kSignificance;
  stats::ZeroHandling wilcoxon_zeros = stats::ZeroHandling::drop;
};

using Warnings = std::vector<std::string>;

/// Columns that can be summarised and correlated: the 21 metrics followed by
/// the three median human ratings.
inline constexpr std::size_t kFieldCount = kMetricCount + 3;
std::string field_name(std::size_t field);

// --- system summaries ------------------------------------------------------

struct FieldSummary {
  std::string field;
  std::size_t n = 0;
  std::optional<double> mean;
  std::optional<double> sd;  // sample standard deviation
  std::optional<double> p_value;  // Mann-Whitney vs the dataset's other system
  bool significant = false;
};

struct SystemSummary {
  std::string dataset;
  std::string system;
  std::size_t instances = 0;
  std::vector<FieldSummary> fields;  // kFieldCount entries
};

std::vector<SystemSummary> system_summary(const Corpus& corpus,
                                          std::span<const MetricVector> scores,
                                          const AnalysisConfig& config, Warnings& warnings);

// --- correlations ----------------------------------------------------------

enum class Grouping { dataset_system, dataset, system, all };
std::string_view grouping_name(Grouping g);

struct GroupKey {
  Grouping grouping = Grouping::all;
  std::string dataset;  // empty unless the grouping has a dataset
  std::string system;   // empty unless the grouping has a system
  std::string label() const;
};

struct CorrelationCell {
  std::optional<double> rho;
  std::size_t n = 0;
  std::optional<double> p_value;
  bool significant = false;
};

/// Spearman over the positions where both values exist (pairwise deletion).
CorrelationCell correlate(std::span<const std::optional<double>> x,
                          std::span<const std::optional<double>> y, double alpha);

struct WilliamsCell {
  std::optional<double> t;
  std::optional<double> p_value;
  std::size_t n = 0;
  bool indistinguishable = false;
};

struct CorrelationTable {
  GroupKey group;
  std::size_t instances = 0;
  std::vector<Metric> metrics;  // rows: metrics with at least one value
  /// cells[row][dimension]
  std::vector<std::array<CorrelationCell, 3>> cells;
  std::array<std::optional<Metric>, 3> best_wbm;
  std::array<std::optional<Metric>, 3> best_gbm;
  /// williams[dimension][row_a][row_b]
  std::array<std::vector<std::vector<WilliamsCell>>, 3> williams;
  /// metric_matrix[row_a][row_b]
  std::vector<std::vector<CorrelationCell>> metric_matrix;
};

std::vector<CorrelationTable> correlation_tables(const Corpus& corpus,
                                                 std::span<const MetricVector> scores,
                                                 const AnalysisConfig& config,
                                                 Warnings& warnings);

/// Independent-sample comparison of one metric's correlation between the two
/// systems of a dataset.
struct SystemContrast {
  std::string dataset;
  std::string system_a;
  std::string system_b;
  Metric metric;
  Dimension dimension;
  CorrelationCell a;
  CorrelationCell b;
  std::optional<double> z;
  std::optional<double> p_value;
  bool significant = false;
};

std::vector<SystemContrast> system_contrasts(const std::vector<CorrelationTable>& tables,
                                             const AnalysisConfig& config);

// --- ranking accuracy ------------------------------------------------------

enum class Relation { less, equal, greater };

Relation human_relation(int a, int b);
/// Orients by metric direction (lower-better metrics flip); |a-b| <= epsilon
/// is a tie.
Relation metric_relation(double a, double b, Orientation orientation, double epsilon);

/// Maps values onto the 1..6 rating scale. minmax: 1 + 5 (v - lo)/(hi - lo)
/// rounded half away from zero; eqfreq: ceil(6 rank / n) with tie-averaged
/// ranks. Constant input maps to 6 and sets *constant.
std::vector<int> quantize(std::span<const double> values, QuantStrategy strategy,
                          bool* constant = nullptr);

/// Per-pair correctness of a metric against human medians.
std::vector<bool> pair_agreement(std::span<const std::pair<double, double>> metric,
                                 std::span<const std::pair<int, int>> human,
                                 Orientation orientation, double epsilon);

/// Percentage of pairs whose metric relation matches the human one.
double ranking_accuracy(std::span<const std::pair<double, double>> metric,
                        std::span<const std::pair<int, int>> human, Orientation orientation,
                        double epsilon);

struct AccuracyRow {
  std::string dataset;
  Dimension dimension;
  std::string metric;  // metric name, or "rand" for the baseline row
  bool quantized = false;
  std::size_t pairs = 0;
  double accuracy = 0.0;         // percent
  double random_accuracy = 0.0;  // percent, over the same pairs
  std::optional<double> p_value; // Wilcoxon vs random
  bool significant = false;
};

/// Metrics that take part in ranking: every metric with an orientation.
bool is_ranked(Metric m);

std::vector<AccuracyRow> accuracy_table(const Corpus& corpus,
                                        std::span<const MetricVector> scores,
                                        const AnalysisConfig& config, Warnings& warnings);

// --- bins ------------------------------------------------------------------

enum class Bin { bad, average, good };
std::string_view bin_name(Bin b);
Bin bin_of(int median);

inline constexpr std::size_t kMinBinSize = 3;

struct BinRow {
  Metric metric;
  CorrelationCell bad;
  CorrelationCell rest;  // average and good pooled
  std::optional<double> z;
  std::optional<double> p_value;
  bool significant = false;
};

struct BinTable {
  std::string scope;  // "all" or a dataset
  Dimension dimension;
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> shares{};  // percent
  bool bad_sufficient = false;
  bool rest_sufficient = false;
  std::vector<BinRow> rows;
};

std::vector<BinTable> bin_analysis(const Corpus& corpus, std::span<const MetricVector> scores,
                                   const AnalysisConfig& config, Warnings& warnings);

// --- MR type split ---------------------------------------------------------

bool is_inform_type(const MeaningRepresentation& mr);

struct MrTypeRow {
  Metric metric;
  CorrelationCell inform;
  CorrelationCell other;
  std::optional<double> z;
  std::optional<double> p_value;
  bool significant = false;
};

struct MrTypeTable {
  std::string scope;
  Dimension dimension;
  std::size_t inform_count = 0;
  std::size_t other_count = 0;
  std::vector<MrTypeRow> rows;
};

std::vector<MrTypeTable> mr_type_split(const Corpus& corpus, std::span<const MetricVector> scores,
                                       const AnalysisConfig& config, Warnings& warnings);

// --- rater reliability -----------------------------------------------------

struct ReliabilityRow {
  std::string scope;      // "all" or a dataset
  std::string dimension;  // a dimension name, or "all" for the pooled ratings
  std::size_t items = 0;
  std::array<std::optional<stats::IccResult>, 3> models;  // indexed by IccModel
};

std::vector<ReliabilityRow> reliability(const Corpus& corpus, Warnings& warnings);

// --- full report -----------------------------------------------------------

struct AnalysisReport {
  std::vector<SystemSummary> system_summaries;
  std::vector<CorrelationTable> correlation_tables;
  std::vector<SystemContrast> system_contrasts;
  std::vector<AccuracyRow> accuracy_table;
  std::vector<BinTable> bin_table;
  std::vector<MrTypeTable> mr_type_split;
  std::vector<ReliabilityRow> reliability;
  Warnings warnings;
  std::vector<std::pair<std::string, std::string>> config_echo;
};

/// Throws std::invalid_argument when scores and corpus sizes differ.
AnalysisReport analyze(const Corpus& corpus, std::span<const MetricVector> scores,
                       const AnalysisConfig& config);

}  // namespace metricide
