#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metricide/meta_eval.hpp"

// Column access shared by the analysis passes. A "field" is a metric index
// (0..20) or one of the three median human ratings (21..23).
namespace metricide::detail {

inline std::size_t metric_field(Metric m) { return static_cast<std::size_t>(m); }
inline std::size_t dimension_field(Dimension d) {
  return kMetricCount + static_cast<std::size_t>(d);
}

std::optional<double> field_value(const Instance& inst, const MetricVector& mv,
                                  std::size_t field);

std::vector<std::optional<double>> column(const Corpus& corpus,
                                          std::span<const MetricVector> scores,
                                          std::span<const std::size_t> rows, std::size_t field);

using Groups = std::map<std::string, std::vector<std::size_t>>;

/// Instance indices grouped by key, in key order then corpus order.
Groups group_by(const Corpus& corpus,
                const std::function<std::string(const Instance&)>& key);

std::vector<std::size_t> all_rows(const Corpus& corpus);

/// Metrics that have at least one value among `rows`.
std::vector<Metric> present_metrics(std::span<const MetricVector> scores,
                                    std::span<const std::size_t> rows);

/// Fisher z comparison of two independent correlation cells.
void contrast(const CorrelationCell& a, const CorrelationCell& b, double alpha,
              std::optional<double>& z, std::optional<double>& p, bool& significant);

}  // namespace metricide::detail
