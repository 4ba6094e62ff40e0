#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace metricide {

/// The 21 automatic metrics, in the column order used by every table.
enum class Metric : std::size_t {
  ter,
  bleu1,
  bleu2,
  bleu3,
  bleu4,
  rouge,
  nist,
  lepor,
  cider,
  meteor,
  sim,
  re,
  msp,
  prs,
  len,
  wps,
  sps,
  cpw,
  spw,
  pol,
  ppw,
};

inline constexpr std::size_t kMetricCount = 21;

enum class MetricKind { word_based, grammar_based };

/// Which direction of the score means "better"; `none` for pure surface
/// statistics that carry no quality judgement.
enum class Orientation { higher_better, lower_better, none };

struct MetricInfo {
  Metric metric;
  std::string_view name;
  MetricKind kind;
  Orientation orientation;
};

const std::array<MetricInfo, kMetricCount>& metric_catalogue();
const MetricInfo& metric_info(Metric m);
std::string_view metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

/// All metric values for one instance; a value is absent when the metric was
/// disabled or is undefined for the instance (e.g. no parse score).
class MetricVector {
 public:
  std::optional<double>& operator[](Metric m) {
    return values_[static_cast<std::size_t>(m)];
  }
  const std::optional<double>& operator[](Metric m) const {
    return values_[static_cast<std::size_t>(m)];
  }

  bool operator==(const MetricVector&) const = default;

 private:
  std::array<std::optional<double>, kMetricCount> values_{};
};

/// Set of enabled metrics.
class MetricSelection {
 public:
  static MetricSelection all();
  static MetricSelection none() { return {}; }

  bool contains(Metric m) const { return enabled_[static_cast<std::size_t>(m)]; }
  void set(Metric m, bool on = true) { enabled_[static_cast<std::size_t>(m)] = on; }

 private:
  std::array<bool, kMetricCount> enabled_{};
};

}  // namespace metricide
