#include "metricide/metric_vector.hpp"

#include <stdexcept>

namespace metricide {

const std::array<MetricInfo, kMetricCount>& metric_catalogue() {
  using enum MetricKind;
  using enum Orientation;
  static const std::array<MetricInfo, kMetricCount> catalogue = {{
      {Metric::ter, "ter", word_based, lower_better},
      {Metric::bleu1, "bleu1", word_based, higher_better},
      {Metric::bleu2, "bleu2", word_based, higher_better},
      {Metric::bleu3, "bleu3", word_based, higher_better},
      {Metric::bleu4, "bleu4", word_based, higher_better},
      {Metric::rouge, "rouge", word_based, higher_better},
      {Metric::nist, "nist", word_based, higher_better},
      {Metric::lepor, "lepor", word_based, higher_better},
      {Metric::cider, "cider", word_based, higher_better},
      {Metric::meteor, "meteor", word_based, higher_better},
      {Metric::sim, "sim", word_based, higher_better},
      {Metric::re, "re", grammar_based, higher_better},
      {Metric::msp, "msp", grammar_based, lower_better},
      {Metric::prs, "prs", grammar_based, higher_better},
      {Metric::len, "len", grammar_based, none},
      {Metric::wps, "wps", grammar_based, none},
      {Metric::sps, "sps", grammar_based, none},
      {Metric::cpw, "cpw", grammar_based, none},
      {Metric::spw, "spw", grammar_based, none},
      {Metric::pol, "pol", grammar_based, none},
      {Metric::ppw, "ppw", grammar_based, none},
  }};
  return catalogue;
}

const MetricInfo& metric_info(Metric m) {
  return metric_catalogue()[static_cast<std::size_t>(m)];
}

std::string_view metric_name(Metric m) { return metric_info(m).name; }

std::optional<Metric> metric_from_name(std::string_view name) {
  for (const auto& info : metric_catalogue()) {
    if (info.name == name) return info.metric;
  }
  return std::nullopt;
}

MetricSelection MetricSelection::all() {
  MetricSelection s;
  s.enabled_.fill(true);
  return s;
}

}  // namespace metricide
