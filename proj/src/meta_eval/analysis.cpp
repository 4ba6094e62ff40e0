#include <fmt/format.h>

#include "metricide/meta_eval.hpp"

namespace metricide {

AnalysisReport analyze(const Corpus& corpus, std::span<const MetricVector> scores,
                       const AnalysisConfig& config) {
  if (scores.size() != corpus.size()) {
    throw std::invalid_argument(fmt::format("analyze: {} score rows for {} instances",
                                            scores.size(), corpus.size()));
  }
  AnalysisReport r;
  r.system_summaries = system_summary(corpus, scores, config, r.warnings);
  r.correlation_tables = correlation_tables(corpus, scores, config, r.warnings);
  r.system_contrasts = system_contrasts(r.correlation_tables, config);
  r.accuracy_table = accuracy_table(corpus, scores, config, r.warnings);
  r.bin_table = bin_analysis(corpus, scores, config, r.warnings);
  r.mr_type_split = mr_type_split(corpus, scores, config, r.warnings);
  r.reliability = reliability(corpus, r.warnings);

  r.config_echo = {
      {"seed", fmt::format("{}", config.seed)},
      {"epsilon", fmt::format("{}", config.epsilon)},
      {"quantize", config.quantize ? "true" : "false"},
      {"quant_strategy", std::string(quant_strategy_name(config.quant_strategy))},
      {"alpha", fmt::format("{}", config.alpha)},
      {"wilcoxon_zeros", config.wilcoxon_zeros == stats::ZeroHandling::drop ? "drop" : "pratt"},
      {"random_generator", std::string(stats::kRandomGenerator)},
  };
  return r;
}

}  // namespace metricide
