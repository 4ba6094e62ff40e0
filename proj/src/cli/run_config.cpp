#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

#include "metricide/cli.hpp"

namespace metricide::cli {

MetricSelection parse_metric_list(std::string_view spec) {
  MetricSelection sel = MetricSelection::none();
  std::size_t start = 0;
  bool any = false;
  while (start <= spec.size()) {
    auto end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(start, end - start);
    start = end + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    const bool remove = item.front() == '-';
    if (remove) item.remove_prefix(1);
    if (item == "all") {
      if (remove) throw std::invalid_argument("--metrics: '-all' is not meaningful");
      sel = MetricSelection::all();
    } else if (auto m = metric_from_name(item)) {
      sel.set(*m, !remove);
    } else {
      throw std::invalid_argument(fmt::format("--metrics: unknown metric '{}'", item));
    }
    any = true;
  }
  if (!any) throw std::invalid_argument("--metrics: empty list");
  return sel;
}

MetricSelection effective_metrics(const RunConfig& config) {
  if (config.metrics) return parse_metric_list(*config.metrics);
  MetricSelection sel = MetricSelection::all();
  if (!config.embeddings) sel.set(Metric::sim, false);
  return sel;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value != nullptr && *env_value != '\0') {
    const std::string_view s(env_value);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
    throw std::invalid_argument(fmt::format("{} is not an unsigned integer: '{}'", kSeedEnv, s));
  }
  return 0;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& config) {
  auto path_or = [](const std::optional<std::filesystem::path>& p, std::string fallback) {
    return p ? p->generic_string() : fallback;
  };
  const auto sel = effective_metrics(config);
  std::string metrics;
  for (const auto& info : metric_catalogue()) {
    if (!sel.contains(info.metric)) continue;
    if (!metrics.empty()) metrics += ',';
    metrics += info.name;
  }
  const CorpusFormat fmt = config.format.value_or(format_from_path(config.input));
  return {
      {"input", config.input.generic_string()},
      {"format", fmt == CorpusFormat::csv ? "csv" : "json"},
      {"scores", path_or(config.scores, "")},
      {"embeddings", path_or(config.embeddings, "")},
      {"dictionary", path_or(config.dictionary, "default")},
      {"synonyms", path_or(config.synonyms, "")},
      {"metrics", metrics},
      {"lepor_unmatched", config.lepor_unmatched == LeporUnmatched::zero ? "zero" : "to_origin"},
      {"strict", config.strict ? "true" : "false"},
      {"lenient", config.lenient ? "true" : "false"},
  };
}

}  // namespace metricide::cli
