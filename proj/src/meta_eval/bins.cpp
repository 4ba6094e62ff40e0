#include "columns.hpp"

namespace metricide {

std::string_view bin_name(Bin b) {
  switch (b) {
    case Bin::bad:
      return "bad";
    case Bin::average:
      return "average";
    case Bin::good:
      return "good";
  }
  return "?";
}

Bin bin_of(int median) {
  if (median <= 2) return Bin::bad;
  if (median >= 5) return Bin::good;
  return Bin::average;
}

bool is_inform_type(const MeaningRepresentation& mr) {
  return mr.act_type.starts_with("inform");
}

namespace {

std::vector<std::pair<std::string, std::vector<std::size_t>>> scopes(const Corpus& corpus) {
  std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
  out.emplace_back("all", detail::all_rows(corpus));
  for (auto& [d, rows] : detail::group_by(corpus, [](const Instance& i) { return i.dataset; })) {
    out.emplace_back(d, rows);
  }
  return out;
}

CorrelationCell group_cell(const Corpus& corpus, std::span<const MetricVector> scores,
                           const std::vector<std::size_t>& rows, Metric m, Dimension d,
                           double alpha) {
  const auto x = detail::column(corpus, scores, rows, detail::metric_field(m));
  const auto y = detail::column(corpus, scores, rows, detail::dimension_field(d));
  return correlate(x, y, alpha);
}

}  // namespace

std::vector<BinTable> bin_analysis(const Corpus& corpus, std::span<const MetricVector> scores,
                                   const AnalysisConfig& config, Warnings& warnings) {
  std::vector<BinTable> out;
  for (const auto& [scope, rows] : scopes(corpus)) {
    if (rows.empty()) continue;
    const auto metrics = detail::present_metrics(scores, rows);
    for (Dimension d : kDimensions) {
      BinTable t;
      t.scope = scope;
      t.dimension = d;
      std::vector<std::size_t> bad, rest;
      for (std::size_t i : rows) {
        const Bin b = bin_of(corpus.instances[i].median(d));
        ++t.counts[static_cast<std::size_t>(b)];
        (b == Bin::bad ? bad : rest).push_back(i);
      }
      for (std::size_t b = 0; b < 3; ++b) {
        t.shares[b] = 100.0 * static_cast<double>(t.counts[b]) / static_cast<double>(rows.size());
      }
      t.bad_sufficient = bad.size() >= kMinBinSize;
      t.rest_sufficient = rest.size() >= kMinBinSize;
      const std::string where = scope + "/" + std::string(dimension_name(d));
      if (!t.bad_sufficient) warnings.push_back("bin_analysis: bad bin too small in " + where);
      if (!t.rest_sufficient) {
        warnings.push_back("bin_analysis: average+good bin too small in " + where);
      }
      for (Metric m : metrics) {
        BinRow row{m, {}, {}, {}, {}, false};
        if (t.bad_sufficient) row.bad = group_cell(corpus, scores, bad, m, d, config.alpha);
        if (t.rest_sufficient) row.rest = group_cell(corpus, scores, rest, m, d, config.alpha);
        detail::contrast(row.bad, row.rest, config.alpha, row.z, row.p_value, row.significant);
        t.rows.push_back(row);
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<MrTypeTable> mr_type_split(const Corpus& corpus, std::span<const MetricVector> scores,
                                       const AnalysisConfig& config, Warnings& warnings) {
  std::vector<MrTypeTable> out;
  for (const auto& [scope, rows] : scopes(corpus)) {
    if (rows.empty()) continue;
    std::vector<std::size_t> inform, other;
    for (std::size_t i : rows) {
      (is_inform_type(corpus.instances[i].mr) ? inform : other).push_back(i);
    }
    if (inform.empty() || other.empty()) {
      warnings.push_back("mr_type_split: " + scope + " has only " +
                         (inform.empty() ? "non-inform" : "inform") + " MRs");
    }
    const auto metrics = detail::present_metrics(scores, rows);
    for (Dimension d : kDimensions) {
      MrTypeTable t{scope, d, inform.size(), other.size(), {}};
      for (Metric m : metrics) {
        MrTypeRow row{m, {}, {}, {}, {}, false};
        if (!inform.empty()) row.inform = group_cell(corpus, scores, inform, m, d, config.alpha);
        if (!other.empty()) row.other = group_cell(corpus, scores, other, m, d, config.alpha);
        detail::contrast(row.inform, row.other, config.alpha, row.z, row.p_value, row.significant);
        t.rows.push_back(row);
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace metricide
