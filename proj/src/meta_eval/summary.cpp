#include <cmath>

#include "columns.hpp"

namespace metricide {

std::string field_name(std::size_t field) {
  if (field < kMetricCount) return std::string(metric_name(static_cast<Metric>(field)));
  return std::string(dimension_name(static_cast<Dimension>(field - kMetricCount)));
}

namespace detail {

std::optional<double> field_value(const Instance& inst, const MetricVector& mv,
                                  std::size_t field) {
  if (field < kMetricCount) return mv[static_cast<Metric>(field)];
  return static_cast<double>(inst.median(static_cast<Dimension>(field - kMetricCount)));
}

std::vector<std::optional<double>> column(const Corpus& corpus,
                                          std::span<const MetricVector> scores,
                                          std::span<const std::size_t> rows, std::size_t field) {
  std::vector<std::optional<double>> out;
  out.reserve(rows.size());
  for (std::size_t i : rows) out.push_back(field_value(corpus.instances[i], scores[i], field));
  return out;
}

Groups group_by(const Corpus& corpus, const std::function<std::string(const Instance&)>& key) {
  Groups g;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    g[key(corpus.instances[i])].push_back(i);
  }
  return g;
}

std::vector<std::size_t> all_rows(const Corpus& corpus) {
  std::vector<std::size_t> rows(corpus.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return rows;
}

std::vector<Metric> present_metrics(std::span<const MetricVector> scores,
                                    std::span<const std::size_t> rows) {
  std::vector<Metric> out;
  for (const auto& info : metric_catalogue()) {
    for (std::size_t i : rows) {
      if (scores[i][info.metric]) {
        out.push_back(info.metric);
        break;
      }
    }
  }
  return out;
}

void contrast(const CorrelationCell& a, const CorrelationCell& b, double alpha,
              std::optional<double>& z, std::optional<double>& p, bool& significant) {
  z.reset();
  p.reset();
  significant = false;
  if (!a.rho || !b.rho || a.n < 4 || b.n < 4) return;
  const auto r = stats::fisher_z_test(*a.rho, a.n, *b.rho, b.n);
  z = r.statistic;
  p = r.p_value;
  significant = r.p_value < alpha;
}

}  // namespace detail

namespace {

struct Moments {
  std::size_t n = 0;
  std::optional<double> mean;
  std::optional<double> sd;
};

Moments moments(const std::vector<double>& v) {
  Moments m;
  m.n = v.size();
  if (v.empty()) return m;
  double s = 0.0;
  for (double x : v) s += x;
  const double mean = s / static_cast<double>(v.size());
  m.mean = mean;
  if (v.size() >= 2) {
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    m.sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return m;
}

std::vector<double> present(const std::vector<std::optional<double>>& col) {
  std::vector<double> out;
  for (const auto& x : col) {
    if (x) out.push_back(*x);
  }
  return out;
}

}  // namespace

std::vector<SystemSummary> system_summary(const Corpus& corpus,
                                          std::span<const MetricVector> scores,
                                          const AnalysisConfig& config, Warnings& warnings) {
  std::vector<SystemSummary> out;
  const auto by_dataset = detail::group_by(corpus, [](const Instance& i) { return i.dataset; });
  for (const auto& [dataset, rows] : by_dataset) {
    std::map<std::string, std::vector<std::size_t>> by_system;
    for (std::size_t i : rows) by_system[corpus.instances[i].system].push_back(i);

    const std::size_t first = out.size();
    for (const auto& [system, sys_rows] : by_system) {
      SystemSummary s;
      s.dataset = dataset;
      s.system = system;
      s.instances = sys_rows.size();
      for (std::size_t f = 0; f < kFieldCount; ++f) {
        const auto m = moments(present(detail::column(corpus, scores, sys_rows, f)));
        s.fields.push_back({field_name(f), m.n, m.mean, m.sd, std::nullopt, false});
      }
      out.push_back(std::move(s));
    }

    if (by_system.size() != 2) {
      if (by_system.size() > 2) {
        warnings.push_back("system_summary: dataset " + dataset +
                           " has more than 2 systems; no significance marks");
      }
      continue;
    }
    auto& a = out[first];
    auto& b = out[first + 1];
    const auto& rows_a = by_system.begin()->second;
    const auto& rows_b = std::next(by_system.begin())->second;
    for (std::size_t f = 0; f < kFieldCount; ++f) {
      const auto va = present(detail::column(corpus, scores, rows_a, f));
      const auto vb = present(detail::column(corpus, scores, rows_b, f));
      if (va.empty() || vb.empty()) continue;
      const double p = stats::mann_whitney_u(va, vb).p_value;
      const bool sig = p < config.alpha;
      a.fields[f].p_value = b.fields[f].p_value = p;
      a.fields[f].significant = b.fields[f].significant = sig;
    }
  }
  return out;
}

}  // namespace metricide
